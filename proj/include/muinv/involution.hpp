// involution.hpp
//
// Involutions in S_n: cycle sets, the twisted 0-Hecke conjugation action,
// the rank function, atoms and inverse atoms, the local-move graph on
// inverse atoms, transposition-like cover operators, and the exchange
// statement for atoms.
//
// A cycle is stored as (b, a) with b >= a; fixed points appear as (a, a).

#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "muinv/permutation.hpp"

namespace muinv {

using Cycle = std::pair<int, int>;  // (larger, smaller)
using CycleSet = std::vector<Cycle>;

class Involution {
 public:
  Involution() = default;

  explicit Involution(Permutation perm) : perm_(std::move(perm)) {
    if (compose(perm_, perm_) != Permutation::identity(perm_.size()))
      throw std::invalid_argument("permutation is not an involution");
  }

  static Involution identity(int n) { return Involution(Permutation::identity(n)); }

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }

  friend bool operator==(const Involution& a, const Involution& b) { return a.perm_ == b.perm_; }
  friend bool operator!=(const Involution& a, const Involution& b) { return !(a == b); }
  friend bool operator<(const Involution& a, const Involution& b) { return a.perm_ < b.perm_; }

 private:
  Permutation perm_;
};

// cycles listed by increasing smaller element
inline CycleSet cyc(const Involution& y) {
  CycleSet out;
  for (int i = 1; i <= y.size(); ++i)
    if (y(i) >= i) out.push_back({y(i), i});
  return out;
}

inline Involution involution_from_cycles(const CycleSet& cycles, int n) {
  std::vector<int> v(n, 0);
  for (const auto& [b, a] : cycles) {
    if (a < 1 || b > n || v[a - 1] || v[b - 1])
      throw std::invalid_argument("invalid cycle set");
    v[a - 1] = b;
    v[b - 1] = a;
  }
  for (int i = 0; i < n; ++i)
    if (!v[i]) throw std::invalid_argument("cycle set does not cover [n]");
  return Involution(Permutation(std::move(v)));
}

inline bool cycles_cross(const Cycle& c1, const Cycle& c2) {
  const int a1 = c1.second, b1 = c1.first, a2 = c2.second, b2 = c2.first;
  return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
}

inline bool cycles_nest(const Cycle& c1, const Cycle& c2) {
  const int a1 = c1.second, b1 = c1.first, a2 = c2.second, b2 = c2.first;
  return (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
}

// y ; s_i = s_i o y o s_i in the 0-Hecke monoid
inline Involution iprod_letter(const Involution& y, int i) {
  return Involution(hecke_mul_left(i, hecke_mul(y.perm(), i)));
}

// y ; w, folding a reduced word of w from left to right
inline Involution iprod(const Involution& y, const Permutation& w) {
  Involution z = y;
  for (int letter : any_reduced_word(w)) z = iprod_letter(z, letter);
  return z;
}

// rank in the involution order: (length + n - #cycles) / 2
inline int ellhat(const Involution& y) {
  return (length(y.perm()) + y.size() - static_cast<int>(cyc(y).size())) / 2;
}

// the involution w^{-1} o w reached by folding w through the conjugation action
inline Involution hecke_self_conjugate(const Permutation& w) {
  return iprod(Involution::identity(w.size()), w);
}

// three-pattern characterization of atom membership
inline bool is_atom_of(const Permutation& w, const Involution& y) {
  if (w.size() != y.size()) return false;
  CycleSet cycles;
  for (int i = 1; i <= y.size(); ++i)
    if (y(i) >= i) cycles.push_back({i, y(i)});  // here stored as (min, max)
  for (const auto& [i, j] : cycles) {
    if (w(i) < w(j)) return false;
    for (int k = i + 1; k < j; ++k)
      if (w(i) > w(k) && w(k) > w(j)) return false;
  }
  for (const auto& [i, j] : cycles) {
    for (const auto& [k, l] : cycles) {
      if (i < k && j < l) {
        if (!(w(k) >= w(l) && w(l) > w(i) && w(i) >= w(j))) return false;
      }
    }
  }
  return true;
}

inline std::vector<Permutation> atoms(const Involution& y) {
  std::vector<Permutation> out;
  const int target = ellhat(y);
  for_each_permutation(y.size(), [&](const Permutation& w) {
    if (length(w) == target && is_atom_of(w, y)) out.push_back(w);
  });
  return out;
}

inline std::vector<Permutation> inverse_atoms(const Involution& y) {
  std::vector<Permutation> out;
  for (const Permutation& w : atoms(y)) out.push_back(inverse(w));
  std::sort(out.begin(), out.end());
  return out;
}

// cached atom sets keyed by the involution; read-mostly after warmup
inline const std::vector<Permutation>& cached_atoms(const Involution& y) {
  static std::mutex mu;
  static std::map<Permutation, std::vector<Permutation>> table;
  std::scoped_lock lock(mu);
  auto it = table.find(y.perm());
  if (it == table.end()) it = table.emplace(y.perm(), atoms(y)).first;
  return it->second;
}

inline bool is_block_involution(const BlockWord& b) {
  const Permutation st = standardize(b);
  return compose(st, st) == Permutation::identity(st.size());
}

// block cycles: value pairs {Q(i), Q(j)} for each cycle (j, i) of std(Q),
// stored with the value at the earlier position first (it is the larger one)
inline CycleSet block_cycles(const BlockWord& q) {
  const Permutation st = standardize(q);
  if (compose(st, st) != Permutation::identity(st.size()))
    throw std::invalid_argument("block word does not standardize to an involution");
  CycleSet out;
  std::vector<std::pair<int, Cycle>> keyed;
  for (int i = 1; i <= st.size(); ++i) {
    if (st(i) >= i) {
      const Cycle c{q[i - 1], q[st(i) - 1]};
      keyed.push_back({std::min(c.first, c.second), c});
    }
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [k, c] : keyed) out.push_back(c);
  return out;
}

// block word over the alphabet of `cycles` realizing exactly those cycles
inline BlockWord block_word_from_cycles(const CycleSet& cycles) {
  std::vector<int> alphabet;
  for (const auto& [b, a] : cycles) {
    alphabet.push_back(a);
    if (b != a) alphabet.push_back(b);
  }
  std::sort(alphabet.begin(), alphabet.end());
  const int k = static_cast<int>(alphabet.size());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), v) -
                            alphabet.begin()) + 1;
  };
  std::vector<int> st(k, 0);
  for (const auto& [b, a] : cycles) {
    st[rank(a) - 1] = rank(b);
    st[rank(b) - 1] = rank(a);
  }
  return destandardize(Permutation(std::move(st)), alphabet);
}

// block atoms: words over the same alphabet standardizing to atoms
inline std::vector<BlockWord> block_atoms(const BlockWord& b) {
  const Permutation st = standardize(b);
  const Involution y{st};
  const std::vector<int> alphabet = sorted_alphabet(b);
  std::vector<BlockWord> out;
  for (const Permutation& w : cached_atoms(y)) out.push_back(destandardize(w, alphabet));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<BlockWord> block_inverse_atoms(const BlockWord& b) {
  const Permutation st = standardize(b);
  const Involution y{st};
  const std::vector<int> alphabet = sorted_alphabet(b);
  std::vector<BlockWord> out;
  for (const Permutation& w : cached_atoms(y)) out.push_back(destandardize(inverse(w), alphabet));
  std::sort(out.begin(), out.end());
  return out;
}

// local-move graph on inverse atoms: u ~ v when they differ in three
// consecutive entries by (c,a,b) <-> (b,c,a) with a < b < c
inline std::vector<std::pair<Permutation, Permutation>> atom_graph(const Involution& y) {
  const std::vector<Permutation> verts = inverse_atoms(y);
  std::vector<std::pair<Permutation, Permutation>> edges;
  auto connected = [](const Permutation& u, const Permutation& v) {
    const int n = u.size();
    for (int p = 1; p + 2 <= n; ++p) {
      bool same_elsewhere = true;
      for (int q = 1; q <= n && same_elsewhere; ++q)
        if (q < p || q > p + 2) same_elsewhere = (u(q) == v(q));
      if (!same_elsewhere) continue;
      const int c = u(p), a = u(p + 1), b = u(p + 2);
      if (a < b && b < c && v(p) == b && v(p + 1) == c && v(p + 2) == a) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (connected(verts[i], verts[j]) || connected(verts[j], verts[i]))
        edges.push_back({verts[i], verts[j]});
  return edges;
}

namespace detail {

// Cover-table action on the two cycles containing i and j.  P is the cycle
// with the smaller minimum, Q the other; both may be fixed points.  Returns
// the replacement cycles when (i, j) labels a table row, nothing otherwise.
inline std::optional<CycleSet> cover_table_action(int i, int j, Cycle P, Cycle Q) {
  const int a = P.second, b = P.first;  // a <= b
  const int c = Q.second, d = Q.first;  // c <= d
  auto is = [&](int x, int y) { return i == x && j == y; };
  if (a == b && c == d) {               // two fixed points
    if (is(a, c)) return CycleSet{{c, a}};
    return std::nullopt;
  }
  if (a < b && c == d) {                // 2-cycle then fixed point
    if (b < c && (is(b, c) || is(a, c))) return CycleSet{{c, a}, {b, b}};
    return std::nullopt;                // fixed point inside the cycle: no row
  }
  if (a == b && c < d) {                // fixed point then 2-cycle
    if (a < c && (is(a, d) || is(a, c))) return CycleSet{{d, a}, {c, c}};
    return std::nullopt;
  }
  // two 2-cycles
  if (b < c) {                          // disjoint, P entirely before Q
    if (is(b, c)) return CycleSet{{c, a}, {d, b}};
    if (is(a, c) || is(b, d) || is(a, d)) return CycleSet{{d, a}, {b, b}, {c, c}};
    return std::nullopt;
  }
  if (a < c && c < b && b < d) {        // crossing
    if (is(a, c) || is(a, d) || is(b, d)) return CycleSet{{d, a}, {b, c}};
    return std::nullopt;
  }
  return std::nullopt;                  // nested: no row
}

}  // namespace detail

// transposition-like operator on involutions; returns y when (i, j) does not
// label a table row for the configuration of the cycles through i and j
inline Involution t_I(int i, int j, const Involution& y) {
  if (i >= j) throw std::invalid_argument("t_I requires i < j");
  if (i < 1 || j > y.size()) throw std::invalid_argument("t_I: value out of range");
  const Cycle ci{std::max(i, y(i)), std::min(i, y(i))};
  const Cycle cj{std::max(j, y(j)), std::min(j, y(j))};
  if (ci == cj) return y;  // i, j lie in one cycle
  const bool ci_first = ci.second < cj.second;
  const auto replacement =
      detail::cover_table_action(i, j, ci_first ? ci : cj, ci_first ? cj : ci);
  if (!replacement) return y;
  CycleSet cycles;
  for (const Cycle& c : cyc(y))
    if (c != ci && c != cj) cycles.push_back(c);
  for (const Cycle& c : *replacement) cycles.push_back(c);
  return involution_from_cycles(cycles, y.size());
}

// covers of y in the involution order, each with its operator labels
inline std::map<Permutation, std::vector<std::pair<int, int>>> involution_covers_up(
    const Involution& y) {
  std::map<Permutation, std::vector<std::pair<int, int>>> out;
  const int target = ellhat(y) + 1;
  for (int i = 1; i <= y.size(); ++i) {
    for (int j = i + 1; j <= y.size(); ++j) {
      const Involution z = t_I(i, j, y);
      if (z != y && ellhat(z) == target) out[z.perm()].push_back({i, j});
    }
  }
  return out;
}

// atoms of the cover z recovered from atoms of y by right transpositions
inline std::set<Permutation> atoms_transposition(const Involution& y, const Involution& z) {
  if (ellhat(z) != ellhat(y) + 1 || !bruhat_leq(y.perm(), z.perm()))
    throw std::invalid_argument("atoms_transposition: not a cover");
  std::set<Permutation> out;
  for (int i = 1; i <= y.size(); ++i) {
    for (int j = i + 1; j <= y.size(); ++j) {
      if (t_I(i, j, y) != z) continue;
      for (const Permutation& v : cached_atoms(y)) {
        const Permutation w = right_mul_t(v, i, j);
        if (length(w) == length(v) + 1) out.insert(w);
      }
    }
  }
  return out;
}

// whether w is an atom of some involution
inline bool is_atom(const Permutation& w) {
  return length(w) == ellhat(hecke_self_conjugate(w));
}

// the unique second atom u != v of y with u lessdot w, given v in A(y),
// v lessdot w and w an atom of no involution
inline Permutation atom_exchange(const Involution& y, const Permutation& v,
                                 const Permutation& w) {
  if (!is_atom_of(v, y) || length(v) != ellhat(y))
    throw std::invalid_argument("atom_exchange: v is not an atom of y");
  if (length(w) != length(v) + 1 || !bruhat_leq(v, w))
    throw std::invalid_argument("atom_exchange: v is not covered by w");
  if (is_atom(w)) throw std::invalid_argument("atom_exchange: w is an atom");
  std::vector<Permutation> found;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      const Permutation u = right_mul_t(w, i, j);
      if (u == v || length(u) != length(w) - 1) continue;
      if (is_atom_of(u, y) && length(u) == ellhat(y)) found.push_back(u);
    }
  }
  if (found.size() != 1) throw std::logic_error("atom_exchange: witness not unique");
  return found.front();
}

}  // namespace muinv
