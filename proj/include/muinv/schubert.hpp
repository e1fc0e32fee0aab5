// schubert.hpp
//
// Schubert and Grothendieck polynomials via divided differences from the
// staircase monomial, Monk and transition expansions, and exact expansion of
// a polynomial in the Schubert basis.

#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "muinv/permutation.hpp"
#include "muinv/polynomial.hpp"

namespace muinv {

inline MultiPolynomial staircase_monomial(int n) {
  Mono m(n, 0);
  for (int i = 0; i < n; ++i) m[i] = n - 1 - i;
  return MultiPolynomial::monomial(std::move(m), 1);
}

namespace detail {

// drop trailing fixed points; both polynomial families are stable under the
// embedding S_m -> S_n, so chains can run at the essential size
inline Permutation essential_part(const Permutation& w) {
  int m = w.size();
  while (m > 1 && w(m) == m) --m;
  return truncate(w, m);
}

// shared memoized divided-difference recursion from the staircase; Op maps
// (letter, polynomial) to the next polynomial down the chain
template <typename Op>
class StaircaseTable {
 public:
  StaircaseTable(int n, Op op) : n_(n), op_(std::move(op)) {}

  int n() const { return n_; }

  const MultiPolynomial& get(const Permutation& w) {
    if (w.size() != n_) throw std::invalid_argument("polynomial table: wrong ambient size");
    auto it = full_.find(w);
    if (it != full_.end()) return it->second;
    MultiPolynomial value = core(detail::essential_part(w)).extended(n_);
    return full_.emplace(w, std::move(value)).first->second;
  }

 private:
  // polynomial of w in w.size() variables, for w with no trailing fixed point
  const MultiPolynomial& core(const Permutation& w) {
    auto it = core_.find(w);
    if (it != core_.end()) return it->second;
    const int m = w.size();
    MultiPolynomial value(m);
    if (w == Permutation::longest(m)) {
      value = staircase_monomial(m);
    } else {
      int i = 1;
      while (has_right_descent(w, i)) ++i;
      const Permutation up = detail::essential_part(right_mul_s(w, i));
      value = op_(i, up.size() == m ? core(up) : core(up).extended(m));
    }
    return core_.emplace(w, std::move(value)).first->second;
  }

  int n_;
  Op op_;
  std::unordered_map<Permutation, MultiPolynomial, PermutationHash> full_;
  std::unordered_map<Permutation, MultiPolynomial, PermutationHash> core_;
};

struct DividedDifferenceOp {
  MultiPolynomial operator()(int i, const MultiPolynomial& f) const {
    return divided_difference(i, f);
  }
};

struct IsobaricOp {
  MultiPolynomial operator()(int i, const MultiPolynomial& f) const {
    return isobaric_divided_difference(i, f);
  }
};

}  // namespace detail

// memoized Schubert polynomials for a fixed ambient S_n
class SchubertTable {
 public:
  explicit SchubertTable(int n) : table_(n, detail::DividedDifferenceOp{}) {}
  int n() const { return table_.n(); }
  const MultiPolynomial& schubert(const Permutation& w) { return table_.get(w); }

 private:
  detail::StaircaseTable<detail::DividedDifferenceOp> table_;
};

class GrothendieckTable {
 public:
  explicit GrothendieckTable(int n) : table_(n, detail::IsobaricOp{}) {}
  int n() const { return table_.n(); }
  const MultiPolynomial& grothendieck(const Permutation& w) { return table_.get(w); }

 private:
  detail::StaircaseTable<detail::IsobaricOp> table_;
};

inline MultiPolynomial schubert(const Permutation& w) {
  SchubertTable table(w.size());
  return table.schubert(w);
}

inline MultiPolynomial grothendieck(const Permutation& w) {
  GrothendieckTable table(w.size());
  return table.grothendieck(w);
}

// Monk covers: {w t_{kl} : k <= r < l, one more inversion}, within S_n
inline std::set<Permutation> monk_expand(const Permutation& w, int r) {
  if (r < 1 || r > w.size()) throw std::invalid_argument("monk_expand: index out of range");
  std::set<Permutation> out;
  for (int k = 1; k <= r; ++k) {
    for (int l = r + 1; l <= w.size(); ++l) {
      const Permutation u = right_mul_t(w, k, l);
      if (length(u) == length(w) + 1) out.insert(u);
    }
  }
  return out;
}

// transition covers for x_r S_v, computed in S_{n+1} so that every needed
// cover v t_{r,s} exists
inline std::pair<std::set<Permutation>, std::set<Permutation>> transition_expand(
    const Permutation& v, int r) {
  if (r < 1 || r > v.size()) throw std::invalid_argument("transition_expand: index");
  const Permutation vp = pad(v, v.size() + 1);
  std::set<Permutation> up, down;
  for (int s = r + 1; s <= vp.size(); ++s) {
    const Permutation u = right_mul_t(vp, r, s);
    if (length(u) == length(vp) + 1) up.insert(u);
  }
  for (int h = 1; h < r; ++h) {
    const Permutation u = right_mul_t(vp, h, r);
    if (length(u) == length(vp) + 1) down.insert(u);
  }
  return {std::move(up), std::move(down)};
}

// exact expansion of f in the Schubert basis of S_m where m = f.nvars();
// every exponent vector must fit under the staircase (alpha_i <= m - i).
// Coefficients are extracted by divided differences along the left weak
// order, one homogeneous component at a time.
inline std::map<Permutation, long long> expand_in_schubert_basis(const MultiPolynomial& f) {
  const int m = f.nvars();
  for (const auto& [mono, c] : f.terms()) {
    for (int i = 0; i < m; ++i)
      if (mono[i] > m - 1 - i)
        throw std::invalid_argument("expand_in_schubert_basis: exponent exceeds staircase");
  }
  std::map<Permutation, long long> out;
  const int dmax = f.degree();
  for (int d = 0; d <= dmax; ++d) {
    const MultiPolynomial fd = f.homogeneous_component(d);
    if (fd.is_zero()) continue;
    std::map<Permutation, MultiPolynomial> level{{Permutation::identity(m), fd}};
    for (int depth = 0; depth < d; ++depth) {
      std::map<Permutation, MultiPolynomial> next;
      for (const auto& [u, g] : level) {
        for (int i = 1; i < m; ++i) {
          if (!has_left_ascent(u, i)) continue;  // keep s_i u reduced over u
          const Permutation su = left_mul_s(i, u);
          if (next.count(su)) continue;
          MultiPolynomial h = divided_difference(i, g);
          if (!h.is_zero()) next.emplace(su, std::move(h));
        }
      }
      level = std::move(next);
    }
    for (const auto& [u, g] : level) {
      const long long c = g.constant_term();
      if (c != 0) out[u] += c;
    }
  }
  return out;
}

}  // namespace muinv
