// mu_involution.hpp
//
// Mu-involutions: permutations whose blocks under a composition standardize
// to involutions.  Provides the blockwise 0-Hecke action, reduced mu-words
// and their BFS closure, atoms, the strong and weak orders, transposition
// operators on covers, the exchange statement, and cross-composition
// refinement relations.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "muinv/composition.hpp"
#include "muinv/involution.hpp"
#include "muinv/permutation.hpp"

namespace muinv {

class MuInvolution {
 public:
  MuInvolution() = default;

  MuInvolution(Permutation perm, Composition mu)
      : perm_(std::move(perm)), mu_(std::move(mu)) {
    if (perm_.size() != mu_.n())
      throw std::invalid_argument("mu-involution: composition size mismatch");
    for (int k = 1; k <= mu_.num_blocks(); ++k) {
      if (!is_block_involution(block(k)))
        throw std::invalid_argument("block " + std::to_string(k) +
                                    " does not standardize to an involution");
    }
  }

  static MuInvolution identity(const Composition& mu) {
    return MuInvolution(Permutation::identity(mu.n()), mu);
  }

  // internal factory for permutations already known to be mu-involutions
  // (images of the action, table elements); skips block validation
  static MuInvolution trusted(Permutation perm, Composition mu) {
    MuInvolution out;
    out.perm_ = std::move(perm);
    out.mu_ = std::move(mu);
    return out;
  }

  const Permutation& perm() const { return perm_; }
  const Composition& mu() const { return mu_; }
  int size() const { return perm_.size(); }

  BlockWord block(int k) const {
    BlockWord b;
    for (int p = mu_.block_start(k) + 1; p <= mu_.block_end(k); ++p) b.push_back(perm_(p));
    return b;
  }

  std::vector<BlockWord> blocks() const {
    std::vector<BlockWord> out;
    for (int k = 1; k <= mu_.num_blocks(); ++k) out.push_back(block(k));
    return out;
  }

  // block containing the value v (blocks partition positions; values are
  // located through the inverse permutation)
  int block_of_value(int v) const {
    for (int p = 1; p <= perm_.size(); ++p)
      if (perm_(p) == v) return mu_.block_of_position(p);
    throw std::invalid_argument("value out of range");
  }

  // append n+1 as a fixed point in a new final singleton block
  MuInvolution padded() const {
    std::vector<int> v = perm_.oneline();
    v.push_back(perm_.size() + 1);
    return MuInvolution(Permutation(std::move(v)), mu_.padded());
  }

  // drop a final singleton fixed-point block when present
  MuInvolution unpadded() const {
    const int n = perm_.size();
    if (mu_.part(mu_.num_blocks()) != 1 || perm_(n) != n) return *this;
    std::vector<int> v(perm_.oneline().begin(), perm_.oneline().end() - 1);
    std::vector<int> parts(mu_.parts().begin(), mu_.parts().end() - 1);
    return MuInvolution(Permutation(std::move(v)), Composition(std::move(parts)));
  }

  friend bool operator==(const MuInvolution& a, const MuInvolution& b) {
    return a.mu_ == b.mu_ && a.perm_ == b.perm_;
  }
  friend bool operator!=(const MuInvolution& a, const MuInvolution& b) { return !(a == b); }
  friend bool operator<(const MuInvolution& a, const MuInvolution& b) {
    if (a.mu_ != b.mu_) return a.mu_ < b.mu_;
    return a.perm_ < b.perm_;
  }

 private:
  Permutation perm_;
  Composition mu_;
};

// cycles block by block, within a block by increasing smaller element
inline CycleSet cyc_mu(const MuInvolution& pi) {
  CycleSet out;
  for (int k = 1; k <= pi.mu().num_blocks(); ++k)
    for (const Cycle& c : block_cycles(pi.block(k))) out.push_back(c);
  return out;
}

// per-block cycle sets, in block order
inline std::vector<CycleSet> cyc_mu_blocks(const MuInvolution& pi) {
  std::vector<CycleSet> out;
  for (int k = 1; k <= pi.mu().num_blocks(); ++k) out.push_back(block_cycles(pi.block(k)));
  return out;
}

// the unique involution with the same cycle set
inline Involution y_of(const MuInvolution& pi) {
  return involution_from_cycles(cyc_mu(pi), pi.size());
}

namespace detail {

struct MuActResult {
  Permutation perm;
  bool within = false;
};

// core of the action on a bare permutation; the result is again a
// mu-involution whenever the input is
inline MuActResult mu_act_core(const Composition& mu, const Permutation& p, int i) {
  const int n = p.size();
  if (i < 1 || i >= n) throw std::invalid_argument("mu_act: letter out of range");
  int pos_i = 0, pos_j = 0;
  for (int t = 1; t <= n; ++t) {
    if (p(t) == i) pos_i = t;
    else if (p(t) == i + 1) pos_j = t;
  }
  const int bi = mu.block_of_position(pos_i);
  const int bj = mu.block_of_position(pos_j);
  if (bi != bj) {
    if (pos_i > pos_j) return {p, false};  // absorb
    std::vector<int> v = p.oneline();
    std::swap(v[pos_i - 1], v[pos_j - 1]);
    return {Permutation(std::move(v)), false};
  }
  int r = 0;  // relative value of i inside its block
  for (int t = mu.block_start(bi) + 1; t <= mu.block_end(bi); ++t)
    if (p(t) <= i) ++r;
  const int g = mu.block_start(bi) + r;
  const Permutation q = has_right_descent(p, g) ? p : right_mul_s(p, g);
  return {hecke_mul_left(i, q), true};
}

}  // namespace detail

// pi o_mu s_i: between blocks a value swap, within a block the twisted
// conjugation of the block involution
inline MuInvolution mu_act(const MuInvolution& pi, int i) {
  return MuInvolution::trusted(detail::mu_act_core(pi.mu(), pi.perm(), i).perm, pi.mu());
}

inline MuInvolution mu_hecke_fold(const Composition& mu, const Word& a) {
  MuInvolution pi = MuInvolution::identity(mu);
  for (int letter : a) pi = mu_act(pi, letter);
  return pi;
}

// fold a reduced word of w through the action; well defined on the 0-Hecke
// monoid, so the choice of word is immaterial
inline MuInvolution mu_act_perm(const Composition& mu, const Permutation& w) {
  return mu_hecke_fold(mu, any_reduced_word(w));
}

// BFS closure of the action from the identity: minimal word lengths and the
// within/between split of each length
class MuTable {
 public:
  struct Info {
    int len = 0;
    int within = 0;
    int between = 0;
  };

  explicit MuTable(Composition mu) : mu_(std::move(mu)) {
    const int n = mu_.n();
    std::vector<Permutation> frontier{Permutation::identity(n)};
    info_[frontier.front()] = Info{};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation& p : frontier) {
        const Info base = info_.at(p);
        for (int i = 1; i < n; ++i) {
          detail::MuActResult step = detail::mu_act_core(mu_, p, i);
          if (step.perm == p) continue;
          Info cand{base.len + 1, base.within + (step.within ? 1 : 0),
                    base.between + (step.within ? 0 : 1)};
          auto it = info_.find(step.perm);
          if (it == info_.end()) {
            info_.emplace(step.perm, cand);
            next.push_back(std::move(step.perm));
          } else if (it->second.len == cand.len &&
                     (it->second.within != cand.within || it->second.between != cand.between)) {
            split_consistent_ = false;
          }
        }
      }
      frontier = std::move(next);
    }
    elements_.reserve(info_.size());
    for (const auto& [p, inf] : info_) elements_.push_back(p);
    std::sort(elements_.begin(), elements_.end());
  }

  const Composition& mu() const { return mu_; }
  bool contains(const Permutation& p) const { return info_.count(p) > 0; }

  const Info& info(const Permutation& p) const {
    auto it = info_.find(p);
    if (it == info_.end()) throw std::invalid_argument("not a mu-involution for this composition");
    return it->second;
  }

  // all mu-involutions for this composition, sorted by one-line notation
  const std::vector<Permutation>& elements() const { return elements_; }

  // the within/between split is independent of the reduced word chosen
  bool split_consistent() const { return split_consistent_; }

 private:
  Composition mu_;
  std::unordered_map<Permutation, Info, PermutationHash> info_;
  std::vector<Permutation> elements_;
  bool split_consistent_ = true;
};

// process-wide table registry; built once per composition, read-only after
inline const MuTable& mu_table(const Composition& mu) {
  static std::mutex lock;
  static std::map<Composition, std::unique_ptr<MuTable>> registry;
  std::scoped_lock guard(lock);
  auto& slot = registry[mu];
  if (!slot) slot = std::make_unique<MuTable>(mu);
  return *slot;
}

struct EllMu {
  int total;
  int within;
  int between;
};

inline EllMu ell_mu(const MuInvolution& pi) {
  const MuTable::Info& inf = mu_table(pi.mu()).info(pi.perm());
  return {inf.len, inf.within, inf.between};
}

// inverse atoms: all concatenations of inverse block atoms
inline std::vector<Permutation> mu_inverse_atoms(const MuInvolution& pi) {
  std::vector<std::vector<BlockWord>> choices;
  for (int k = 1; k <= pi.mu().num_blocks(); ++k)
    choices.push_back(block_inverse_atoms(pi.block(k)));
  std::vector<Permutation> out;
  std::vector<int> current;
  std::function<void(std::size_t)> build = [&](std::size_t k) {
    if (k == choices.size()) {
      out.push_back(Permutation(current));
      return;
    }
    for (const BlockWord& q : choices[k]) {
      current.insert(current.end(), q.begin(), q.end());
      build(k + 1);
      current.resize(current.size() - q.size());
    }
  };
  build(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Permutation> mu_atoms(const MuInvolution& pi) {
  std::vector<Permutation> out;
  for (const Permutation& u : mu_inverse_atoms(pi)) out.push_back(inverse(u));
  std::sort(out.begin(), out.end());
  return out;
}

// whether w is a mu-atom; if so, the mu-involution it is an atom of
inline std::optional<MuInvolution> mu_atom_target(const Composition& mu, const Permutation& w) {
  const MuInvolution sigma = mu_act_perm(mu, w);
  if (ell_mu(sigma).total != length(w)) return std::nullopt;
  return sigma;
}

// disjoint union of the reduced words of the atoms
inline std::set<Word> mu_reduced_words(const MuInvolution& pi) {
  std::set<Word> out;
  for (const Permutation& w : mu_atoms(pi)) {
    for (const Word& a : reduced_words(w)) out.insert(a);
  }
  return out;
}

inline long long count_reduced_mu_words(const MuInvolution& pi) {
  long long total = 0;
  for (const Permutation& w : mu_atoms(pi)) total += reduced_word_count(w);
  return total;
}

// strong order: every atom of tau dominates some atom of pi
inline bool mu_bruhat_leq(const MuInvolution& pi, const MuInvolution& tau) {
  if (pi.mu() != tau.mu()) throw std::invalid_argument("mu_bruhat_leq: composition mismatch");
  const std::vector<Permutation> lower = mu_atoms(pi);
  for (const Permutation& w : mu_atoms(tau)) {
    bool dominated = false;
    for (const Permutation& v : lower) {
      if (bruhat_leq(v, w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

// covers in the weak order, labeled by the acting letter
inline std::vector<std::pair<int, MuInvolution>> weak_mu_covers(const MuInvolution& pi) {
  std::vector<std::pair<int, MuInvolution>> out;
  for (int i = 1; i < pi.size(); ++i) {
    MuInvolution tau = mu_act(pi, i);
    if (tau.perm() != pi.perm()) out.push_back({i, std::move(tau)});
  }
  return out;
}

// transposition operator: if some atom v of pi has v lessdot v t_{ij} with
// v t_{ij} again a mu-atom, the target is independent of v and is returned;
// otherwise pi itself.  i < j are values.
inline MuInvolution t_mu(int i, int j, const MuInvolution& pi) {
  if (i >= j) throw std::invalid_argument("t_mu requires i < j");
  if (i < 1 || j > pi.size()) throw std::invalid_argument("t_mu: value out of range");
  for (const Permutation& u : mu_inverse_atoms(pi)) {
    const Permutation up = left_mul_t(i, j, u);
    if (length(up) != length(u) + 1) continue;
    const auto target = mu_atom_target(pi.mu(), inverse(up));
    if (target) return *target;
  }
  return pi;
}

namespace detail {

struct LocatedCycle {
  int block = 0;   // 1-based block index
  Cycle cycle{0, 0};
};

inline LocatedCycle locate_cycle(const std::vector<CycleSet>& blocks, int value) {
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (const Cycle& c : blocks[k]) {
      if (c.first == value || c.second == value)
        return {static_cast<int>(k) + 1, c};
    }
  }
  throw std::invalid_argument("value not present in any cycle");
}

}  // namespace detail

// cycle-level transposition operator: exchange the values i and j inside the
// cycle set, break pairs that become increasing into fixed points, with the
// same-block corrections that keep it aligned with t_mu on covers
inline MuInvolution v_op(int i, int j, const MuInvolution& pi) {
  if (i >= j) throw std::invalid_argument("v_op requires i < j");
  std::vector<CycleSet> blocks = cyc_mu_blocks(pi);
  const auto li = detail::locate_cycle(blocks, i);
  const auto lj = detail::locate_cycle(blocks, j);

  const bool same_block = li.block == lj.block;
  const bool distinct_cycles = li.cycle != lj.cycle;
  const bool special = same_block && distinct_cycles && i == li.cycle.second &&
                       j == lj.cycle.first && li.cycle.second < lj.cycle.second &&
                       !cycles_nest(li.cycle, lj.cycle);

  if (special) {
    CycleSet replaced{{j, i}};
    std::vector<int> leftovers;
    for (int v : {li.cycle.first, li.cycle.second, lj.cycle.first, lj.cycle.second})
      if (v != i && v != j) leftovers.push_back(v);
    std::sort(leftovers.begin(), leftovers.end());
    leftovers.erase(std::unique(leftovers.begin(), leftovers.end()), leftovers.end());
    if (leftovers.size() == 2 && cycles_cross(li.cycle, lj.cycle)) {
      replaced.push_back({leftovers[1], leftovers[0]});
    } else {
      for (int v : leftovers) replaced.push_back({v, v});
    }
    CycleSet& blk = blocks[li.block - 1];
    CycleSet rebuilt;
    for (const Cycle& c : blk)
      if (c != li.cycle && c != lj.cycle) rebuilt.push_back(c);
    rebuilt.insert(rebuilt.end(), replaced.begin(), replaced.end());
    blk = std::move(rebuilt);
  } else {
    for (CycleSet& blk : blocks) {
      CycleSet rebuilt;
      for (Cycle c : blk) {
        auto sub = [&](int v) { return v == i ? j : (v == j ? i : v); };
        c = {sub(c.first), sub(c.second)};
        if (c.first < c.second) {
          rebuilt.push_back({c.first, c.first});
          rebuilt.push_back({c.second, c.second});
        } else {
          rebuilt.push_back(c);
        }
      }
      blk = std::move(rebuilt);
    }
  }

  std::vector<int> oneline;
  for (const CycleSet& blk : blocks) {
    const BlockWord w = block_word_from_cycles(blk);
    oneline.insert(oneline.end(), w.begin(), w.end());
  }
  return MuInvolution(Permutation(std::move(oneline)), pi.mu());
}

// atoms of the cover tau from atoms of pi by right transpositions
inline std::set<Permutation> mu_atom_transposition(const MuInvolution& pi,
                                                   const MuInvolution& tau) {
  if (pi.mu() != tau.mu()) throw std::invalid_argument("composition mismatch");
  if (ell_mu(tau).total != ell_mu(pi).total + 1 || !mu_bruhat_leq(pi, tau))
    throw std::invalid_argument("mu_atom_transposition: not a cover");
  std::set<Permutation> out;
  const std::vector<Permutation> lower = mu_atoms(pi);
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      if (t_mu(i, j, pi) != tau) continue;
      for (const Permutation& v : lower) {
        const Permutation w = right_mul_t(v, i, j);
        if (length(w) == length(v) + 1) out.insert(w);
      }
    }
  }
  return out;
}

inline bool is_mu_reduced(const Word& a, const Composition& mu) {
  return ell_mu(mu_hecke_fold(mu, a)).total == static_cast<int>(a.size());
}

// (a, m) is nearly mu-reduced when a is not mu-reduced but deleting the
// letter at position m (1-based) leaves a reduced mu-word; the target is the
// mu-involution of the deleted word
inline std::optional<MuInvolution> nearly_mu_reduced(const Word& a, int m,
                                                     const Composition& mu) {
  if (m < 1 || m > static_cast<int>(a.size()))
    throw std::invalid_argument("nearly_mu_reduced: index out of range");
  if (is_mu_reduced(a, mu)) return std::nullopt;
  Word b;
  for (int t = 1; t <= static_cast<int>(a.size()); ++t)
    if (t != m) b.push_back(a[t - 1]);
  const MuInvolution tau = mu_hecke_fold(mu, b);
  if (ell_mu(tau).total != static_cast<int>(b.size())) return std::nullopt;
  return tau;
}

// the unique k != m with (a, k) nearly mu-reduced for the same target
inline int mu_exchange(const Word& a, int m, const Composition& mu) {
  const auto tau = nearly_mu_reduced(a, m, mu);
  if (!tau) throw std::invalid_argument("mu_exchange: (a, m) is not nearly mu-reduced");
  std::vector<int> hits;
  for (int k = 1; k <= static_cast<int>(a.size()); ++k) {
    if (k == m) continue;
    const auto other = nearly_mu_reduced(a, k, mu);
    if (other && *other == *tau) hits.push_back(k);
  }
  if (hits.size() != 1) throw std::logic_error("mu_exchange: witness not unique");
  return hits.front();
}

struct ExchangePairs {
  int exchanged_index = 0;            // the unique k != m
  std::pair<int, int> removed{0, 0};  // (i, j) with w = v t_{ij}
  std::pair<int, int> inserted{0, 0}; // (i', j') with v' = w t_{i'j'}
};

// strong form of the exchange for a reduced word: besides the unique k, the
// transposition pairs connecting the full product w to the two atoms; the
// second pair lies in {j, y(j)} x {i, y(i)} for y the cycle involution
inline ExchangePairs mu_exchange_pairs(const Word& a, int m, const Composition& mu) {
  const int n = mu.n();
  if (!is_reduced(a, n))
    throw std::invalid_argument("mu_exchange_pairs: word must be reduced");
  const int k = mu_exchange(a, m, mu);
  const Permutation w = word_to_perm(a, n);
  Word del_m, del_k;
  for (int t = 1; t <= static_cast<int>(a.size()); ++t) {
    if (t != m) del_m.push_back(a[t - 1]);
    if (t != k) del_k.push_back(a[t - 1]);
  }
  auto pair_of = [](const Permutation& t) {
    std::pair<int, int> out{0, 0};
    for (int x = 1; x <= t.size(); ++x) {
      if (t(x) != x) {
        if (!out.first) out.first = x;
        else out.second = x;
      }
    }
    return out;
  };
  const Permutation v = word_to_perm(del_m, n);
  const Permutation vp = word_to_perm(del_k, n);
  return {k, pair_of(compose(inverse(v), w)), pair_of(compose(inverse(w), vp))};
}

// membership of w in the atom set of pi, tested blockwise
inline bool is_mu_atom_of(const Permutation& w, const MuInvolution& pi) {
  if (w.size() != pi.size()) return false;
  const Permutation u = inverse(w);
  const Composition& mu = pi.mu();
  for (int k = 1; k <= mu.num_blocks(); ++k) {
    BlockWord seg;
    for (int p = mu.block_start(k) + 1; p <= mu.block_end(k); ++p) seg.push_back(u(p));
    const BlockWord blk = pi.block(k);
    if (sorted_alphabet(seg) != sorted_alphabet(blk)) return false;
    const Permutation q = standardize(seg);
    if (!is_atom_of(inverse(q), Involution(standardize(blk)))) return false;
  }
  return true;
}

// tau <=_A pi: nu refines mu and the atoms of tau sit inside those of pi;
// one membership test suffices because atom sets across the refinement are
// nested or disjoint
inline bool leq_A(const MuInvolution& tau, const MuInvolution& pi) {
  if (!refines(tau.mu(), pi.mu()))
    throw std::invalid_argument("leq_A: first composition must refine the second");
  const std::vector<Permutation> witness = mu_atoms(tau);
  return is_mu_atom_of(witness.front(), pi);
}

// expansion of the atom set of pi across a refining composition nu: the
// nu-involutions whose atom sets partition the atoms of pi
inline std::vector<MuInvolution> refinement_expand(const MuInvolution& pi,
                                                   const Composition& nu) {
  if (!refines(nu, pi.mu()))
    throw std::invalid_argument("refinement_expand: composition does not refine");
  std::set<MuInvolution> out;
  for (const Permutation& u : mu_inverse_atoms(pi)) {
    const MuInvolution tau = mu_act_perm(nu, inverse(u));
    if (ell_mu(tau).total != length(u))
      throw std::logic_error("refinement_expand: atom does not split");
    out.insert(tau);
  }
  return std::vector<MuInvolution>(out.begin(), out.end());
}

// covers of pi from one-step refinements of its composition
inline std::vector<MuInvolution> mu_nu_covers(const MuInvolution& pi) {
  std::vector<MuInvolution> out;
  for (const Composition& nu : one_step_refinements(pi.mu())) {
    for (MuInvolution& tau : refinement_expand(pi, nu)) out.push_back(std::move(tau));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// strong-order covers above pi, with every witnessing operator label
inline std::map<Permutation, std::vector<std::pair<int, int>>> mu_strong_covers_up(
    const MuInvolution& pi) {
  std::map<Permutation, std::vector<std::pair<int, int>>> out;
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      const MuInvolution tau = t_mu(i, j, pi);
      if (tau != pi) out[tau.perm()].push_back({i, j});
    }
  }
  return out;
}

}  // namespace muinv
