// schubert_mu.hpp
//
// The polynomial layer over involutions and mu-involutions: involution
// Schubert polynomials and their transition identity, mu-involution Schubert
// polynomials, refinement expansion, transition sets with the one-slot
// padding, integer-span membership, Hecke atoms and the Grothendieck layer.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "muinv/involution.hpp"
#include "muinv/mu_involution.hpp"
#include "muinv/schubert.hpp"

namespace muinv {

inline MultiPolynomial inv_schubert(const Involution& y, SchubertTable& table) {
  MultiPolynomial out(table.n());
  for (const Permutation& w : cached_atoms(y)) out = out + table.schubert(pad(w, table.n()));
  return out;
}

inline MultiPolynomial inv_schubert(const Involution& y) {
  SchubertTable table(y.size());
  return inv_schubert(y, table);
}

// covers entering the involution transition identity for the cycle {p, q}:
// the positive side moves the larger cycle element up, the negative side
// moves the smaller one down, both over the one-slot padding of y
inline std::pair<std::set<Involution>, std::set<Involution>> inv_transition(const Involution& y,
                                                                            int p, int q) {
  if (q < p) std::swap(p, q);  // now p <= q
  if (y(p) != q) throw std::invalid_argument("inv_transition: (p, q) is not a cycle");
  const Involution yp{pad(y.perm(), y.size() + 1)};
  const int target = ellhat(yp) + 1;
  std::set<Involution> plus, minus;
  for (int j = q + 1; j <= yp.size(); ++j) {
    const Involution z = t_I(q, j, yp);
    if (z != yp && ellhat(z) == target) plus.insert(z);
  }
  for (int i = 1; i < p; ++i) {
    const Involution z = t_I(i, p, yp);
    if (z != yp && ellhat(z) == target) minus.insert(z);
  }
  return {std::move(plus), std::move(minus)};
}

// 2^{-delta(p,q)} (x_p + x_q) S^I_y = sum(plus) - sum(minus), exactly,
// in n+1 variables
inline bool verify_inv_transition(const Involution& y, int p, int q, SchubertTable& table) {
  if (q > p) std::swap(p, q);
  if (table.n() != y.size() + 1)
    throw std::invalid_argument("verify_inv_transition: table must be padded");
  const auto [plus, minus] = inv_transition(y, p, q);
  const Involution yp{pad(y.perm(), y.size() + 1)};
  const MultiPolynomial base = inv_schubert(yp, table);
  const MultiPolynomial x = MultiPolynomial::variable(table.n(), p) +
                            MultiPolynomial::variable(table.n(), q);
  MultiPolynomial lhs = x * base;
  if (p == q) lhs = lhs.divided_by(2);
  MultiPolynomial rhs(table.n());
  for (const Involution& z : plus) rhs = rhs + inv_schubert(z, table);
  for (const Involution& z : minus) rhs = rhs - inv_schubert(z, table);
  return lhs == rhs;
}

inline MultiPolynomial mu_schubert(const MuInvolution& pi, SchubertTable& table) {
  if (table.n() < pi.size()) throw std::invalid_argument("mu_schubert: table too small");
  MultiPolynomial out(table.n());
  for (const Permutation& w : mu_atoms(pi)) out = out + table.schubert(pad(w, table.n()));
  return out;
}

inline MultiPolynomial mu_schubert(const MuInvolution& pi) {
  SchubertTable table(pi.size());
  return mu_schubert(pi, table);
}

struct TransitionSets {
  std::vector<MuInvolution> phi;  // padded, sorted
  std::vector<MuInvolution> psi;  // padded, sorted
  std::pair<int, int> cycle;      // (i, j) with i >= j
  int delta = 0;                  // 1 when i == j
};

inline bool transition_admissible(const MuInvolution& tau, int i, int j) {
  if (i < j) std::swap(i, j);
  const CycleSet cycles = cyc_mu(tau);
  if (std::find(cycles.begin(), cycles.end(), Cycle{i, j}) != cycles.end()) return true;
  if (i == j) {
    const int b = tau.block_of_value(i);
    return tau.mu().part(b) == 2;
  }
  return false;
}

// Phi / Psi of the transition identity: nontrivial operator images of the
// padded tau, keyed by whether i or j acts as the smaller or larger index
inline TransitionSets transition_sets(const MuInvolution& tau, int i, int j) {
  if (i < j) std::swap(i, j);
  if (!transition_admissible(tau, i, j))
    throw std::invalid_argument("transition_sets: (i, j) is not an admissible cycle");
  const MuInvolution padded = tau.padded();
  const int m = padded.size();
  std::set<MuInvolution> phi, psi;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (a != i && a != j && b != i && b != j) continue;
      const MuInvolution sigma = t_mu(a, b, padded);
      if (sigma == padded) continue;
      if (a == i || a == j) phi.insert(sigma);
      if (b == i || b == j) psi.insert(sigma);
    }
  }
  TransitionSets out;
  out.phi.assign(phi.begin(), phi.end());
  out.psi.assign(psi.begin(), psi.end());
  out.cycle = {i, j};
  out.delta = (i == j) ? 1 : 0;
  return out;
}

// Monk-level multiset soundness behind the transition identity: the covers
// v t with the cycle values as smaller (resp. larger) index never repeat
inline void assert_transition_multiplicity_free(const MuInvolution& padded, int i, int j) {
  std::vector<Permutation> ups, downs;
  for (const Permutation& v : mu_atoms(padded)) {
    for (int r = 1; r <= padded.size(); ++r) {
      for (int a : {i, j}) {
        if (r > a) {
          const Permutation u = right_mul_t(v, a, r);
          if (length(u) == length(v) + 1) ups.push_back(u);
        }
        if (r < a) {
          const Permutation u = right_mul_t(v, r, a);
          if (length(u) == length(v) + 1) downs.push_back(u);
        }
        if (i == j) break;
      }
    }
  }
  auto has_dup = [](std::vector<Permutation>& v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
  };
  if (has_dup(ups) || has_dup(downs))
    throw std::logic_error("transition: unexpected multiplicity in cover multiset");
}

// 2^{-delta} (x_i + x_j) S^mu_tau = sum(Phi) - sum(Psi), exactly, in n+1
// variables
inline bool verify_transition(const MuInvolution& tau, int i, int j, SchubertTable& table) {
  if (i < j) std::swap(i, j);
  if (table.n() != tau.size() + 1)
    throw std::invalid_argument("verify_transition: table must have n+1 variables");
  const TransitionSets sets = transition_sets(tau, i, j);
  const MuInvolution padded = tau.padded();
  assert_transition_multiplicity_free(padded, i, j);
  const MultiPolynomial base = mu_schubert(padded, table);
  const MultiPolynomial x = MultiPolynomial::variable(table.n(), i) +
                            MultiPolynomial::variable(table.n(), j);
  MultiPolynomial lhs = x * base;
  if (sets.delta) lhs = lhs.divided_by(2);
  MultiPolynomial rhs(table.n());
  for (const MuInvolution& s : sets.phi) rhs = rhs + mu_schubert(s, table);
  for (const MuInvolution& s : sets.psi) rhs = rhs - mu_schubert(s, table);
  return lhs == rhs;
}

// membership of f in the integer span of the mu-involution Schubert family.
// f is expanded exactly in the Schubert basis of S_{n+1}; membership holds
// when every contributing permutation is a mu-atom and coefficients are
// constant across each atom set.
inline bool span_membership(const MultiPolynomial& f, const Composition& mu) {
  const int m = mu.n() + 1;
  if (f.nvars() > m) throw std::invalid_argument("span_membership: too many variables");
  const auto expansion = expand_in_schubert_basis(f.extended(m));
  std::map<MuInvolution, long long> groups;
  for (const auto& [w, c] : expansion) {
    if (c == 0) continue;
    if (w(m) != m) return false;
    const auto target = mu_atom_target(mu, truncate(w, mu.n()));
    if (!target) return false;
    auto [it, fresh] = groups.emplace(*target, c);
    if (!fresh && it->second != c) return false;
  }
  for (const auto& [sigma, c] : groups) {
    for (const Permutation& w : mu_atoms(sigma)) {
      auto it = expansion.find(pad(w, m));
      if (it == expansion.end() || it->second != c) return false;
    }
  }
  return true;
}

// all permutations whose folded action reaches pi, in any length
inline std::vector<Permutation> hecke_atoms(const MuInvolution& pi) {
  if (pi.size() > 8) throw std::invalid_argument("hecke_atoms: n > 8 not supported");
  std::vector<Permutation> out;
  for_each_permutation(pi.size(), [&](const Permutation& w) {
    if (mu_act_perm(pi.mu(), w) == pi) out.push_back(w);
  });
  return out;
}

inline MultiPolynomial mu_grothendieck(const MuInvolution& pi, GrothendieckTable& table) {
  if (table.n() < pi.size()) throw std::invalid_argument("mu_grothendieck: table too small");
  MultiPolynomial out(table.n());
  for (const Permutation& w : hecke_atoms(pi))
    out = out + table.grothendieck(pad(w, table.n()));
  return out;
}

inline MultiPolynomial mu_grothendieck(const MuInvolution& pi) {
  GrothendieckTable table(pi.size());
  return mu_grothendieck(pi, table);
}

struct CotransitionReport {
  bool chain_holds = false;        // the three displayed product steps
  bool obstruction_holds = false;  // terminal element admits no clean step
  bool ok() const { return chain_holds && obstruction_holds; }
};

// Replays the cotransition chain from 653|421|7 and confirms that from
// 763|415|2 every admissible cycle either needs the auxiliary padded value
// or produces a nonempty negative part.
inline CotransitionReport cotransition_chain_check() {
  const Composition mu({3, 3, 1});
  auto parse3 = [&](std::vector<int> v) { return MuInvolution(Permutation(std::move(v)), mu); };
  const MuInvolution tau1 = parse3({6, 5, 3, 4, 2, 1, 7});
  const MuInvolution tau2 = parse3({6, 5, 3, 4, 1, 7, 2});
  const MuInvolution mid1 = parse3({6, 5, 4, 3, 1, 7, 2});
  const MuInvolution mid2 = parse3({7, 5, 3, 4, 1, 6, 2});
  const MuInvolution tau3 = parse3({7, 6, 3, 4, 2, 1, 5});
  const MuInvolution last = parse3({7, 6, 3, 4, 1, 5, 2});

  SchubertTable table(8);
  CotransitionReport report;

  auto step = [&](const MuInvolution& from, int i, int j,
                  const std::vector<MuInvolution>& expected_phi) {
    const TransitionSets sets = transition_sets(from, i, j);
    std::vector<MuInvolution> want;
    for (const MuInvolution& s : expected_phi) want.push_back(s.padded());
    std::sort(want.begin(), want.end());
    return sets.psi.empty() && sets.phi == want && verify_transition(from, i, j, table);
  };

  report.chain_holds = step(tau1, 2, 2, {tau2}) && step(tau2, 6, 3, {mid1, mid2}) &&
                       step(tau3, 2, 2, {last});

  report.obstruction_holds = true;
  for (const Cycle& c : cyc_mu(last)) {
    const TransitionSets sets = transition_sets(last, c.first, c.second);
    bool needs_pad = false;
    for (const MuInvolution& s : sets.phi)
      if (s.perm()(s.size()) != s.size()) needs_pad = true;
    if (sets.psi.empty() && !needs_pad) {
      report.obstruction_holds = false;
      break;
    }
  }
  return report;
}

}  // namespace muinv
