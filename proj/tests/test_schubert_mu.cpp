// The polynomial layer over mu-involutions: Schubert sums, refinement
// identities, transitions with padding, span membership, Hecke atoms and
// the Grothendieck layer.

#include <gtest/gtest.h>

#include "muinv/io.hpp"
#include "muinv/schubert_mu.hpp"

namespace muinv {
namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }
MuInvolution M(const std::string& s) { return parse_mu_involution(s); }

TEST(MuSchubert, EndpointsAndIdentity) {
  EXPECT_EQ(mu_schubert(MuInvolution::identity(Composition({2, 2}))),
            MultiPolynomial::constant(4, 1));
  // singleton blocks: the single atom is the inverse permutation
  SchubertTable table(4);
  for_each_permutation(4, [&](const Permutation& w) {
    ASSERT_EQ(mu_schubert(MuInvolution(w, Composition::ones(4)), table),
              table.schubert(inverse(w)));
  });
  // one block: the involution Schubert polynomial
  for (const Permutation& p : mu_table(Composition::whole(4)).elements())
    ASSERT_EQ(mu_schubert(MuInvolution(p, Composition::whole(4)), table),
              inv_schubert(Involution{p}, table));
}

TEST(RefinementExpand, PolynomialIdentityExample) {
  const MuInvolution pi = M("75421|63");
  SchubertTable table(7);
  MultiPolynomial rhs(7);
  for (const MuInvolution& tau : refinement_expand(pi, Composition({2, 3, 1, 1})))
    rhs = rhs + mu_schubert(tau, table);
  EXPECT_EQ(mu_schubert(pi, table), rhs);
}

TEST(RefinementExpand, PolynomialIdentityExhaustive) {
  for (int n = 2; n <= 5; ++n) {
    SchubertTable table(n);
    for (const Composition& mu : all_compositions(n)) {
      for (const Composition& nu : all_compositions(n)) {
        if (!refines(nu, mu)) continue;
        for (const Permutation& p : mu_table(mu).elements()) {
          const MuInvolution pi(p, mu);
          MultiPolynomial rhs(n);
          for (const MuInvolution& tau : refinement_expand(pi, nu))
            rhs = rhs + mu_schubert(tau, table);
          ASSERT_EQ(mu_schubert(pi, table), rhs);
        }
      }
    }
  }
}

TEST(TransitionSets, DisplayedExample) {
  const MuInvolution tau = M("5|4613|72|8");
  EXPECT_EQ(render_mu_cycles(tau), "(5,5)|(4,1)(6,3)|(7,2)|(8,8)");

  const TransitionSets s72 = transition_sets(tau, 7, 2);
  std::vector<std::string> phi, psi;
  for (const auto& s : s72.phi) phi.push_back(render_mu_involution(s.unpadded()));
  for (const auto& s : s72.psi) psi.push_back(render_mu_involution(s.unpadded()));
  EXPECT_EQ(phi, (std::vector<std::string>{"5|4613|78|2", "5|4613|82|7"}));
  EXPECT_EQ(psi, (std::vector<std::string>{"5|4167|32|8", "5|4623|71|8", "5|4713|62|8"}));

  const TransitionSets s55 = transition_sets(tau, 5, 5);
  ASSERT_EQ(s55.phi.size(), 1u);
  EXPECT_EQ(render_mu_involution(s55.phi.front().unpadded()), "6|4513|72|8");
  EXPECT_TRUE(s55.psi.empty());
  EXPECT_EQ(s55.delta, 1);

  const TransitionSets s41 = transition_sets(tau, 4, 1);
  std::vector<std::string> phi41;
  for (const auto& s : s41.phi) phi41.push_back(render_mu_involution(s.unpadded()));
  EXPECT_EQ(phi41, (std::vector<std::string>{"5|4623|71|8", "5|6431|72|8"}));
  EXPECT_TRUE(s41.psi.empty());

  EXPECT_THROW(transition_sets(tau, 6, 1), std::invalid_argument);
  // 4 is not a fixed point and its block has size 4
  EXPECT_THROW(transition_sets(tau, 4, 4), std::invalid_argument);
}

TEST(TransitionIdentity, AllSixDisplayed) {
  const MuInvolution tau = M("5|4613|72|8");
  SchubertTable table(9);
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {5, 5}, {4, 1}, {7, 2}, {6, 3}, {2, 2}, {7, 7}})
    EXPECT_TRUE(verify_transition(tau, i, j, table)) << i << "," << j;
}

TEST(TransitionIdentity, ExhaustiveSmall) {
  for (int n = 1; n <= 4; ++n) {
    SchubertTable table(n + 1);
    for (const Composition& mu : all_compositions(n)) {
      for (const Permutation& p : mu_table(mu).elements()) {
        const MuInvolution tau(p, mu);
        for (const Cycle& c : cyc_mu(tau))
          ASSERT_TRUE(verify_transition(tau, c.first, c.second, table))
              << render_mu_involution(tau);
        for (int k = 1; k <= mu.num_blocks(); ++k) {
          if (mu.part(k) != 2) continue;
          for (int pos = mu.block_start(k) + 1; pos <= mu.block_end(k); ++pos) {
            const int v = tau.perm()(pos);
            ASSERT_TRUE(verify_transition(tau, v, v, table))
                << render_mu_involution(tau) << " x_" << v;
          }
        }
      }
    }
  }
}

TEST(SpanMembership, DisplayedConfiguration) {
  const MuInvolution tau = M("5|4613|72|8");
  SchubertTable table(8);
  const MultiPolynomial base = mu_schubert(tau, table);
  auto member = [&](int r) {
    return span_membership(MultiPolynomial::variable(8, r) * base, tau.mu());
  };
  EXPECT_TRUE(member(5));
  EXPECT_TRUE(member(2));
  EXPECT_TRUE(member(7));
  EXPECT_FALSE(member(4));
  EXPECT_FALSE(member(1));
  EXPECT_FALSE(member(6));
  EXPECT_FALSE(member(3));
  EXPECT_TRUE(span_membership(base, tau.mu()));
  EXPECT_TRUE(span_membership(MultiPolynomial(8), tau.mu()));
}

TEST(SpanMembership, SmallCases) {
  // x_1 * S at e over (1,1): x1 = S_{s_1}, an atom polynomial
  const Composition mu({1, 1});
  EXPECT_TRUE(span_membership(parse_polynomial("x1", 2), mu));
  // x_2 alone is not a mu-involution Schubert combination for (1,1):
  // x2 = S_132 - S_213 needs S_3 indices outside S_2
  EXPECT_FALSE(span_membership(parse_polynomial("x2", 2), mu));
  // integer multiples and signed combinations stay inside
  EXPECT_TRUE(span_membership(parse_polynomial("3*x1", 2), mu));
}

TEST(Cotransition, ChainAndObstruction) {
  const CotransitionReport report = cotransition_chain_check();
  EXPECT_TRUE(report.chain_holds);
  EXPECT_TRUE(report.obstruction_holds);
  EXPECT_TRUE(report.ok());
}

TEST(Errors, ContractsRejectBadInputs) {
  EXPECT_THROW(mu_bruhat_leq(M("21|3"), M("2|13")), std::invalid_argument);
  EXPECT_THROW(hecke_atoms(MuInvolution::identity(Composition::ones(9))),
               std::invalid_argument);
  EXPECT_THROW(t_mu(3, 2, M("21|3")), std::invalid_argument);
  EXPECT_THROW(v_op(3, 2, M("21|3")), std::invalid_argument);
}

TEST(HeckeAtoms, Basics) {
  const MuInvolution e2 = MuInvolution::identity(Composition({1, 1}));
  const auto b = hecke_atoms(e2);
  EXPECT_EQ(b, std::vector<Permutation>{Permutation::identity(2)});
  for (const Composition& mu : all_compositions(4)) {
    for (const Permutation& p : mu_table(mu).elements()) {
      const MuInvolution pi(p, mu);
      const auto hecke = hecke_atoms(pi);
      const auto atoms = mu_atoms(pi);
      ASSERT_GE(hecke.size(), atoms.size());
      // minimal-length slice equals the atom set
      std::vector<Permutation> minimal;
      for (const Permutation& w : hecke)
        if (length(w) == ell_mu(pi).total) minimal.push_back(w);
      std::sort(minimal.begin(), minimal.end());
      ASSERT_EQ(minimal, atoms);
    }
  }
}

TEST(HeckeAtoms, PartitionOfSn) {
  // folding classifies every permutation to exactly one mu-involution
  const Composition mu({2, 1});
  long long total = 0;
  for (const Permutation& p : mu_table(mu).elements())
    total += static_cast<long long>(hecke_atoms(MuInvolution(p, mu)).size());
  EXPECT_EQ(total, 6);
}

TEST(MuGrothendieck, LowestComponentAndEndpoint) {
  for (int n = 2; n <= 4; ++n) {
    SchubertTable st(n);
    GrothendieckTable gt(n);
    for (const Composition& mu : all_compositions(n)) {
      for (const Permutation& p : mu_table(mu).elements()) {
        const MuInvolution pi(p, mu);
        ASSERT_EQ(mu_grothendieck(pi, gt).lowest_component(), mu_schubert(pi, st));
      }
    }
    // singleton blocks: the fold has a single fiber element, the inverse
    for_each_permutation(n, [&](const Permutation& w) {
      const MuInvolution pi(w, Composition::ones(n));
      const auto fiber = hecke_atoms(pi);
      ASSERT_EQ(fiber, std::vector<Permutation>{inverse(w)});
      ASSERT_EQ(mu_grothendieck(pi, gt), gt.grothendieck(inverse(w)));
    });
  }
}

TEST(CountWords, Examples) {
  EXPECT_EQ(count_reduced_mu_words(MuInvolution::identity(Composition({2, 2}))), 1);
  // additivity over the atom partition
  const MuInvolution tau = M("651|3|742");
  long long total = 0;
  for (const Permutation& w : mu_atoms(tau)) total += reduced_word_count(w);
  EXPECT_EQ(count_reduced_mu_words(tau), total);
}

}  // namespace
}  // namespace muinv
