// Involis: cycles, the conjugation action, atoms, the local-move graph,
// cover operators, exchange, and the involution Schubert layer.

#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "muinv/involution.hpp"
#include "muinv/io.hpp"
#include "muinv/schubert_mu.hpp"

namespace muinv {
namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }
Involution I(const std::string& s) { return Involution{P(s)}; }

std::vector<Involution> all_involutions(int n) {
  std::vector<Involution> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (compose(p, p) == Permutation::identity(n)) out.push_back(Involution{p});
  });
  return out;
}

TEST(Cyc, Examples) {
  EXPECT_EQ(render_cycles(cyc(I("5472163"))), "(5,1)(4,2)(7,3)(6,6)");
  EXPECT_EQ(render_cycles(cyc(Involution::identity(3))), "(1,1)(2,2)(3,3)");
  EXPECT_EQ(render_cycles(cyc(I("21"))), "(2,1)");
  EXPECT_THROW(Involution{P("231")}, std::invalid_argument);
}

TEST(Cyc, CrossAndNest) {
  EXPECT_TRUE(cycles_nest({5, 1}, {4, 2}));
  EXPECT_TRUE(cycles_nest({7, 3}, {6, 6}));
  EXPECT_TRUE(cycles_cross({3, 1}, {4, 2}));
  EXPECT_FALSE(cycles_cross({5, 1}, {4, 2}));
  EXPECT_FALSE(cycles_nest({3, 1}, {4, 2}));
  EXPECT_FALSE(cycles_cross({2, 1}, {4, 3}));
  EXPECT_FALSE(cycles_nest({2, 1}, {4, 3}));
}

TEST(Iprod, Basics) {
  EXPECT_EQ(iprod(Involution::identity(2), P("21")), I("21"));
  EXPECT_EQ(iprod(I("21"), P("21")), I("21"));
  // e ; s_2 inside S_3
  EXPECT_EQ(iprod_letter(Involution::identity(3), 2), I("132"));
  // results are always involutions, with nondecreasing rank letterwise
  for (const Involution& y : all_involutions(4)) {
    for (int i = 1; i < 4; ++i) {
      const Involution z = iprod_letter(y, i);
      ASSERT_GE(ellhat(z), ellhat(y));
      ASSERT_LE(ellhat(z), ellhat(y) + 1);
    }
  }
}

// minimal word lengths via breadth-first search through the action
std::map<Permutation, int> iprod_bfs(int n) {
  std::map<Permutation, int> dist{{Permutation::identity(n), 0}};
  std::queue<Involution> q;
  q.push(Involution::identity(n));
  while (!q.empty()) {
    const Involution y = q.front();
    q.pop();
    for (int i = 1; i < n; ++i) {
      const Involution z = iprod_letter(y, i);
      if (!dist.count(z.perm())) {
        dist[z.perm()] = dist.at(y.perm()) + 1;
        q.push(z);
      }
    }
  }
  return dist;
}

TEST(Ellhat, FormulaMatchesBfs) {
  EXPECT_EQ(ellhat(Involution::identity(4)), 0);
  EXPECT_EQ(ellhat(I("21")), 1);
  EXPECT_EQ(ellhat(I("321")), 2);
  for (int n = 2; n <= 5; ++n) {
    const auto dist = iprod_bfs(n);
    for (const Involution& y : all_involutions(n)) ASSERT_EQ(ellhat(y), dist.at(y.perm()));
  }
}

TEST(Atoms, PaperExample) {
  const Involution y = I("5472163");
  const std::vector<Permutation> expected{P("4251673"), P("4251736"), P("4512673"),
                                          P("4512736"), P("5142673"), P("5142736")};
  EXPECT_EQ(inverse_atoms(y), expected);
  EXPECT_EQ(atoms(Involution::identity(4)),
            std::vector<Permutation>{Permutation::identity(4)});
}

TEST(Atoms, PatternFilterEqualsDefinitionalFilter) {
  for (int n = 2; n <= 5; ++n) {
    for (const Involution& y : all_involutions(n)) {
      std::vector<Permutation> brute;
      for_each_permutation(n, [&](const Permutation& w) {
        if (length(w) == ellhat(y) && hecke_self_conjugate(w) == y) brute.push_back(w);
      });
      ASSERT_EQ(atoms(y), brute) << render_permutation(y.perm());
    }
  }
}

TEST(Atoms, ReducedInvolutionWordsAreAtomWords) {
  // words reaching y in ellhat(y) letters = union of reduced words of atoms
  for (int n = 2; n <= 4; ++n) {
    for (const Involution& y : all_involutions(n)) {
      std::set<Word> expected;
      for (const Permutation& w : atoms(y))
        for (const Word& a : reduced_words(w)) expected.insert(a);
      // enumerate all words of length ellhat(y) and keep the ones reaching y
      std::set<Word> got;
      std::vector<Word> words{{}};
      for (int step = 0; step < ellhat(y); ++step) {
        std::vector<Word> next;
        for (const Word& a : words)
          for (int i = 1; i < n; ++i) {
            Word b = a;
            b.push_back(i);
            next.push_back(std::move(b));
          }
        words = std::move(next);
      }
      for (const Word& a : words) {
        Involution z = Involution::identity(n);
        for (int letter : a) z = iprod_letter(z, letter);
        if (z == y && is_reduced(a, n)) got.insert(a);
      }
      ASSERT_EQ(got, expected);
    }
  }
}

TEST(BlockAtoms, Examples) {
  EXPECT_EQ(block_inverse_atoms({7, 4, 2}), (std::vector<BlockWord>{{4, 7, 2}, {7, 2, 4}}));
  EXPECT_EQ(block_inverse_atoms({6, 5, 1}), (std::vector<BlockWord>{{5, 6, 1}, {6, 1, 5}}));
  EXPECT_EQ(block_atoms({9}), (std::vector<BlockWord>{{9}}));
  EXPECT_THROW(block_cycles({2, 3, 1}), std::invalid_argument);
}

TEST(AtomGraph, ExampleAndConnectivity) {
  EXPECT_EQ(atom_graph(I("5472163")).size(), 7u);
  EXPECT_TRUE(atom_graph(I("21")).empty());
  for (int n = 2; n <= 6; ++n) {
    for (const Involution& y : all_involutions(n)) {
      const auto verts = inverse_atoms(y);
      std::map<Permutation, int> comp;
      for (std::size_t i = 0; i < verts.size(); ++i) comp[verts[i]] = static_cast<int>(i);
      std::vector<int> parent(verts.size());
      for (std::size_t i = 0; i < verts.size(); ++i) parent[i] = static_cast<int>(i);
      std::function<int(int)> root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& [u, v] : atom_graph(y)) parent[root(comp.at(u))] = root(comp.at(v));
      std::set<int> components;
      for (std::size_t i = 0; i < verts.size(); ++i) components.insert(root(i));
      ASSERT_EQ(components.size(), 1u) << render_permutation(y.perm());
    }
  }
}

TEST(TI, CoversOfIdentity) {
  // covers of e are the rank-one involutions
  const auto covers = involution_covers_up(Involution::identity(3));
  std::set<Permutation> targets;
  for (const auto& [z, labels] : covers) targets.insert(z);
  EXPECT_EQ(targets, (std::set<Permutation>{P("213"), P("132")}));
  // the far transposition is produced by the operator but is not a cover
  EXPECT_EQ(t_I(1, 3, Involution::identity(3)), I("321"));
  EXPECT_EQ(ellhat(I("321")), 2);
}

TEST(TI, EveryCoverIsWitnessed) {
  for (int n = 2; n <= 5; ++n) {
    const auto all = all_involutions(n);
    for (const Involution& y : all) {
      std::set<Permutation> via_t;
      for (const auto& [z, labels] : involution_covers_up(y)) via_t.insert(z);
      std::set<Permutation> via_order;
      for (const Involution& z : all)
        if (ellhat(z) == ellhat(y) + 1 && bruhat_leq(y.perm(), z.perm()))
          via_order.insert(z.perm());
      ASSERT_EQ(via_t, via_order) << render_permutation(y.perm());
    }
  }
}

TEST(TI, Nontrivial21InsideS3) {
  // 21 padded into S_3 reaches 321 through two labels
  const Involution y = I("213");
  std::set<std::pair<int, int>> labels;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      if (t_I(i, j, y) == I("321")) labels.insert({i, j});
  EXPECT_EQ(labels, (std::set<std::pair<int, int>>{{1, 3}, {2, 3}}));
}

TEST(AtomsTransposition, ExhaustiveSmall) {
  for (int n = 2; n <= 5; ++n) {
    const auto all = all_involutions(n);
    for (const Involution& y : all) {
      for (const auto& [zp, labels] : involution_covers_up(y)) {
        const Involution z{zp};
        std::set<Permutation> expected;
        for (const Permutation& w : atoms(z)) expected.insert(w);
        ASSERT_EQ(atoms_transposition(y, z), expected)
            << render_permutation(y.perm()) << " -> " << render_permutation(zp);
      }
    }
  }
}

TEST(AtomExchange, SweepAndGolden) {
  // golden instance extracted from the n = 4 sweep
  const Involution y = I("4321");
  const Permutation v = P("3412");
  const Permutation w = P("4312");  // covers v, atom of nothing
  ASSERT_TRUE(bruhat_leq(v, w) && length(w) == length(v) + 1);
  ASSERT_FALSE(is_atom(w));
  EXPECT_EQ(atom_exchange(y, v, w), P("4213"));

  for (int n = 3; n <= 5; ++n) {
    for (const Involution& yy : all_involutions(n)) {
      for (const Permutation& vv : atoms(yy)) {
        for (const Permutation& ww : bruhat_covers_up(vv)) {
          if (is_atom(ww)) continue;
          Permutation u = atom_exchange(yy, vv, ww);  // throws unless unique
          ASSERT_NE(u, vv);
          ASSERT_TRUE(is_atom_of(u, yy));
          ASSERT_TRUE(bruhat_leq(u, ww));
        }
      }
    }
  }
}

TEST(InvSchubert, SmallValues) {
  EXPECT_EQ(inv_schubert(Involution::identity(3)), MultiPolynomial::constant(3, 1));
  // the rank-one involutions in S_2 and S_3
  EXPECT_EQ(inv_schubert(I("21")), parse_polynomial("x1", 2));
  EXPECT_EQ(inv_schubert(I("132")), parse_polynomial("x1 + x2", 3));
  // doubling by the two-cycle count keeps integrality, trivially
  const Involution y = I("4231");
  int two_cycles = 0;
  for (const Cycle& c : cyc(y))
    if (c.first != c.second) ++two_cycles;
  EXPECT_EQ(two_cycles, 1);
  const MultiPolynomial doubled = 2 * inv_schubert(y);
  for (const auto& [m, c] : doubled.terms()) EXPECT_EQ(c % 2, 0);
}

TEST(AtomExchange, RejectsBadInputs) {
  const Involution y = I("4321");
  // w an atom: rejected
  EXPECT_THROW(atom_exchange(y, P("3412"), P("3412")), std::invalid_argument);
  // v not an atom of y
  EXPECT_THROW(atom_exchange(y, P("2143"), P("2413")), std::invalid_argument);
  // not a cover
  EXPECT_THROW(atom_exchange(y, P("3412"), P("4321")), std::invalid_argument);
}

TEST(InvTransition, RejectsNonCycle) {
  EXPECT_THROW(inv_transition(I("2143"), 3, 1), std::invalid_argument);
}

TEST(InvTransition, IdentityCase) {
  // y = e, fixed point (p, p): x_p = S^I at s_p minus S^I at s_{p-1}
  SchubertTable table(4);
  ASSERT_TRUE(verify_inv_transition(Involution::identity(3), 2, 2, table));
  const auto [plus, minus] = inv_transition(Involution::identity(3), 2, 2);
  EXPECT_EQ(plus.size(), 1u);
  EXPECT_EQ(minus.size(), 1u);
}

TEST(InvTransition, ExhaustiveN4SampledN5) {
  {
    SchubertTable table(5);
    for (const Involution& y : all_involutions(4)) {
      for (const Cycle& c : cyc(y)) {
        ASSERT_TRUE(verify_inv_transition(y, c.first, c.second, table))
            << render_permutation(y.perm()) << " cycle " << render_cycles({c});
      }
    }
  }
  {
    SchubertTable table(6);
    int done = 0;
    for (const Involution& y : all_involutions(5)) {
      if (ellhat(y) % 2 == 0) continue;  // a fixed deterministic sample
      for (const Cycle& c : cyc(y)) {
        ASSERT_TRUE(verify_inv_transition(y, c.first, c.second, table));
        if (++done >= 40) return;
      }
    }
  }
}

}  // namespace
}  // namespace muinv
