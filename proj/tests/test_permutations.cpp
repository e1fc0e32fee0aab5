// Core symmetric-group toolkit tests: products, words, orders, parabolic
// decomposition, standardization.

#include <gtest/gtest.h>

#include <random>

#include "muinv/composition.hpp"
#include "muinv/io.hpp"
#include "muinv/permutation.hpp"

namespace muinv {
namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

TEST(Compose, TranspositionConventions) {
  // w t_{13} swaps positions, t_{13} w swaps values
  EXPECT_EQ(compose(P("4231"), transposition(4, 1, 3)), P("3241"));
  EXPECT_EQ(compose(transposition(4, 1, 3), P("4231")), P("4213"));
  EXPECT_EQ(right_mul_t(P("4231"), 1, 3), P("3241"));
  EXPECT_EQ(left_mul_t(1, 3, P("4231")), P("4213"));
  EXPECT_EQ(compose(Permutation::identity(4), P("4231")), P("4231"));
  EXPECT_THROW(compose(P("12"), P("123")), std::invalid_argument);
}

TEST(Inverse, Basics) {
  EXPECT_EQ(inverse(P("6153724")), P("2647315"));
  EXPECT_EQ(inverse(Permutation::identity(5)), Permutation::identity(5));
  EXPECT_EQ(inverse(Permutation::longest(6)), Permutation::longest(6));
  for_each_permutation(5, [](const Permutation& w) { EXPECT_EQ(inverse(inverse(w)), w); });
}

TEST(Length, InversionCount) {
  EXPECT_EQ(length(Permutation::longest(4)), 6);
  EXPECT_EQ(length(Permutation::identity(7)), 0);
  EXPECT_EQ(length(P("312")), 2);
}

TEST(Hecke, RightMultiplication) {
  EXPECT_EQ(hecke_mul(Permutation::identity(2), 1), P("21"));
  EXPECT_EQ(hecke_mul(P("21"), 1), P("21"));
  for_each_permutation(5, [](const Permutation& w) {
    for (int i = 1; i < 5; ++i) {
      const Permutation wi = hecke_mul(w, i);
      EXPECT_GE(length(wi), length(w));
      EXPECT_EQ(hecke_mul(wi, i), wi);  // idempotence at the descent
    }
  });
}

TEST(Hecke, BraidAndCommutation) {
  for_each_permutation(6, [](const Permutation& w) {
    for (int i = 1; i + 1 < 6; ++i) {
      const auto lhs = hecke_mul(hecke_mul(hecke_mul(w, i), i + 1), i);
      const auto rhs = hecke_mul(hecke_mul(hecke_mul(w, i + 1), i), i + 1);
      ASSERT_EQ(lhs, rhs);
    }
    for (int i = 1; i < 6; ++i)
      for (int j = i + 2; j < 6; ++j)
        ASSERT_EQ(hecke_mul(hecke_mul(w, i), j), hecke_mul(hecke_mul(w, j), i));
  });
}

// every length-k 0-Hecke word for w folds back to w
TEST(Hecke, WordsFoldToTarget) {
  const int n = 4;
  const Permutation target = P("3142");
  const int k = length(target) + 2;
  std::vector<Word> words{{}};
  for (int step = 0; step < k; ++step) {
    std::vector<Word> next;
    for (const Word& a : words) {
      for (int i = 1; i < n; ++i) {
        Word b = a;
        b.push_back(i);
        next.push_back(std::move(b));
      }
    }
    words = std::move(next);
  }
  int hits = 0;
  for (const Word& a : words) {
    Permutation w = Permutation::identity(n);
    for (int letter : a) w = hecke_mul(w, letter);
    if (w == target) ++hits;
  }
  EXPECT_GT(hits, 0);
}

TEST(ReducedWords, SmallSets) {
  EXPECT_EQ(reduced_words(Permutation::identity(3)), std::set<Word>{Word{}});
  const std::set<Word> r321 = reduced_words(P("321"));
  EXPECT_EQ(r321, (std::set<Word>{{1, 2, 1}, {2, 1, 2}}));
  for_each_permutation(4, [](const Permutation& w) {
    const auto words = reduced_words(w);
    EXPECT_EQ(static_cast<long long>(words.size()), reduced_word_count(w));
    for (const Word& a : words) {
      EXPECT_EQ(static_cast<int>(a.size()), length(w));
      EXPECT_EQ(word_to_perm(a, 4), w);
    }
  });
}

TEST(IsReduced, Examples) {
  EXPECT_FALSE(is_reduced({1, 1}, 2));
  EXPECT_TRUE(is_reduced({1, 2, 1}, 3));
  EXPECT_TRUE(is_reduced({}, 3));
}

TEST(DeletionWitness, Examples) {
  EXPECT_EQ(deletion_witness({1, 1}, 2), (std::pair<int, int>{1, 2}));
  for (const Word& a : {Word{1, 2, 1, 2}, Word{2, 1, 1, 2}}) {
    const auto [k, m] = deletion_witness(a, 3);
    Word b;
    for (int t = 1; t <= static_cast<int>(a.size()); ++t)
      if (t != k && t != m) b.push_back(a[t - 1]);
    EXPECT_EQ(word_to_perm(b, 3), word_to_perm(a, 3));
  }
  EXPECT_THROW(deletion_witness({1, 2}, 3), std::invalid_argument);
}

TEST(DeletionWitness, RandomNonReduced) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4, len = 6;
    Word a;
    for (int t = 0; t < len; ++t) a.push_back(1 + rng() % (n - 1));
    if (is_reduced(a, n)) continue;
    const auto [k, m] = deletion_witness(a, n);
    ASSERT_LT(k, m);
    Word b;
    for (int t = 1; t <= len; ++t)
      if (t != k && t != m) b.push_back(a[t - 1]);
    EXPECT_EQ(word_to_perm(b, n), word_to_perm(a, n));
  }
}

// subword test from the word-level definition, used as an oracle
bool bruhat_leq_subword(const Permutation& v, const Permutation& w) {
  const Word a = any_reduced_word(w);
  const int lv = length(v);
  for (const Word& b : reduced_words(v)) {
    std::size_t at = 0;
    for (int letter : a) {
      if (at < b.size() && b[at] == letter) ++at;
    }
    if (static_cast<int>(at) == lv) return true;
  }
  return false;
}

TEST(Bruhat, AgainstSubwordOracle) {
  EXPECT_TRUE(bruhat_leq(P("312"), P("321")));
  EXPECT_FALSE(bruhat_leq(P("321"), P("312")));
  for_each_permutation(4, [](const Permutation& v) {
    for_each_permutation(4, [&](const Permutation& w) {
      ASSERT_EQ(bruhat_leq(v, w), bruhat_leq_subword(v, w))
          << render_permutation(v) << " vs " << render_permutation(w);
    });
  });
}

TEST(Bruhat, AgainstCoverClosure) {
  const int n = 5;
  std::vector<Permutation> all;
  for_each_permutation(n, [&](const Permutation& w) { all.push_back(w); });
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
  // reachable[i] = set of j with all[i] <= all[j], via covers
  std::vector<std::set<int>> reach(all.size());
  std::vector<std::vector<int>> by_len(n * (n - 1) / 2 + 1);
  for (std::size_t i = 0; i < all.size(); ++i) by_len[length(all[i])].push_back(i);
  for (int l = static_cast<int>(by_len.size()) - 1; l >= 0; --l) {
    for (int i : by_len[l]) {
      reach[i].insert(i);
      for (const Permutation& up : bruhat_covers_up(all[i])) {
        const int j = index.at(up);
        reach[i].insert(reach[j].begin(), reach[j].end());
      }
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      ASSERT_EQ(bruhat_leq(all[i], all[j]), reach[i].count(static_cast<int>(j)) > 0);
}

TEST(Covers, Boundaries) {
  std::set<Permutation> expected;
  for (int i = 1; i < 4; ++i) expected.insert(right_mul_s(Permutation::identity(4), i));
  EXPECT_EQ(bruhat_covers_up(Permutation::identity(4)), expected);
  EXPECT_TRUE(bruhat_covers_up(Permutation::longest(4)).empty());
  EXPECT_EQ(bruhat_covers_up(P("312")), std::set<Permutation>{P("321")});
  EXPECT_EQ(weak_covers_up(Permutation::identity(4)), expected);
  EXPECT_TRUE(weak_covers_up(Permutation::longest(4)).empty());
}

TEST(Covers, RankPlusOrderCharacterization) {
  for_each_permutation(5, [](const Permutation& w) {
    std::set<Permutation> expected;
    for_each_permutation(5, [&](const Permutation& u) {
      if (length(u) == length(w) + 1 && bruhat_leq(w, u)) expected.insert(u);
    });
    ASSERT_EQ(bruhat_covers_up(w), expected);
  });
}

TEST(Parabolic, Decomposition) {
  const auto [u0, v0] = parabolic_decompose(P("4213"), Composition({2, 2}));
  EXPECT_EQ(compose(u0, v0), P("4213"));
  EXPECT_EQ(length(u0) + length(v0), length(P("4213")));
  EXPECT_TRUE(in_parabolic(u0, Composition({2, 2})));
  EXPECT_TRUE(is_min_coset_rep(v0, Composition({2, 2})));

  const auto [u1, v1] = parabolic_decompose(Permutation::longest(4), Composition::ones(4));
  EXPECT_TRUE(u1.is_identity());
  EXPECT_EQ(v1, Permutation::longest(4));

  // w already in the parabolic subgroup
  const auto [u2, v2] = parabolic_decompose(P("2134"), Composition({2, 2}));
  EXPECT_EQ(u2, P("2134"));
  EXPECT_TRUE(v2.is_identity());
}

TEST(Parabolic, UniquenessExhaustive) {
  for (int n = 2; n <= 5; ++n) {
    for (const Composition& mu : all_compositions(n)) {
      for_each_permutation(n, [&](const Permutation& w) {
        const auto [u, v] = parabolic_decompose(w, mu);
        ASSERT_EQ(compose(u, v), w);
        ASSERT_EQ(length(u) + length(v), length(w));
        ASSERT_TRUE(in_parabolic(u, mu));
        ASSERT_TRUE(is_min_coset_rep(v, mu));
        // uniqueness: no other factorization satisfies the contract
        int count = 0;
        for_each_permutation(n, [&](const Permutation& uu) {
          if (!in_parabolic(uu, mu)) return;
          const Permutation vv = compose(inverse(uu), w);
          if (is_min_coset_rep(vv, mu) && length(uu) + length(vv) == length(w)) ++count;
        });
        ASSERT_EQ(count, 1);
      });
    }
  }
}

TEST(Standardize, Examples) {
  EXPECT_EQ(standardize({6, 3, 2, 7, 4}), P("42153"));
  EXPECT_EQ(standardize({7, 4, 2}), P("321"));
  EXPECT_EQ(standardize({2, 5, 9}), Permutation::identity(3));
  EXPECT_THROW(standardize({2, 2, 3}), std::invalid_argument);
}

TEST(Standardize, PreservesInversions) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    BlockWord q;
    std::set<int> used;
    while (q.size() < 5) {
      const int v = 1 + rng() % 30;
      if (used.insert(v).second) q.push_back(v);
    }
    const Permutation st = standardize(q);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j)
        ASSERT_EQ(q[i] > q[j], st(i + 1) > st(j + 1));
  }
}

TEST(RelativeValue, Examples) {
  const BlockWord q{6, 3, 2, 7, 4};
  EXPECT_EQ(relative_value(q, 4), 3);
  EXPECT_EQ(relative_value(q, 2), 1);  // minimum of the alphabet
  EXPECT_EQ(relative_value(q, 7), 5);  // maximum of the alphabet
}

TEST(Restrict, Examples) {
  const Permutation w = P("4231");
  EXPECT_EQ(restrict_to(w, {1, 2, 3, 4}), (BlockWord{4, 2, 3, 1}));
  EXPECT_EQ(restrict_to(w, {1, 3}), (BlockWord{4, 3}));
  EXPECT_EQ(restrict_to(Permutation::identity(5), {2, 4, 5}), (BlockWord{2, 4, 5}));
}

TEST(Words, LengthEqualsEveryReducedWord) {
  for_each_permutation(4, [](const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        if (w(i) > w(j)) ++inv;
    ASSERT_EQ(length(w), inv);
    for (const Word& a : reduced_words(w)) ASSERT_EQ(static_cast<int>(a.size()), inv);
  });
}

}  // namespace
}  // namespace muinv
