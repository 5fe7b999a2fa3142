#include <gtest/gtest.h>

#include "rbch/cosets.hpp"

using namespace rbch;

TEST(Expand, Examples) {
  const auto z = expand(0, 3, 4);
  EXPECT_EQ(z.weight(), 0u);
  EXPECT_TRUE(z.support().empty());

  const auto top = expand(80, 3, 4);
  EXPECT_EQ(top.weight(), 4u);
  EXPECT_EQ(top.q_weight(), 8u);

  const auto five = expand(5, 2, 4);
  EXPECT_EQ(five.to_string(), "(0,1,0,1)");
  EXPECT_EQ(five.weight(), 2u);
  EXPECT_EQ(five.support(), (std::vector<unsigned>{0, 2}));
  EXPECT_EQ(five.value(), 5u);

  EXPECT_THROW(expand(16, 2, 4), invalid_parameter);
}

TEST(Coset, Examples) {
  const auto c0 = cyclotomic_coset(0, 2, 4);
  EXPECT_EQ(c0.members, (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(c0.leader(), 0u);

  EXPECT_EQ(cyclotomic_coset(5, 2, 4).members, (std::vector<std::uint64_t>{5, 10}));
  for (std::uint64_t i = 1; i <= 8; ++i) EXPECT_EQ(cyclotomic_coset(i, 2, 5).size(), 5u);
  EXPECT_THROW(cyclotomic_coset(15, 2, 4), invalid_parameter);
}

TEST(Coset, LeaderIsMinimumAndConstant) {
  for (const auto& [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 12}, {3, 7}, {4, 6}, {5, 5}}) {
    const std::uint64_t n = detail::modulus_n(q, m);
    if (n > 4095) continue;
    for (std::uint64_t i = 1; i < n; ++i) {
      const auto c = cyclotomic_coset(i, q, m);
      EXPECT_LE(c.leader(), i);
      EXPECT_EQ(m % c.size(), 0u);
      EXPECT_EQ(coset_leader(i, q, m), c.leader());
      EXPECT_EQ(coset_leader(i * q % n, q, m), c.leader());
    }
  }
}

TEST(Negation, Examples) {
  EXPECT_TRUE(negation_in_coset(4, 4, 3, 2));
  EXPECT_TRUE(negation_in_coset(3, 3, 2, 4));
  EXPECT_FALSE(negation_in_coset(1, 1, 2, 5));
  EXPECT_THROW(negation_in_coset(0, 1, 2, 4), invalid_parameter);
}

TEST(LeaderPairs, Examples) {
  EXPECT_EQ(leader_pair_count_closed(3, 2, 5), 0u);
  EXPECT_EQ(leader_pair_count_enumerated(3, 2, 5), 0u);
  EXPECT_EQ(leader_pair_count_closed(7, 2, 6), 1u);
  EXPECT_EQ(leader_pair_count_enumerated(7, 2, 6), 1u);
  EXPECT_EQ(leader_pair_count_closed(2, 3, 2), 1u);
  EXPECT_EQ(leader_pair_count_enumerated(2, 3, 2), 1u);
  EXPECT_TRUE(leader_pair_count(20, 3, 3).match());
}

TEST(LeaderPairs, ClosedMatchesEnumerationSmallSweep) {
  for (std::uint64_t q = 2; q <= 5; ++q) {
    for (unsigned m = 2; m <= 6; ++m) {
      if (q == 4 || detail::modulus_n(q, m) > 20000) continue;
      const std::uint64_t range = std::min(negation_pair_range(q, m), detail::modulus_n(q, m) - 1);
      const auto counts = leader_pair_counts_enumerated(range, q, m);
      for (std::uint64_t l = 1; l <= range; ++l) {
        EXPECT_EQ(counts[l - 1], leader_pair_count_enumerated(l, q, m));
        if (const auto c = leader_pair_count_closed(l, q, m)) EXPECT_EQ(*c, counts[l - 1]) << q << " " << m << " " << l;
      }
    }
  }
}

TEST(Patterns, Examples) {
  const auto a = classify_negation_pair(7, 7, 2, 6);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->family, PatternFamily::binary_both_half);
  EXPECT_FALSE(a->via_multiple);

  const auto b = classify_negation_pair(3, 3, 2, 4);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->family, PatternFamily::binary_both_half);

  for (std::uint64_t i = 1; i <= 9; ++i) {
    for (std::uint64_t j = 1; j <= 9; ++j) {
      if (!negation_in_coset(i, j, 3, 3)) continue;
      const auto f = classify_negation_pair(i, j, 3, 3);
      ASSERT_TRUE(f.has_value()) << i << "," << j;
      EXPECT_TRUE(f->family == PatternFamily::odd_prefix_u || f->family == PatternFamily::odd_suffix_u);
      EXPECT_TRUE(f->u.has_value());
    }
  }
  EXPECT_THROW(classify_negation_pair(1, 1, 2, 5), invalid_parameter);
  EXPECT_THROW(classify_negation_pair(100, 1, 2, 5), invalid_parameter);
}

TEST(Runs, ScanExamples) {
  const ExpansionSequence zeros{2, 5, {0, 0, 0, 0, 0}};
  EXPECT_EQ(run_scan(zeros, 0, RunMode::straight), 5u);
  EXPECT_EQ(run_scan(zeros, 0, RunMode::circular), 5u);

  const ExpansionSequence a{2, 4, {1, 0, 0, 1}};
  EXPECT_EQ(run_scan(a, 0, RunMode::circular), 2u);
  const ExpansionSequence b{2, 4, {0, 1, 1, 0}};
  EXPECT_EQ(run_scan(b, 0, RunMode::circular), 2u);
  EXPECT_EQ(run_scan(b, 0, RunMode::straight), 1u);

  EXPECT_EQ(run_scan(expand(5, 2, 4), 0, RunMode::straight), 1u);
}

TEST(Runs, CircularAtLeastStraight) {
  for (std::uint64_t s = 0; s < 243; ++s) {
    const auto e = expand(s, 3, 5);
    for (std::uint32_t sym = 0; sym < 3; ++sym) {
      EXPECT_GE(run_scan(e, sym, RunMode::circular), run_scan(e, sym, RunMode::straight));
    }
  }
}

TEST(Runs, CountExamples) {
  EXPECT_EQ(run_count_l(2, 2, 5), 1u);
  EXPECT_EQ(run_count_l(2, 3, 2), 3u);
  EXPECT_EQ(run_count_l(2, 4, 2), 8u);
  EXPECT_EQ(run_count_l(3, 2, 2), 0u);
  EXPECT_EQ(run_count_oracle(1, 1, 2), 1u);
  EXPECT_EQ(run_count_oracle(2, 3, 3), 5u);
  EXPECT_EQ(run_count_oracle(3, 2, 2), 0u);
  EXPECT_THROW(run_count_oracle(2, 21, 2), budget_exceeded);
  EXPECT_THROW(run_count_l(0, 3, 2), invalid_parameter);
}

TEST(Runs, RecursionMatchesOracle) {
  for (std::uint64_t q = 2; q <= 4; ++q) {
    for (unsigned s = 1; s <= 9; ++s) {
      const auto table = run_count_oracle_table(s, q);
      for (unsigned r = 1; r <= s; ++r) EXPECT_EQ(run_count_l(r, s, q), table[r]) << q << " " << r << " " << s;
    }
  }
}
