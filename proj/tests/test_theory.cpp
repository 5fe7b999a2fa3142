#include <gtest/gtest.h>

#include "rbch/theory.hpp"

using namespace rbch;

TEST(ClosedForm, Examples) {
  EXPECT_EQ(dimension_closed_form(2, 5, 3).k_closed, 20u);
  EXPECT_EQ(dimension_closed_form(3, 3, 4).k_closed, 13u);
  EXPECT_EQ(dimension_closed_form(2, 6, 5).k_closed, 38u);
  for (const std::uint64_t q : {3, 5, 7}) {
    for (unsigned m = 2; m <= 4; ++m) {
      const std::uint64_t n = detail::modulus_n(q, m);
      EXPECT_EQ(dimension_closed_form(q, m, 2).k_closed, n + 1 - 2 - 2 * m) << q << " " << m;
    }
  }
}

TEST(ClosedForm, DigitsAndEpsilon) {
  const auto r = dimension_closed_form(3, 4, 12);
  EXPECT_EQ(r.delta_q * 3 + r.delta_0, 11u);
  EXPECT_LT(r.delta_0, 3u);
  EXPECT_EQ(r.epsilon, 1u);
  EXPECT_EQ(dimension_closed_form(3, 4, 10).epsilon, 0u);
  EXPECT_EQ(dimension_closed_form(3, 4, 11).epsilon, 1u);
  EXPECT_EQ(dimension_closed_form(2, 5, 8).epsilon, 0u);
  EXPECT_FALSE(r.case_label.empty());
}

TEST(ClosedForm, NotApplicable) {
  // beyond every branch
  EXPECT_THROW(dimension_closed_form(2, 6, 20), formula_not_applicable);
  // 2 delta = n + 2 lies outside the strict range
  EXPECT_THROW(dimension_closed_form(3, 2, 5), formula_not_applicable);
  EXPECT_THROW(dimension_closed_form(2, 1, 2), formula_not_applicable);
  EXPECT_THROW(dimension_closed_form(6, 2, 2), invalid_parameter);
}

TEST(ClosedForm, AgreesWithConstructionSmall) {
  for (const std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned m = 2; m <= 5; ++m) {
      const std::uint64_t n = detail::modulus_n(q, m);
      if (n > 1100) continue;
      const auto field = code_field(q, m);
      for (std::uint64_t delta = 2; 2 * delta < n + 2; ++delta) {
        DimensionReport rep;
        try {
          rep = dimension_closed_form(q, m, delta);
        } catch (const formula_not_applicable&) {
          continue;
        }
        const auto full = dimension_report(q, m, delta, true, field);
        EXPECT_TRUE(full.consistent()) << q << " " << m << " " << delta;
        EXPECT_EQ(overline_degree_enumerated(q, m, delta), n - *full.k_constructed);
        EXPECT_EQ(overline_degree_from_counts(q, m, delta), n - *full.k_constructed);
      }
    }
  }
}

TEST(ClosedForm, ReportWithoutBranch) {
  const auto rep = dimension_report(2, 6, 20);
  EXPECT_FALSE(rep.k_closed.has_value());
  ASSERT_TRUE(rep.k_constructed.has_value());
  EXPECT_EQ(*rep.k_constructed, 63 - overline_degree_enumerated(2, 6, 20));
}

TEST(DegreeFormula, Examples) {
  EXPECT_EQ(degree_formula(2, 4, 2), 8u);
  EXPECT_EQ(degree_formula(2, 4, 3), 14u);
  EXPECT_EQ(degree_formula(3, 2, 1), 4u);
  EXPECT_THROW(degree_formula(2, 4, 1), invalid_parameter);
  EXPECT_THROW(degree_formula(2, 4, 4), invalid_parameter);
}

TEST(DegreeFormula, MatchesConstruction) {
  for (const std::uint64_t q : {2, 3}) {
    for (unsigned m = 2; m <= 6; ++m) {
      const auto field = code_field(q, m);
      for (unsigned lambda = (m + 1) / 2; lambda < m; ++lambda) {
        const auto delta = detail::checked_pow(q, lambda);
        const auto plus = build_code(q, m, delta, Variant::plus, field);
        EXPECT_EQ(degree_formula(q, m, lambda), static_cast<std::uint64_t>(plus.generator.degree()))
            << q << " " << m << " " << lambda;
      }
    }
  }
}

TEST(Bounds, Examples) {
  const auto r = dimension_bounds(2, 4, 2);
  EXPECT_EQ(r.lower, 0);
  EXPECT_EQ(r.upper, 2);
  EXPECT_EQ(build_code(2, 4, 4, Variant::overline).dimension, 2u);

  const auto big = dimension_bounds(2, 6, 3);
  const auto k = build_code(2, 6, 8, Variant::overline).dimension;
  EXPECT_LE(big.lower, static_cast<std::int64_t>(k));
  EXPECT_GE(big.upper, static_cast<std::int64_t>(k));
  EXPECT_TRUE(big.n_bounds_hold());
}

TEST(Bounds, CollapsedWhenNPrimeEmpty) {
  for (const std::uint64_t q : {2, 3}) {
    for (unsigned m = 2; m <= 7; ++m) {
      for (unsigned lambda = (m + 1) / 2; lambda < m; ++lambda) {
        const auto r = dimension_bounds(q, m, lambda);
        if (r.n_prime_size == 0) EXPECT_EQ(r.lower, r.upper);
        EXPECT_LE(r.lower, r.upper);
        EXPECT_TRUE(r.n_bounds_hold());
        EXPECT_TRUE(r.brackets_k());
      }
    }
  }
}

TEST(SpherePacking, Examples) {
  const auto yes = sphere_packing_check(2, 5, 3, 20);
  EXPECT_TRUE(yes.holds);
  EXPECT_EQ(yes.volume, 4992);
  EXPECT_EQ(yes.space, 2048);

  const auto no = sphere_packing_check(2, 6, 5, 38);
  EXPECT_FALSE(no.holds);
  EXPECT_EQ(no.volume, 7666240);
  EXPECT_EQ(no.space, BigInt(1) << 25);

  EXPECT_TRUE(sphere_packing_trigger(2, 8, 5, *dimension_closed_form(2, 8, 5).k_closed));
}

TEST(SpherePacking, BigBinomials) {
  EXPECT_EQ(binomial(63, 5), 7028847);
  EXPECT_EQ(binomial(10, 11), 0);
  EXPECT_EQ(binomial(1048575, 3), BigInt("192152484591435775"));
  EXPECT_EQ(binomial(200, 100), BigInt("90548514656103281165404177077484163874504589675413336841320"));
  EXPECT_EQ(ball_volume(2, 31, 3), 4992);
}

TEST(BchBound, Examples) {
  EXPECT_EQ(bch_lower_bound(3), 6u);
  EXPECT_EQ(bch_lower_bound(2), 4u);
  EXPECT_EQ(bch_lower_bound(13), 26u);
}
