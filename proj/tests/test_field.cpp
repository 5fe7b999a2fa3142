#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rbch/field.hpp"

using namespace rbch;

namespace {

FieldPtr gf(std::uint32_t p, unsigned k, const char* modulus) {
  return Field::build(p, k, parse_digit_polynomial(modulus, p), AlphaChoice::indeterminate);
}

}  // namespace

TEST(FieldBuild, BinaryQuinticModulus) {
  const auto f = gf(2, 5, "x^5+x^2+1");
  EXPECT_EQ(f->order(), 32u);
  EXPECT_TRUE(f->alpha_is_indeterminate());
  const auto a = f->alpha();
  EXPECT_EQ(f->pow(a, 5), f->add(f->pow(a, 2), f->one()));
}

TEST(FieldBuild, TernaryCubicModulus) {
  const auto f = gf(3, 3, "x^3-x+1");
  const auto a = f->alpha();
  // alpha^3 = alpha - 1
  EXPECT_EQ(f->pow(a, 3), f->sub(a, f->one()));
  EXPECT_EQ(f->mul(a, f->mul(a, a)), f->sub(a, f->one()));
}

TEST(FieldBuild, PrimeFieldOfOrderTwo) {
  const auto f = Field::build(2, 1);
  EXPECT_EQ(f->order(), 2u);
  EXPECT_EQ(f->alpha(), f->one());
}

TEST(FieldBuild, Rejections) {
  EXPECT_THROW(Field::build(4, 2), invalid_parameter);
  EXPECT_THROW(Field::build(2, 0), invalid_parameter);
  // x^2 + 1 = (x + 1)^2 over GF(2)
  EXPECT_THROW(Field::build(2, 2, Digits{1, 0, 1}), invalid_parameter);
  // not monic
  EXPECT_THROW(Field::build(3, 2, Digits{2, 0, 2}), invalid_parameter);
  // x^4+x^3+x^2+x+1 is irreducible over GF(2) but its root has order 5
  EXPECT_THROW(Field::build(2, 4, Digits{1, 1, 1, 1, 1}, AlphaChoice::indeterminate), invalid_parameter);
  const auto f = Field::build(2, 4, Digits{1, 1, 1, 1, 1});
  EXPECT_FALSE(f->alpha_is_indeterminate());
  EXPECT_EQ(f->log(f->alpha()), 1u);
}

TEST(FieldBuild, CanonicalModulusIsSmallestPrimitive) {
  EXPECT_EQ(Field::canonical_modulus(2, 4), (Digits{1, 0, 0, 1, 1}));  // x^4 + x^3 + 1
  EXPECT_EQ(Field::canonical_modulus(2, 5), (Digits{1, 0, 0, 1, 0, 1}));  // x^5 + x^3 + 1
  EXPECT_EQ(Field::canonical_modulus(3, 2), (Digits{2, 1, 1}));  // x^2 + x + 2
}

TEST(FieldArith, LogExponentAddition) {
  const auto f = Field::build(2, 4);
  EXPECT_EQ(f->mul(f->exp(3), f->exp(5)), f->exp(8));
  EXPECT_EQ(f->div(f->exp(3), f->exp(5)), f->exp(-2));
  EXPECT_EQ(f->exp(15), f->one());
}

TEST(FieldArith, CharacteristicKillsPMultiples) {
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 6}, {3, 4}, {5, 2}, {7, 1}}) {
    const auto f = Field::build(p, k);
    for (std::uint64_t v = 0; v < f->order(); v += 7) {
      const auto x = f->element(v);
      EXPECT_TRUE(f->add(x, f->mul(f->from_integer(p - 1), x)).is_zero());
      EXPECT_TRUE(f->add(x, f->neg(x)).is_zero());
    }
  }
}

TEST(FieldArith, DivisionByZeroAndMixedFields) {
  const auto f = Field::build(2, 3);
  const auto g = Field::build(2, 3);
  EXPECT_THROW((void)f->inv(f->zero()), invalid_parameter);
  EXPECT_THROW((void)f->div(f->one(), f->zero()), invalid_parameter);
  EXPECT_THROW((void)f->log(f->zero()), invalid_parameter);
  EXPECT_THROW((void)f->add(f->one(), g->one()), invalid_parameter);
}

TEST(FieldLog, RoundTripAndGroupOrder) {
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 8}, {3, 5}, {5, 3}, {13, 2}}) {
    const auto f = Field::build(p, k);
    const auto n = f->order() - 1;
    EXPECT_EQ(f->log(f->alpha()), 1u);
    EXPECT_EQ(f->log(f->one()), 0u);
    EXPECT_EQ(f->exp(static_cast<std::int64_t>(n)), f->one());
    for (std::uint64_t v = 1; v < f->order(); ++v) {
      const auto a = f->element(v);
      EXPECT_EQ(f->exp(static_cast<std::int64_t>(f->log(a))), a);
      EXPECT_EQ(f->pow(a, static_cast<std::int64_t>(n)), f->one());
    }
  }
}

TEST(FieldLog, LargeFieldWithoutTables) {
  const auto f = Field::build(2, 25);
  EXPECT_FALSE(f->has_log_tables());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, f->order() - 1);
  for (int t = 0; t < 20; ++t) {
    const auto a = f->element(pick(rng));
    EXPECT_EQ(f->exp(static_cast<std::int64_t>(f->log(a))), a);
  }
}

TEST(FieldFrobenius, AdditiveAndMultiplicative) {
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 10}, {3, 6}, {7, 3}}) {
    const auto f = Field::build(p, k);
    std::mt19937_64 rng(p * 100 + k);
    std::uniform_int_distribution<std::uint64_t> pick(0, f->order() - 1);
    for (int t = 0; t < 1000; ++t) {
      const auto a = f->element(pick(rng));
      const auto b = f->element(pick(rng));
      EXPECT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
      EXPECT_EQ(f->frobenius(f->mul(a, b)), f->mul(f->frobenius(a), f->frobenius(b)));
    }
  }
}

TEST(FieldSubfield, MembershipCounts) {
  const auto f5 = Field::build(2, 5);
  for (std::uint64_t v = 0; v < 32; ++v) EXPECT_EQ(f5->in_subfield(f5->element(v), 2), v <= 1);

  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 16}, {2, 12}, {3, 6}, {5, 4}}) {
    const auto f = Field::build(p, k);
    for (unsigned e = 1; e <= k; ++e) {
      if (k % e != 0) continue;
      const std::uint64_t q = detail::checked_pow(p, e);
      std::uint64_t count = 0;
      for (std::uint64_t v = 0; v < f->order(); ++v) count += f->in_subfield(f->element(v), q) ? 1 : 0;
      EXPECT_EQ(count, q) << "p=" << p << " k=" << k << " q=" << q;
    }
  }
}

TEST(FieldSubfield, NormElementAndAlpha) {
  const auto f = Field::build(2, 6);
  EXPECT_TRUE(f->in_subfield(f->exp(63 / 3), 4));
  EXPECT_TRUE(f->in_subfield(f->exp(63 / 7), 8));
  EXPECT_FALSE(f->in_subfield(f->alpha(), 4));
  EXPECT_THROW((void)f->in_subfield(f->alpha(), 32), invalid_parameter);
  EXPECT_THROW((void)f->in_subfield(f->alpha(), 3), invalid_parameter);
}

TEST(PolynomialText, ParseAndFormat) {
  EXPECT_EQ(parse_digit_polynomial("x^5+x^2+1", 2), (Digits{1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(parse_digit_polynomial("1 + x^2 + x^5", 2), (Digits{1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(parse_digit_polynomial("x^3-x+1", 3), (Digits{1, 2, 0, 1}));
  EXPECT_EQ(parse_digit_polynomial("2x^2 + x", 3), (Digits{0, 1, 2}));
  EXPECT_EQ(format_digit_polynomial(Digits{1, 2, 0, 1}), "x^3 + 2x + 1");
  EXPECT_THROW(parse_digit_polynomial("x^^2", 2), invalid_parameter);
  EXPECT_THROW(parse_digit_polynomial("", 2), invalid_parameter);
}
