#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "rbch/bch.hpp"

using namespace rbch;

namespace {

const char* kTernaryGenerator = "x^13 + x^12 + 2x^11 + 2x^10 + x^8 + 2x^5 + x^3 + x^2 + 2x + 2";

Polynomial random_message(const BchCode& code, std::mt19937_64& rng) {
  const auto& f = *code.field;
  std::vector<Element> sub;
  for (std::uint64_t v = 0; v < f.order(); ++v) {
    if (f.in_subfield(f.element(v), code.q)) sub.push_back(f.element(v));
  }
  std::uniform_int_distribution<std::size_t> pick(0, sub.size() - 1);
  std::vector<Element> c(code.dimension);
  for (auto& x : c) x = sub[pick(rng)];
  return {code.field, c};
}

}  // namespace

TEST(BuildCode, TernaryExampleGenerator) {
  const auto field = code_field(3, 3, parse_digit_polynomial("x^3-x+1", 3));
  const auto code = build_code(3, 3, 4, Variant::overline, field);
  EXPECT_EQ(to_string(code.generator), kTernaryGenerator);
  EXPECT_EQ(code.dimension, 13u);
  EXPECT_TRUE(is_reversible(code));
}

TEST(BuildCode, BinaryLengthFifteen) {
  const auto field = code_field(2, 4);
  EXPECT_EQ(build_code(2, 4, 3, Variant::plus, field).generator.degree(), 4);
  EXPECT_EQ(build_code(2, 4, 3, Variant::tilde, field).generator.degree(), 8);
  EXPECT_EQ(build_code(2, 4, 3, Variant::overline, field).dimension, 6u);
  EXPECT_EQ(build_code(2, 4, 5, Variant::overline, field).dimension, 2u);
}

TEST(BuildCode, GeneratorVanishesOnDefiningSet) {
  const auto field = code_field(2, 5);
  for (const auto v : {Variant::plus, Variant::minus, Variant::tilde, Variant::overline}) {
    const auto code = build_code(2, 5, 4, v, field);
    for (const auto i : defining_exponents(31, 4, v)) {
      EXPECT_TRUE(code.generator.evaluate(field->exp(static_cast<std::int64_t>(i))).is_zero());
    }
    EXPECT_EQ(code.zeros.size(), static_cast<std::size_t>(code.generator.degree()));
  }
}

TEST(BuildCode, RangeChecks) {
  const auto field = code_field(2, 4);
  EXPECT_THROW(build_code(2, 4, 1, Variant::plus, field), invalid_parameter);
  EXPECT_THROW(build_code(2, 4, 15, Variant::plus, field), invalid_parameter);
  EXPECT_NO_THROW(build_code(2, 4, 14, Variant::plus, field));
  EXPECT_NO_THROW(build_code(2, 4, 8, Variant::tilde, field));
  EXPECT_THROW(build_code(2, 4, 9, Variant::tilde, field), invalid_parameter);
  EXPECT_THROW(build_code(2, 4, 20, Variant::overline, field), invalid_parameter);
  EXPECT_THROW(build_code(3, 4, 3, Variant::plus, field), invalid_parameter);
  EXPECT_THROW(code_field(6, 2), invalid_parameter);
  EXPECT_THROW(parse_variant("bar"), invalid_parameter);
}

TEST(BuildCode, NonPrimeAlphabet) {
  const auto code = build_code(4, 3, 3, Variant::overline);
  EXPECT_FALSE(code.has_digit_form());
  EXPECT_TRUE(coefficients_in_subfield(code.generator, 4));
  EXPECT_TRUE(is_reversible(code));
  const auto xn1 = Polynomial::x_n_minus_one(code.field, code.n);
  EXPECT_TRUE((xn1 % code.generator).is_zero());
}

TEST(Structure, RandomCodewordsAcrossVariants) {
  std::mt19937_64 rng(42);
  for (const auto& [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 5}, {3, 3}, {4, 2}, {5, 2}}) {
    const auto field = code_field(q, m);
    const std::uint64_t n = detail::modulus_n(q, m);
    for (std::uint64_t delta = 2; delta <= max_delta(q, m, Variant::overline); ++delta) {
      const auto plus = build_code(q, m, delta, Variant::plus, field);
      const auto minus = build_code(q, m, delta, Variant::minus, field);
      const auto tilde = build_code(q, m, delta, Variant::tilde, field);
      const auto bar = build_code(q, m, delta, Variant::overline, field);
      EXPECT_EQ(plus.generator.degree(), minus.generator.degree());
      EXPECT_EQ(reciprocal(plus.generator).monic(), minus.generator);
      EXPECT_EQ(bar.generator, tilde.generator * Polynomial::linear(field, field->one()));
      if (bar.dimension == 0) continue;
      for (int t = 0; t < 10; ++t) {
        const auto c = encode(random_message(bar, rng), bar);
        EXPECT_TRUE(membership(c, bar));
        EXPECT_TRUE(membership(reverse_word(c, n), bar));
        EXPECT_TRUE(c.evaluate(field->one()).is_zero());
        EXPECT_TRUE(membership(c, tilde));
      }
    }
  }
}

TEST(Membership, RejectsNonCodewords) {
  const auto code = build_code(2, 4, 3, Variant::overline);
  const auto one = Polynomial::constant(code.field, code.field->one());
  EXPECT_FALSE(membership(one, code));
  EXPECT_TRUE(membership(code.generator, code));
  EXPECT_THROW(membership(Polynomial::monomial(code.field, code.field->one(), 15), code), invalid_parameter);
  EXPECT_THROW(membership(Polynomial::constant(code.field, code.field->alpha()), code), invalid_parameter);
  const auto other = code_field(2, 4);
  EXPECT_THROW(membership(Polynomial::constant(other, other->one()), code), invalid_parameter);
}

TEST(DigitPath, AgreesWithPolynomialPath) {
  std::mt19937_64 rng(9);
  const auto code = build_code(3, 4, 5, Variant::overline);
  ASSERT_TRUE(code.has_digit_form());
  std::uniform_int_distribution<std::uint32_t> sym(0, 2);
  for (int t = 0; t < 50; ++t) {
    DigitWord msg(code.dimension);
    for (auto& v : msg) v = static_cast<std::uint8_t>(sym(rng));
    const DigitWord c = digit::encode(msg, code);
    const Polynomial cp = encode(digit::to_polynomial(msg, code.field), code);
    EXPECT_EQ(digit::from_polynomial(cp, code.n), c);
    EXPECT_TRUE(digit::is_member(digit::reversed(c, code.n), code));
    DigitWord bad = c;
    bad[0] = static_cast<std::uint8_t>((bad[0] + 1) % 3);
    EXPECT_FALSE(digit::is_member(bad, code));
  }
}

TEST(Registry, SharesCodesAcrossThreads) {
  CodeRegistry reg;
  std::vector<std::shared_ptr<const BchCode>> got(4);
  std::vector<std::thread> ts;
  for (int t = 0; t < 4; ++t) {
    ts.emplace_back([&, t] { got[t] = reg.get(2, 6, 5, Variant::overline); });
  }
  for (auto& t : ts) t.join();
  for (const auto& g : got) EXPECT_EQ(g, got.front());
  EXPECT_EQ(reg.size(), 1u);
  EXPECT_EQ(reg.get(2, 6, 5, Variant::plus)->field, got.front()->field);
  EXPECT_EQ(reg.size(), 2u);
}

TEST(Summary, Fields) {
  const auto s = summarize(build_code(2, 4, 3, Variant::overline));
  EXPECT_EQ(s.k, 6u);
  EXPECT_EQ(s.n, 15u);
  EXPECT_TRUE(s.self_reciprocal);
  EXPECT_FALSE(summarize(build_code(2, 4, 3, Variant::plus)).self_reciprocal);
}
