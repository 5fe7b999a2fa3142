#pragma once

// Narrow-sense primitive BCH generators g+ and g-, the reversible generator
// g~ = lcm(g-, g+), and the even-like generator (x - 1) g~, together with
// membership, encoding and reversibility checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "rbch/cosets.hpp"
#include "rbch/errors.hpp"
#include "rbch/field.hpp"
#include "rbch/polynomial.hpp"

namespace rbch {

enum class Variant { plus, minus, tilde, overline };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::plus: return "plus";
    case Variant::minus: return "minus";
    case Variant::tilde: return "tilde";
    case Variant::overline: return "overline";
  }
  return "unknown";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "plus") return Variant::plus;
  if (s == "minus") return Variant::minus;
  if (s == "tilde") return Variant::tilde;
  if (s == "overline") return Variant::overline;
  throw invalid_parameter("unknown variant '" + std::string(s) + "' (expected plus, minus, tilde or overline)");
}

/// Codewords over a prime alphabet as one digit per coordinate, lowest degree first.
using DigitWord = std::vector<std::uint8_t>;

struct BchCode {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  Variant variant = Variant::overline;
  FieldPtr field;
  Polynomial generator;
  std::uint64_t dimension = 0;
  std::vector<std::uint64_t> zeros;  ///< exponents j with generator(alpha^j) = 0, ascending
  DigitWord generator_digits;        ///< filled when q is a prime below 128

  [[nodiscard]] bool has_digit_form() const noexcept { return !generator_digits.empty(); }
  [[nodiscard]] std::uint32_t prime() const noexcept { return field->characteristic(); }
};

/// GF(q^m) with q = p^e, built as GF(p^(e m)).  `modulus` is over GF(p).
inline FieldPtr code_field(std::uint64_t q, unsigned m, const std::optional<Digits>& modulus = std::nullopt,
                           AlphaChoice choice = AlphaChoice::first_primitive) {
  if (m == 0) throw invalid_parameter("m must be positive");
  const auto factors = detail::prime_factors(q);
  if (q < 2 || factors.size() != 1) throw invalid_parameter("q = " + std::to_string(q) + " is not a prime power");
  const auto p = static_cast<std::uint32_t>(factors.front());
  const unsigned e = *detail::exact_log(q, p);
  return Field::build(p, e * m, modulus, choice);
}

/// Largest admissible designed distance for the variant.
inline std::uint64_t max_delta(std::uint64_t q, unsigned m, Variant v) {
  const std::uint64_t n = detail::modulus_n(q, m);
  if (v == Variant::plus || v == Variant::minus) return n - 1;  // 2 <= delta < n
  return (n + 1) / 2;                                            // 2 <= delta < (n + 2) / 2
}

inline void validate_delta(std::uint64_t q, unsigned m, std::uint64_t delta, Variant v) {
  const std::uint64_t hi = max_delta(q, m, v);
  if (delta < 2 || delta > hi) {
    const std::uint64_t n = detail::modulus_n(q, m);
    const std::string bound = (v == Variant::plus || v == Variant::minus) ? "n" : "(n+2)/2";
    throw invalid_parameter("delta = " + std::to_string(delta) + " out of range: need 2 <= delta < " + bound +
                            " (n = " + std::to_string(n) + ", largest admissible delta " + std::to_string(hi) + ")");
  }
}

/// Exponents i whose minimal polynomials make up the generator.
inline std::vector<std::uint64_t> defining_exponents(std::uint64_t n, std::uint64_t delta, Variant v) {
  std::vector<std::uint64_t> out;
  if (v == Variant::overline) out.push_back(0);
  if (v != Variant::minus) {
    for (std::uint64_t i = 1; i < delta; ++i) out.push_back(i);
  }
  if (v != Variant::plus) {
    for (std::uint64_t i = n - delta + 1; i < n; ++i) out.push_back(i);
  }
  return out;
}

namespace digit {

inline DigitWord multiply(const DigitWord& a, const DigitWord& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  DigitWord r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint32_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<std::uint8_t>((r[i + j] + ai * b[j]) % p);
  }
  return r;
}

/// Multiples f*g for f in [0, p-1], reduced mod p.
inline std::vector<DigitWord> multiples(const DigitWord& g, std::uint32_t p) {
  std::vector<DigitWord> out(p, DigitWord(g.size(), 0));
  for (std::uint32_t f = 1; f < p; ++f) {
    for (std::size_t j = 0; j < g.size(); ++j) out[f][j] = static_cast<std::uint8_t>(f * g[j] % p);
  }
  return out;
}

/// dst[offset + j] += src[j] (mod p) over the length of src.
inline void add_shifted(DigitWord& dst, const DigitWord& src, std::size_t offset, std::uint8_t p) {
  std::uint8_t* d = dst.data() + offset;
  const std::uint8_t* s = src.data();
  const std::size_t len = src.size();
  for (std::size_t j = 0; j < len; ++j) {
    const auto v = static_cast<std::uint8_t>(d[j] + s[j]);
    d[j] = v >= p ? static_cast<std::uint8_t>(v - p) : v;
  }
}

/// msg * generator as a length-n word (deg msg < k, so no wrap-around).
inline DigitWord encode(const DigitWord& msg, const BchCode& code) {
  const auto p = static_cast<std::uint8_t>(code.prime());
  if (msg.size() > code.dimension) throw invalid_parameter("message longer than the code dimension");
  const auto mult = multiples(code.generator_digits, p);
  DigitWord c(code.n, 0);
  for (std::size_t i = 0; i < msg.size(); ++i) {
    if (msg[i] != 0) add_shifted(c, mult[msg[i]], i, p);
  }
  return c;
}

/// c mod generator, as a word of length deg(generator).
inline DigitWord remainder(DigitWord c, const BchCode& code) {
  const auto p = static_cast<std::uint8_t>(code.prime());
  const DigitWord& g = code.generator_digits;
  const std::size_t dg = g.size() - 1;
  if (c.size() > dg) {
    const auto mult = multiples(g, p);
    for (std::size_t top = c.size(); top-- > dg;) {
      const std::uint8_t lead = c[top];
      if (lead == 0) continue;
      add_shifted(c, mult[p - lead], top - dg, p);  // subtract lead * g * x^(top - dg); g is monic
    }
  }
  c.resize(std::min(c.size(), dg));
  return c;
}

inline bool is_member(const DigitWord& c, const BchCode& code) {
  if (c.size() > code.n) return false;
  const DigitWord r = remainder(c, code);
  return std::all_of(r.begin(), r.end(), [](std::uint8_t v) { return v == 0; });
}

/// (c_{n-1}, ..., c_0) for a length-n word.
inline DigitWord reversed(DigitWord c, std::size_t n) {
  c.resize(n, 0);
  std::reverse(c.begin(), c.end());
  return c;
}

inline std::uint32_t sum(const DigitWord& c, std::uint32_t p) {
  std::uint64_t s = 0;
  for (const auto v : c) s += v;
  return static_cast<std::uint32_t>(s % p);
}

inline std::size_t weight(const DigitWord& c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](std::uint8_t v) { return v != 0; }));
}

inline DigitWord from_polynomial(const Polynomial& f, std::size_t n) {
  const auto d = to_digits(f);
  if (!d) throw invalid_parameter("polynomial has coefficients outside the prime field");
  DigitWord w(std::max<std::size_t>(n, d->size()), 0);
  for (std::size_t i = 0; i < d->size(); ++i) w[i] = static_cast<std::uint8_t>((*d)[i]);
  return w;
}

inline Polynomial to_polynomial(const DigitWord& w, const FieldPtr& field) {
  Digits d(w.begin(), w.end());
  return Polynomial::from_digits(field, d);
}

}  // namespace digit

/// Builds the code with generator lcm of the minimal polynomials of alpha^i over the defining exponents.
/// Minimal polynomials are multiplied in once per coset leader, so the product is squarefree.
inline BchCode build_code(std::uint64_t q, unsigned m, std::uint64_t delta, Variant variant, const FieldPtr& field) {
  if (!field) throw invalid_parameter("no field supplied");
  const std::uint64_t n = detail::modulus_n(q, m);
  if (field->order() != n + 1) {
    throw invalid_parameter("field has " + std::to_string(field->order()) + " elements, expected q^m = " +
                            std::to_string(n + 1));
  }
  (void)field->subfield_degree(q);
  validate_delta(q, m, delta, variant);

  std::set<std::uint64_t> leaders;
  std::set<std::uint64_t> zeros;
  for (const auto i : defining_exponents(n, delta, variant)) {
    const std::uint64_t leader = coset_leader(i, q, m);
    if (!leaders.insert(leader).second) continue;
    const auto coset = cyclotomic_coset(leader, q, m);
    zeros.insert(coset.members.begin(), coset.members.end());
  }

  const std::uint32_t p = field->characteristic();
  const bool digit_form = q == p && p < 128;
  DigitWord gd{1};
  Polynomial g = Polynomial::constant(field, field->one());
  for (const auto leader : leaders) {
    const Polynomial mi = minimal_polynomial(field, q, leader);
    if (digit_form) {
      gd = digit::multiply(gd, digit::from_polynomial(mi, 0), p);
    } else {
      g = g * mi;
    }
  }
  if (digit_form) g = digit::to_polynomial(gd, field);

  BchCode code{q, m, n, delta, variant, field, g, 0, {zeros.begin(), zeros.end()}, {}};
  code.dimension = n - static_cast<std::uint64_t>(code.generator.degree());
  if (digit_form) code.generator_digits = std::move(gd);
  return code;
}

/// Convenience overload building GF(q^m) from an optional modulus.
inline BchCode build_code(std::uint64_t q, unsigned m, std::uint64_t delta, Variant variant,
                          const std::optional<Digits>& modulus = std::nullopt) {
  return build_code(q, m, delta, variant, code_field(q, m, modulus));
}

namespace detail {

inline void check_word(const Polynomial& c, const BchCode& code) {
  if (c.field()->id() != code.field->id()) throw invalid_parameter("word and code use different fields");
  if (c.degree() >= static_cast<long>(code.n)) throw invalid_parameter("word has degree >= n");
  if (!coefficients_in_subfield(c, code.q)) throw invalid_parameter("word has symbols outside GF(q)");
}

}  // namespace detail

/// True iff the generator divides c.
inline bool membership(const Polynomial& c, const BchCode& code) {
  detail::check_word(c, code);
  if (code.has_digit_form()) return digit::is_member(digit::from_polynomial(c, code.n), code);
  return (c % code.generator).is_zero();
}

/// Non-systematic encoder c = msg * generator.
inline Polynomial encode(const Polynomial& msg, const BchCode& code) {
  if (msg.field()->id() != code.field->id()) throw invalid_parameter("message and code use different fields");
  if (msg.degree() >= static_cast<long>(code.dimension)) throw invalid_parameter("message degree must be below k");
  if (!coefficients_in_subfield(msg, code.q)) throw invalid_parameter("message has symbols outside GF(q)");
  return reduce_cyclic(msg * code.generator, code.n);
}

inline bool is_reversible(const BchCode& code) { return is_self_reciprocal(code.generator); }

/// Plain-data view of a code for reports.
struct CodeSummary {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  Variant variant = Variant::overline;
  std::string generator;
  std::uint64_t k = 0;
  bool self_reciprocal = false;

  bool operator==(const CodeSummary&) const = default;
};

inline CodeSummary summarize(const BchCode& code) {
  return {code.q, code.m, code.n, code.delta, code.variant, to_string(code.generator), code.dimension,
          is_reversible(code)};
}

/// Process-wide cache of constructed codes keyed by (q, m, delta, variant, modulus).
class CodeRegistry {
 public:
  std::shared_ptr<const BchCode> get(std::uint64_t q, unsigned m, std::uint64_t delta, Variant variant,
                                     const std::optional<Digits>& modulus = std::nullopt) {
    const Key key{q, m, delta, variant, modulus.value_or(Digits{})};
    {
      std::shared_lock lock(mutex_);
      if (auto it = codes_.find(key); it != codes_.end()) return it->second;
    }
    FieldPtr field;
    {
      std::shared_lock lock(mutex_);
      if (auto it = fields_.find({q, m, key.modulus}); it != fields_.end()) field = it->second;
    }
    if (!field) field = code_field(q, m, modulus);
    auto code = std::make_shared<const BchCode>(build_code(q, m, delta, variant, field));
    std::unique_lock lock(mutex_);
    fields_.try_emplace({q, m, key.modulus}, field);
    return codes_.try_emplace(key, std::move(code)).first->second;
  }

  [[nodiscard]] std::size_t size() const {
    std::shared_lock lock(mutex_);
    return codes_.size();
  }

 private:
  struct Key {
    std::uint64_t q;
    unsigned m;
    std::uint64_t delta;
    Variant variant;
    Digits modulus;
    auto operator<=>(const Key&) const = default;
  };
  using FieldKey = std::tuple<std::uint64_t, unsigned, Digits>;

  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const BchCode>> codes_;
  std::map<FieldKey, FieldPtr> fields_;
};

}  // namespace rbch
