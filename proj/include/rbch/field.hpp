#pragma once

// Arithmetic in GF(p^k) over a polynomial basis.
//
// Elements are packed as base-p integers: the digit vector (d_0, ..., d_{k-1})
// of d_0 + d_1 x + ... + d_{k-1} x^{k-1} is stored as sum d_i p^i.  A field
// carries a designated primitive element alpha; when the field is small enough
// multiplication goes through exp/log tables built from alpha.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rbch/errors.hpp"

namespace rbch {

/// Ascending coefficient digits of a polynomial over a prime field.
using Digits = std::vector<std::uint32_t>;

/// Fields up to this many elements get eager exp/log tables.
inline constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 24;

namespace detail {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// base^exp, throwing when the result leaves 63 bits.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 63) / base) {
      throw invalid_parameter("integer power overflows 63 bits");
    }
    r *= base;
  }
  return r;
}

/// Returns e when v == p^e (e >= 1).
inline std::optional<unsigned> exact_log(std::uint64_t v, std::uint64_t p) {
  if (p < 2 || v < p) return std::nullopt;
  unsigned e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) return std::nullopt;
  return e;
}

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

inline std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

// Polynomials over GF(p) as trimmed ascending digit vectors; empty is zero.

inline void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Digits poly_sub(Digits a, const Digits& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

inline Digits poly_mul(const Digits& a, const Digits& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
  }
  trim(r);
  return r;
}

inline Digits poly_mod(Digits a, const Digits& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t inv_lead = invmod(f.back(), p);
  while (!a.empty() && a.size() > df) {
    const std::uint32_t c = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = submod(a[shift + i], mulmod(c, f[i], p), p);
    }
    trim(a);
  }
  return a;
}

inline Digits poly_gcd(Digits a, Digits b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Digits poly_powmod(Digits base, std::uint64_t e, const Digits& f, std::uint32_t p) {
  Digits r{1};
  base = poly_mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1U) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1U;
  }
  return poly_mod(std::move(r), f, p);
}

/// Ben-Or test: f is irreducible iff gcd(f, x^(p^j) - x) = 1 for 1 <= j <= deg f / 2.
inline bool is_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (f.size() < 2) return false;
  if (k == 1) return true;
  const Digits x{0, 1};
  Digits h = x;
  for (std::size_t j = 1; j <= k / 2; ++j) {
    h = poly_powmod(h, p, f, p);
    if (poly_gcd(f, poly_sub(h, x, p), p).size() > 1) return false;
  }
  return true;
}

/// True iff a (reduced mod f) has multiplicative order exactly `group_order`.
inline bool has_full_order(const Digits& a, const Digits& f, std::uint32_t p, std::uint64_t group_order,
                           const std::vector<std::uint64_t>& factors) {
  if (a.empty()) return false;
  for (const std::uint64_t r : factors) {
    const Digits t = poly_powmod(a, group_order / r, f, p);
    if (t.size() == 1 && t[0] == 1) return false;
  }
  return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A member of a specific Field.  Only the owning Field creates or interprets it.
class Element {
 public:
  Element() = default;

  [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
  [[nodiscard]] std::uint32_t field_id() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element, Element) = default;

 private:
  friend class Field;
  Element(std::uint32_t v, std::uint32_t field) : value_(v), field_(field) {}

  std::uint32_t value_ = 0;
  std::uint32_t field_ = 0;
};

/// How alpha is chosen when the modulus is supplied by the caller.
enum class AlphaChoice {
  first_primitive,  ///< x if primitive, else the smallest primitive packed value
  indeterminate,    ///< alpha must be x; a non-primitive modulus is an error
};

class Field {
 public:
  static FieldPtr build(std::uint32_t p, unsigned k, std::optional<Digits> modulus = std::nullopt,
                        AlphaChoice choice = AlphaChoice::first_primitive) {
    if (!detail::is_prime(p)) throw invalid_parameter("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw invalid_parameter("extension degree must be positive");
    const std::uint64_t order = detail::checked_pow(p, k);
    if (order > (std::uint64_t{1} << 32)) throw invalid_parameter("fields above 2^32 elements are not supported");

    Digits f;
    if (modulus) {
      f = *modulus;
      for (auto& d : f) {
        if (d >= p) throw invalid_parameter("modulus digit out of range for GF(" + std::to_string(p) + ")");
      }
      detail::trim(f);
      if (f.size() != k + 1) throw invalid_parameter("modulus must have degree " + std::to_string(k));
      if (f.back() != 1) throw invalid_parameter("modulus must be monic");
      if (!detail::is_irreducible(f, p)) throw invalid_parameter("modulus is reducible over GF(" + std::to_string(p) + ")");
    } else {
      f = canonical_modulus(p, k);
    }
    return FieldPtr(new Field(p, k, order, std::move(f), choice));
  }

  /// Lexicographically smallest monic primitive polynomial of degree k,
  /// comparing coefficient vectors from the constant term upward.
  static Digits canonical_modulus(std::uint32_t p, unsigned k) {
    const std::uint64_t order = detail::checked_pow(p, k);
    const auto factors = detail::prime_factors(order - 1);
    Digits f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t t = 0; t < order; ++t) {
      // c_0 is the most significant digit of t.
      std::uint64_t v = t;
      for (unsigned j = 0; j < k; ++j) {
        f[k - 1 - j] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (f[0] == 0) continue;
      if (!detail::is_irreducible(f, p)) continue;
      const Digits x = detail::poly_mod(Digits{0, 1}, f, p);
      if (detail::has_full_order(x, f, p, order - 1, factors)) return f;
    }
    throw invalid_parameter("no primitive polynomial found");  // unreachable for valid (p, k)
  }

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] unsigned degree() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t order() const noexcept { return order_; }
  [[nodiscard]] std::uint64_t group_order() const noexcept { return order_ - 1; }
  [[nodiscard]] const Digits& modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint32_t id() const noexcept { return id_; }
  [[nodiscard]] bool has_log_tables() const noexcept { return !log_.empty(); }
  [[nodiscard]] bool alpha_is_indeterminate() const noexcept { return alpha_is_x_; }

  [[nodiscard]] Element zero() const noexcept { return {0, id_}; }
  [[nodiscard]] Element one() const noexcept { return {1, id_}; }
  [[nodiscard]] Element alpha() const noexcept { return {alpha_, id_}; }

  [[nodiscard]] Element element(std::uint64_t packed) const {
    if (packed >= order_) throw invalid_parameter("packed value outside the field");
    return {static_cast<std::uint32_t>(packed), id_};
  }

  [[nodiscard]] Element from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() > k_) throw invalid_parameter("digit vector longer than the extension degree");
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] >= p_) throw invalid_parameter("digit out of range");
      v = v * p_ + d[i];
    }
    return {static_cast<std::uint32_t>(v), id_};
  }

  /// Image of an integer in the prime subfield.
  [[nodiscard]] Element from_integer(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(((v % p) + p) % p), id_};
  }

  [[nodiscard]] Digits digits(Element a) const {
    check(a);
    return unpack(a.value_);
  }

  [[nodiscard]] Element add(Element a, Element b) const { return {add_values(checked(a), checked(b)), id_}; }
  [[nodiscard]] Element sub(Element a, Element b) const { return {sub_values(checked(a), checked(b)), id_}; }
  [[nodiscard]] Element neg(Element a) const { return {neg_value(checked(a)), id_}; }
  [[nodiscard]] Element mul(Element a, Element b) const { return {mul_values(checked(a), checked(b)), id_}; }

  [[nodiscard]] Element inv(Element a) const {
    if (checked(a) == 0) throw invalid_parameter("inverse of zero");
    return {pow_value(a.value_, group_order() - 1), id_};
  }

  [[nodiscard]] Element div(Element a, Element b) const {
    if (checked(b) == 0) throw invalid_parameter("division by zero");
    return mul(a, inv(b));
  }

  [[nodiscard]] Element pow(Element a, std::int64_t e) const {
    check(a);
    if (a.value_ == 0) {
      if (e < 0) throw invalid_parameter("negative power of zero");
      return e == 0 ? one() : zero();
    }
    const auto n = static_cast<std::int64_t>(group_order());
    const std::int64_t r = ((e % n) + n) % n;
    return {pow_value(a.value_, static_cast<std::uint64_t>(r)), id_};
  }

  /// alpha^i for any integer i.
  [[nodiscard]] Element exp(std::int64_t i) const {
    const auto n = static_cast<std::int64_t>(group_order());
    const auto r = static_cast<std::uint64_t>(((i % n) + n) % n);
    if (has_log_tables()) return {exp_[r], id_};
    return {pow_value(alpha_, r), id_};
  }

  /// Discrete logarithm to base alpha, in [0, p^k - 2].
  [[nodiscard]] std::uint64_t log(Element a) const {
    if (checked(a) == 0) throw invalid_parameter("discrete log of zero");
    if (has_log_tables()) return log_[a.value_];
    return baby_step_giant_step(a.value_);
  }

  [[nodiscard]] Element frobenius(Element a) const { return {pow_value(checked(a), p_), id_}; }

  /// e such that q = p^e is the order of a subfield (e divides k).
  [[nodiscard]] unsigned subfield_degree(std::uint64_t q) const {
    const auto e = detail::exact_log(q, p_);
    if (!e) throw invalid_parameter(std::to_string(q) + " is not a power of " + std::to_string(p_));
    if (k_ % *e != 0) {
      throw invalid_parameter("GF(" + std::to_string(q) + ") is not a subfield of GF(" + std::to_string(order_) + ")");
    }
    return *e;
  }

  /// a^q == a, i.e. a lies in GF(q).
  [[nodiscard]] bool in_subfield(Element a, std::uint64_t q) const {
    (void)subfield_degree(q);
    return pow_value(checked(a), q) == a.value_;
  }

  /// Digit for prime-subfield members, otherwise "a^i" with i the discrete log.
  [[nodiscard]] std::string to_string(Element a) const {
    check(a);
    if (a.value_ < p_) return std::to_string(a.value_);
    return "a^" + std::to_string(log(a));
  }

  // Value-level arithmetic for hot loops.  Operands must be packed values of this field.

  [[nodiscard]] std::uint32_t add_values(std::uint32_t a, std::uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return detail::addmod(a, b, p_);
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    while (a != 0 || b != 0) {
      std::uint32_t d = a % p_ + b % p_;
      if (d >= p_) d -= p_;
      r += d * place;
      place *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  [[nodiscard]] std::uint32_t neg_value(std::uint32_t a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    while (a != 0) {
      const std::uint32_t d = a % p_;
      r += (d == 0 ? 0 : p_ - d) * place;
      place *= p_;
      a /= p_;
    }
    return r;
  }

  [[nodiscard]] std::uint32_t sub_values(std::uint32_t a, std::uint32_t b) const noexcept {
    return add_values(a, neg_value(b));
  }

  [[nodiscard]] std::uint32_t mul_values(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_log_tables()) return exp_[log_[a] + log_[b]];
    return pack(detail::poly_mod(detail::poly_mul(unpack(a), unpack(b), p_), modulus_, p_));
  }

 private:
  Field(std::uint32_t p, unsigned k, std::uint64_t order, Digits modulus, AlphaChoice choice)
      : p_(p), k_(k), order_(order), modulus_(std::move(modulus)), id_(next_id()) {
    const auto factors = detail::prime_factors(order_ - 1);
    const Digits x = detail::poly_mod(Digits{0, 1}, modulus_, p_);
    if (detail::has_full_order(x, modulus_, p_, order_ - 1, factors)) {
      alpha_ = pack(x);
      alpha_is_x_ = true;
    } else if (choice == AlphaChoice::indeterminate) {
      throw invalid_parameter("the root of the modulus is not a primitive element");
    } else {
      for (std::uint64_t v = 2; v < order_; ++v) {
        if (detail::has_full_order(unpack(static_cast<std::uint32_t>(v)), modulus_, p_, order_ - 1, factors)) {
          alpha_ = static_cast<std::uint32_t>(v);
          break;
        }
      }
    }
    if (order_ <= kLogTableLimit) build_tables();
  }

  static std::uint32_t next_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
  }

  void check(Element a) const {
    if (a.field_ != id_) throw invalid_parameter("element belongs to a different field");
  }

  std::uint32_t checked(Element a) const {
    check(a);
    return a.value_;
  }

  [[nodiscard]] Digits unpack(std::uint32_t v) const {
    Digits d(k_, 0);
    for (unsigned i = 0; i < k_ && v != 0; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  }

  [[nodiscard]] std::uint32_t pack(const Digits& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return static_cast<std::uint32_t>(v);
  }

  [[nodiscard]] std::uint32_t pow_value(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_log_tables()) {
      const std::uint64_t n = group_order();
      return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * e) % n)];
    }
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1U) r = mul_values(r, a);
      a = mul_values(a, a);
      e >>= 1U;
    }
    return r;
  }

  /// Multiplication by x: shift digits up and reduce the overflow with the monic modulus.
  [[nodiscard]] std::uint32_t times_x(std::uint32_t v) const {
    Digits d = unpack(v);
    const std::uint32_t top = d[k_ - 1];
    for (unsigned i = k_ - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    if (top != 0) {
      for (unsigned i = 0; i < k_; ++i) d[i] = detail::submod(d[i], detail::mulmod(top, modulus_[i], p_), p_);
    }
    return pack(d);
  }

  void build_tables() {
    const std::uint64_t n = group_order();
    std::vector<std::uint32_t> exp(2 * n);
    std::vector<std::uint32_t> log(order_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp[i] = cur;
      log[cur] = static_cast<std::uint32_t>(i);
      cur = alpha_is_x_ ? times_x(cur) : mul_values(cur, alpha_);
    }
    for (std::uint64_t i = n; i < 2 * n; ++i) exp[i] = exp[i - n];
    exp_ = std::move(exp);
    log_ = std::move(log);
  }

  [[nodiscard]] std::uint64_t baby_step_giant_step(std::uint32_t a) const {
    const std::uint64_t n = group_order();
    std::uint64_t s = 1;
    while (s * s < n) ++s;
    std::unordered_map<std::uint32_t, std::uint64_t> baby;
    std::uint32_t cur = 1;
    for (std::uint64_t j = 0; j < s; ++j) {
      baby.emplace(cur, j);
      cur = mul_values(cur, alpha_);
    }
    const std::uint32_t giant = pow_value(pow_value(alpha_, n - 1), s);  // alpha^(-s)
    std::uint32_t y = a;
    for (std::uint64_t i = 0; i <= s; ++i) {
      if (auto it = baby.find(y); it != baby.end()) return (i * s + it->second) % n;
      y = mul_values(y, giant);
    }
    throw invalid_parameter("element has no discrete logarithm");  // unreachable in a field
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t order_;
  Digits modulus_;
  std::uint32_t id_;
  std::uint32_t alpha_ = 1;
  bool alpha_is_x_ = false;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

// Caret notation for digit polynomials ("x^5+x^2+1", "1 + x^2 + x^5", "x^3-x+1").

/// Parses caret notation into ascending digits mod p.  Powers may appear in any order.
inline Digits parse_digit_polynomial(std::string_view text, std::uint32_t p) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s.push_back(c);
  }
  if (s.empty()) throw invalid_parameter("empty polynomial");
  std::map<std::uint64_t, std::int64_t> terms;
  std::size_t pos = 0;
  auto read_number = [&](std::uint64_t& out) {
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (std::uint64_t{1} << 40)) throw invalid_parameter("number too large in polynomial");
      ++pos;
    }
    if (pos == start) return false;
    out = v;
    return true;
  };
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw invalid_parameter("expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    std::uint64_t coef = 1;
    const bool has_coef = read_number(coef);
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coef) throw invalid_parameter("dangling '*' in polynomial");
      ++pos;
    }
    std::uint64_t power = 0;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (!read_number(power)) throw invalid_parameter("missing exponent after '^'");
      }
    } else if (!has_coef) {
      throw invalid_parameter("malformed term in polynomial '" + std::string(text) + "'");
    }
    if (power > 4096) throw invalid_parameter("exponent too large");
    terms[power] += sign * static_cast<std::int64_t>(coef % p);
  }
  Digits out;
  const auto pp = static_cast<std::int64_t>(p);
  for (const auto& [power, c] : terms) {
    if (out.size() <= power) out.resize(power + 1, 0);
    out[power] = static_cast<std::uint32_t>(((c % pp) + pp) % pp);
  }
  detail::trim(out);
  return out;
}

namespace detail {

/// Canonical term rendering shared by digit and field-element polynomials.
inline std::string join_terms(const std::vector<std::pair<std::size_t, std::string>>& descending) {
  if (descending.empty()) return "0";
  std::string out;
  for (const auto& [power, coef] : descending) {
    if (!out.empty()) out += " + ";
    if (power == 0) {
      out += coef;
      continue;
    }
    if (coef != "1") out += coef;
    out += power == 1 ? "x" : "x^" + std::to_string(power);
  }
  return out;
}

}  // namespace detail

/// Descending powers, coefficient 1 omitted except on the constant term.
inline std::string format_digit_polynomial(const Digits& ascending) {
  std::vector<std::pair<std::size_t, std::string>> terms;
  for (std::size_t i = ascending.size(); i-- > 0;) {
    if (ascending[i] != 0) terms.emplace_back(i, std::to_string(ascending[i]));
  }
  return detail::join_terms(terms);
}

}  // namespace rbch
