#pragma once

// Dense univariate polynomials over a Field, and minimal polynomials of alpha^i
// over a subfield GF(q).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbch/cosets.hpp"
#include "rbch/errors.hpp"
#include "rbch/field.hpp"

namespace rbch {

/// Polynomial with ascending coefficients, kept trimmed (no trailing zeros).
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw invalid_parameter("polynomial needs a field");
  }

  Polynomial(FieldPtr field, std::vector<Element> ascending) : field_(std::move(field)), c_(std::move(ascending)) {
    if (!field_) throw invalid_parameter("polynomial needs a field");
    for (const auto& e : c_) {
      if (e.field_id() != field_->id()) throw invalid_parameter("coefficient belongs to a different field");
    }
    trim();
  }

  /// Embeds prime-field digits (reduced mod p).
  static Polynomial from_digits(const FieldPtr& field, std::span<const std::uint32_t> ascending) {
    std::vector<Element> c;
    c.reserve(ascending.size());
    for (const auto d : ascending) c.push_back(field->from_integer(d));
    return {field, std::move(c)};
  }

  static Polynomial constant(const FieldPtr& field, Element c) { return {field, {c}}; }

  static Polynomial monomial(const FieldPtr& field, Element c, std::size_t power) {
    std::vector<Element> v(power + 1, field->zero());
    v[power] = c;
    return {field, std::move(v)};
  }

  /// x - root
  static Polynomial linear(const FieldPtr& field, Element root) {
    return {field, {field->neg(root), field->one()}};
  }

  /// x^n - 1
  static Polynomial x_n_minus_one(const FieldPtr& field, std::size_t n) {
    std::vector<Element> v(n + 1, field->zero());
    v[0] = field->neg(field->one());
    v[n] = field->one();
    return {field, std::move(v)};
  }

  [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] std::span<const Element> coeffs() const noexcept { return c_; }

  [[nodiscard]] Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

  [[nodiscard]] Element leading() const {
    if (c_.empty()) throw invalid_parameter("zero polynomial has no leading coefficient");
    return c_.back();
  }

  [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

  /// Number of nonzero coefficients.
  [[nodiscard]] std::size_t weight() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Element e) { return !e.is_zero(); }));
  }

  [[nodiscard]] Element evaluate(Element x) const {
    const Field& f = *field_;
    Element acc = f.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
    return acc;
  }

  [[nodiscard]] Polynomial scaled(Element s) const {
    std::vector<Element> v(c_);
    for (auto& e : v) e = field_->mul(e, s);
    return {field_, std::move(v)};
  }

  /// Multiplication by x^s.
  [[nodiscard]] Polynomial shifted(std::size_t s) const {
    if (c_.empty()) return *this;
    std::vector<Element> v(s, field_->zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return {field_, std::move(v)};
  }

  [[nodiscard]] Polynomial monic() const {
    if (c_.empty()) return *this;
    return scaled(field_->inv(c_.back()));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_->id() == b.field_->id() && a.c_ == b.c_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    same_field(a, b);
    const Field& f = *a.field_;
    std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
    return {a.field_, std::move(v)};
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Element> v(a.c_);
    for (auto& e : v) e = a.field_->neg(e);
    return {a.field_, std::move(v)};
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const Field& f = *a.field_;
    std::vector<std::uint32_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const std::uint32_t ai = a.c_[i].value();
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        v[i + j] = f.add_values(v[i + j], f.mul_values(ai, b.c_[j].value()));
      }
    }
    return from_values(a.field_, v);
  }

  static void same_field(const Polynomial& a, const Polynomial& b) {
    if (a.field_->id() != b.field_->id()) throw invalid_parameter("polynomials over different fields");
  }

  /// Builds from packed values already known to belong to `field`.
  static Polynomial from_values(const FieldPtr& field, std::span<const std::uint32_t> values) {
    std::vector<Element> c;
    c.reserve(values.size());
    for (const auto v : values) c.push_back(field->element(v));
    return {field, std::move(c)};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FieldPtr field_;
  std::vector<Element> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b.
inline DivMod divmod(const Polynomial& a, const Polynomial& b) {
  Polynomial::same_field(a, b);
  if (b.is_zero()) throw invalid_parameter("division by the zero polynomial");
  const FieldPtr& fp = a.field();
  const Field& f = *fp;
  if (a.degree() < b.degree()) return {Polynomial(fp), a};
  std::vector<std::uint32_t> r;
  r.reserve(a.coeffs().size());
  for (const auto e : a.coeffs()) r.push_back(e.value());
  std::vector<std::uint32_t> bv;
  for (const auto e : b.coeffs()) bv.push_back(e.value());
  const std::size_t db = bv.size() - 1;
  const std::uint32_t inv_lead = f.inv(b.leading()).value();
  std::vector<std::uint32_t> quot(r.size() - db, 0);
  for (std::size_t top = r.size(); top-- > db;) {
    const std::uint32_t c = f.mul_values(r[top], inv_lead);
    if (c == 0) continue;
    const std::size_t shift = top - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] = f.sub_values(r[shift + i], f.mul_values(c, bv[i]));
  }
  r.resize(db);
  return {Polynomial::from_values(fp, quot), Polynomial::from_values(fp, r)};
}

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

/// Monic gcd; throws when both inputs are zero.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  Polynomial::same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw invalid_parameter("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic lcm = a*b/gcd(a, b).
inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  const Polynomial g = gcd(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return divmod(a * b, g).quotient.monic();
}

/// x^l f(1/x) with l = deg f: coefficients reversed, then trimmed.
inline Polynomial reciprocal(const Polynomial& f) {
  if (f.is_zero()) throw invalid_parameter("reciprocal of the zero polynomial");
  std::vector<Element> v(f.coeffs().begin(), f.coeffs().end());
  std::reverse(v.begin(), v.end());
  return {f.field(), std::move(v)};
}

/// f_R = c f for some nonzero c; for the generators here c is 1 or -1.
inline bool is_self_reciprocal(const Polynomial& f) { return !f.is_zero() && reciprocal(f).monic() == f.monic(); }

/// Reduction modulo x^n - 1 (exponents folded mod n).
inline Polynomial reduce_cyclic(const Polynomial& f, std::size_t n) {
  if (f.degree() < static_cast<long>(n)) return f;
  const Field& fld = *f.field();
  std::vector<std::uint32_t> v(n, 0);
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) v[i % n] = fld.add_values(v[i % n], c[i].value());
  return Polynomial::from_values(f.field(), v);
}

/// Word (c_{n-1}, ..., c_0) for a length-n word c, as a polynomial.
inline Polynomial reverse_word(const Polynomial& c, std::size_t n) {
  if (c.degree() >= static_cast<long>(n)) throw invalid_parameter("word longer than n");
  std::vector<Element> v(n, c.field()->zero());
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) v[n - 1 - i] = c.coeffs()[i];
  return {c.field(), std::move(v)};
}

/// True iff every coefficient lies in GF(q).
inline bool coefficients_in_subfield(const Polynomial& f, std::uint64_t q) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](Element e) { return f.field()->in_subfield(e, q); });
}

/// Prime-field digits of f, or nullopt when some coefficient is outside GF(p).
inline std::optional<Digits> to_digits(const Polynomial& f) {
  Digits d;
  for (const auto e : f.coeffs()) {
    if (e.value() >= f.field()->characteristic()) return std::nullopt;
    d.push_back(e.value());
  }
  return d;
}

/// Canonical text: descending powers, explicit coefficients other than 1, e.g. "x^3 + 2x + 2".
/// Coefficients outside the prime field print as (a^i).
inline std::string to_string(const Polynomial& f) {
  std::vector<std::pair<std::size_t, std::string>> terms;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    std::string coef = f.field()->to_string(c[i]);
    if (c[i].value() >= f.field()->characteristic()) coef = "(" + coef + ")";
    terms.emplace_back(i, std::move(coef));
  }
  return detail::join_terms(terms);
}

/// m = [GF(q^m) : GF(q)] for the code alphabet GF(q) inside `field`.
inline unsigned extension_over(const Field& field, std::uint64_t q) {
  return field.degree() / field.subfield_degree(q);
}

/// Minimal polynomial of alpha^i over GF(q): the product of (x - alpha^j) over j in C_i.
inline Polynomial minimal_polynomial(const FieldPtr& field, std::uint64_t q, std::uint64_t i) {
  const unsigned m = extension_over(*field, q);
  const std::uint64_t n = field->group_order();
  if (i >= n) throw invalid_parameter("exponent " + std::to_string(i) + " outside [0, n-1]");
  const CyclotomicCoset coset = cyclotomic_coset(i, q, m);
  Polynomial acc = Polynomial::constant(field, field->one());
  for (const auto j : coset.members) acc = acc * Polynomial::linear(field, field->exp(static_cast<std::int64_t>(j)));
  return acc;
}

}  // namespace rbch
