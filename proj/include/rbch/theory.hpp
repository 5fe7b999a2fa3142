#pragma once

// Closed-form dimensions and degrees of the reversible BCH codes, the run-count
// dimension bounds for delta = q^lambda, and the sphere-packing trigger.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rbch/bch.hpp"
#include "rbch/cosets.hpp"
#include "rbch/errors.hpp"

namespace rbch {

using BigInt = boost::multiprecision::cpp_int;

struct DimensionReport {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::uint64_t delta_q = 0;  ///< delta - 1 = delta_q * q + delta_0
  std::uint64_t delta_0 = 0;
  unsigned epsilon = 0;
  std::string case_label;  ///< empty when no branch applies
  std::optional<std::uint64_t> k_closed;
  std::optional<std::uint64_t> k_constructed;

  [[nodiscard]] bool consistent() const { return !k_closed || !k_constructed || *k_closed == *k_constructed; }
};

namespace detail {

struct DeltaDigits {
  std::uint64_t dq;
  std::uint64_t d0;
  std::uint64_t base;  ///< dq (q - 1) + d0: leaders in [1, delta - 1]
};

inline DeltaDigits delta_digits(std::uint64_t q, std::uint64_t delta) {
  const std::uint64_t dq = (delta - 1) / q;
  const std::uint64_t d0 = (delta - 1) % q;
  return {dq, d0, dq * (q - 1) + d0};
}

inline void check_reversible_range(std::uint64_t q, unsigned m, std::uint64_t delta) {
  if (m < 1) throw invalid_parameter("m must be positive");
  const std::uint64_t n = modulus_n(q, m);
  if (delta < 2) throw invalid_parameter("delta must be at least 2");
  if (2 * delta >= n + 2) {
    throw formula_not_applicable("delta = " + std::to_string(delta) + " violates delta < (n+2)/2 with n = " +
                                 std::to_string(n));
  }
}

}  // namespace detail

/// epsilon = 1 exactly when m is even and delta >= q^(m/2) + 2 (the self-negative coset of size m/2 is included).
inline unsigned dimension_epsilon(std::uint64_t q, unsigned m, std::uint64_t delta) {
  if (m % 2 == 1) return 0;
  return delta <= detail::checked_pow(q, m / 2) + 1 ? 0 : 1;
}

/// Closed-form k of the even-like reversible code; throws formula_not_applicable outside every branch.
inline DimensionReport dimension_closed_form(std::uint64_t q, unsigned m, std::uint64_t delta) {
  if (detail::prime_factors(q).size() != 1) throw invalid_parameter("q must be a prime power");
  if (m < 2) throw formula_not_applicable("closed form needs m >= 2");
  detail::check_reversible_range(q, m, delta);
  DimensionReport rep;
  rep.q = q;
  rep.m = m;
  rep.n = detail::modulus_n(q, m);
  rep.delta = delta;
  const auto dd = detail::delta_digits(q, delta);
  rep.delta_q = dd.dq;
  rep.delta_0 = dd.d0;
  rep.epsilon = dimension_epsilon(q, m, delta);

  const auto qm = static_cast<std::int64_t>(rep.n + 1);
  const auto mm = static_cast<std::int64_t>(m);
  // k = q^m - 2 - m (2 base - twice_offset); offsets are multiples of 1/2.
  auto with_offset = [&](std::int64_t twice_offset) {
    return qm - 2 - mm * (2 * static_cast<std::int64_t>(dd.base) - twice_offset);
  };
  std::optional<std::int64_t> k;
  if (m % 2 == 1) {
    const std::uint64_t a = detail::checked_pow(q, (m + 1) / 2);
    if (delta + q <= a) {
      k = with_offset(0);
      rep.case_label = "m odd, delta <= q^((m+1)/2) - q";
    } else if (delta <= a + 1) {
      const auto b = static_cast<std::int64_t>(detail::checked_pow(q, (m - 1) / 2));
      k = qm - 2 - 2 * mm * (b - 1) * static_cast<std::int64_t>(q - 1);
      rep.case_label = "m odd, q^((m+1)/2) - q + 1 <= delta <= q^((m+1)/2) + 1";
    }
  } else if (q > 2) {
    const std::uint64_t h = detail::checked_pow(q, m / 2);
    if (delta + 1 <= h) {
      k = with_offset(0);
      rep.case_label = "m even, q > 2, delta <= q^(m/2) - 1";
    } else if (delta <= h + 1) {
      k = with_offset(1);
      rep.case_label = "m even, q > 2, q^(m/2) <= delta <= q^(m/2) + 1";
    } else if (delta + 2 <= 2 * h) {
      k = with_offset(2);
      rep.case_label = "m even, q > 2, q^(m/2) + 2 <= delta <= 2q^(m/2) - 2";
    } else if (delta + 1 == 2 * h) {
      k = with_offset(3);
      rep.case_label = "m even, q > 2, delta = 2q^(m/2) - 1";
    } else if (delta <= 2 * h + 1) {
      k = with_offset(5);
      rep.case_label = "m even, q > 2, 2q^(m/2) <= delta <= 2q^(m/2) + 1";
    }
  } else {
    const std::uint64_t h = detail::checked_pow(2, m / 2);
    const std::uint64_t top = 2 * h;
    if (m >= 4 && delta + 1 <= h) {
      k = with_offset(0);
      rep.case_label = "q = 2, m even >= 4, delta <= 2^(m/2) - 1";
    } else if (m >= 4 && delta >= h && delta <= h + 1) {
      k = with_offset(1);
      rep.case_label = "q = 2, m even >= 4, 2^(m/2) <= delta <= 2^(m/2) + 1";
    } else if (m >= 4 && delta >= h + 2 && delta + 3 <= top) {
      k = with_offset(2);
      rep.case_label = "q = 2, m even >= 4, 2^(m/2) + 2 <= delta <= 2^(m/2+1) - 3";
    } else if (m >= 6 && delta + 2 >= top && delta + 1 <= top) {
      k = with_offset(4);
      rep.case_label = "q = 2, m even >= 6, 2^(m/2+1) - 2 <= delta <= 2^(m/2+1) - 1";
    } else if (m >= 6 && delta >= top && delta <= top + 1) {
      k = with_offset(6);
      rep.case_label = "q = 2, m even >= 6, 2^(m/2+1) <= delta <= 2^(m/2+1) + 1";
    }
  }
  if (!k) {
    throw formula_not_applicable("no closed-form branch covers (q, m, delta) = (" + std::to_string(q) + ", " +
                                 std::to_string(m) + ", " + std::to_string(delta) + ")");
  }
  if (*k < 0) throw formula_not_applicable("closed form yields a negative dimension");
  rep.k_closed = static_cast<std::uint64_t>(*k);
  return rep;
}

/// Set of exponents j in [0, n-1] with alpha^j a zero of the generator, counted from coset leaders only.
/// A nonzero j is a zero of g+ iff cl(j) < delta, and of g- iff cl(n - j) < delta.
inline std::uint64_t overline_degree_enumerated(std::uint64_t q, unsigned m, std::uint64_t delta) {
  const std::uint64_t n = detail::modulus_n(q, m);
  std::uint64_t count = 1;
  for (std::uint64_t j = 1; j < n; ++j) {
    if (coset_leader(j, q, m) < delta || coset_leader(n - j, q, m) < delta) ++count;
  }
  return count;
}

/// deg of the even-like generator from the leader-pair count: 1 + 2m base - eps m - pairs m.
/// Valid on the closed-form ranges.
inline std::uint64_t overline_degree_from_counts(std::uint64_t q, unsigned m, std::uint64_t delta) {
  const auto dd = detail::delta_digits(q, delta);
  const std::uint64_t pairs = leader_pair_count_enumerated(delta - 1, q, m);
  const std::uint64_t eps = dimension_epsilon(q, m, delta);
  return 1 + 2 * m * dd.base - eps * m - pairs * m;
}

/// Closed form when a branch applies, plus the constructed dimension when requested.
inline DimensionReport dimension_report(std::uint64_t q, unsigned m, std::uint64_t delta, bool construct = true,
                                        const FieldPtr& field = nullptr) {
  DimensionReport rep;
  try {
    rep = dimension_closed_form(q, m, delta);
  } catch (const formula_not_applicable&) {
    validate_delta(q, m, delta, Variant::overline);
    rep.q = q;
    rep.m = m;
    rep.n = detail::modulus_n(q, m);
    rep.delta = delta;
    const auto dd = detail::delta_digits(q, delta);
    rep.delta_q = dd.dq;
    rep.delta_0 = dd.d0;
    rep.epsilon = dimension_epsilon(q, m, delta);
  }
  if (construct) {
    const BchCode code = build_code(q, m, delta, Variant::overline, field ? field : code_field(q, m));
    rep.k_constructed = code.dimension;
  }
  return rep;
}

namespace detail {

inline void check_lambda(unsigned m, unsigned lambda) {
  if (m < 2 || 2 * lambda < m || lambda + 1 > m) {
    throw invalid_parameter("lambda = " + std::to_string(lambda) + " outside m/2 <= lambda <= m-1 (m = " +
                            std::to_string(m) + ")");
  }
}

/// sum_{u=0}^{r-2} (r-u-1) (q^(m-r-u-2) - l_r(m-r-u-2))
inline std::int64_t run_sum(std::uint64_t q, unsigned m, unsigned r) {
  std::int64_t s = 0;
  for (unsigned u = 0; u + 2 <= r; ++u) {
    const unsigned t = m - r - u - 2;
    s += static_cast<std::int64_t>(r - u - 1) *
         (static_cast<std::int64_t>(checked_pow(q, t)) - static_cast<std::int64_t>(run_count_l(r, t, q)));
  }
  return s;
}

}  // namespace detail

/// deg g+ = deg g- for delta = q^lambda with r = m - lambda.
inline std::uint64_t degree_formula(std::uint64_t q, unsigned m, unsigned lambda) {
  detail::check_lambda(m, lambda);
  const unsigned r = m - lambda;
  const auto sq = static_cast<std::int64_t>((q - 1) * (q - 1));
  const std::int64_t d = static_cast<std::int64_t>(run_count_l(r, m, q)) - 1 + sq * detail::run_sum(q, m, r);
  return static_cast<std::uint64_t>(d);
}

struct DimensionBoundsReport {
  std::uint64_t q = 0;
  unsigned m = 0;
  unsigned lambda = 0;
  unsigned r = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::uint64_t n_prime_size = 0;         ///< l_r(m - r)
  std::optional<std::uint64_t> n_size;    ///< |N| when enumerated
  std::optional<std::uint64_t> k_constructed;

  [[nodiscard]] bool n_bounds_hold() const {
    return !n_size || (2 * n_prime_size <= *n_size && *n_size <= m * n_prime_size);
  }
  [[nodiscard]] bool brackets_k() const {
    return !k_constructed ||
           (lower <= static_cast<std::int64_t>(*k_constructed) && static_cast<std::int64_t>(*k_constructed) <= upper);
  }
};

inline constexpr std::uint64_t kBoundsEnumerationLimit = std::uint64_t{1} << 20;

/// Bounds on k for delta = q^lambda; N = {i : g+(alpha^i) = g-(alpha^i) = 0} is enumerated when n is small.
inline DimensionBoundsReport dimension_bounds(std::uint64_t q, unsigned m, unsigned lambda,
                                              std::uint64_t enumeration_limit = kBoundsEnumerationLimit) {
  detail::check_lambda(m, lambda);
  DimensionBoundsReport rep;
  rep.q = q;
  rep.m = m;
  rep.lambda = lambda;
  rep.r = m - lambda;
  const unsigned r = rep.r;
  const auto qm = static_cast<std::int64_t>(detail::checked_pow(q, m));
  const auto lm = static_cast<std::int64_t>(run_count_l(r, m, q));
  const auto lmr = static_cast<std::int64_t>(run_count_l(r, m - r, q));
  const std::int64_t tail = 2 * static_cast<std::int64_t>((q - 1) * (q - 1)) * detail::run_sum(q, m, r);
  rep.lower = qm - 2 * lm + 2 * lmr - tail;
  rep.upper = qm - 2 * lm + static_cast<std::int64_t>(m) * lmr - tail;
  rep.n_prime_size = static_cast<std::uint64_t>(lmr);

  const std::uint64_t n = detail::modulus_n(q, m);
  if (n <= enumeration_limit) {
    const std::uint64_t delta = detail::checked_pow(q, lambda);
    std::vector<std::uint64_t> leader(n);
    for (std::uint64_t j = 1; j < n; ++j) leader[j] = coset_leader(j, q, m);
    std::uint64_t both = 0;
    std::uint64_t either = 1;  // exponent 0
    for (std::uint64_t j = 1; j < n; ++j) {
      const bool plus = leader[j] < delta;
      const bool minus = leader[n - j] < delta;
      both += plus && minus;
      either += plus || minus;
    }
    rep.n_size = both;
    rep.k_constructed = n - either;
  }
  return rep;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;  // exact: c = C(n-k+i, i)
  }
  return c;
}

/// Hamming-ball volume sum_{i <= radius} C(n, i) (q-1)^i.
inline BigInt ball_volume(std::uint64_t q, std::uint64_t n, std::uint64_t radius) {
  BigInt total = 0;
  BigInt c = 1;
  BigInt w = 1;
  for (std::uint64_t i = 0; i <= radius && i <= n; ++i) {
    if (i > 0) {
      c *= n - i + 1;
      c /= i;
      w *= q - 1;
    }
    total += c * w;
  }
  return total;
}

struct SpherePackingCheck {
  BigInt volume;  ///< sum_{i <= delta} C(n, i) (q-1)^i
  BigInt space;   ///< q^(n-k)
  bool holds = false;
};

inline SpherePackingCheck sphere_packing_check(std::uint64_t q, unsigned m, std::uint64_t delta, std::uint64_t k) {
  const std::uint64_t n = detail::modulus_n(q, m);
  if (k > n) throw invalid_parameter("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  SpherePackingCheck out;
  out.volume = ball_volume(q, n, delta);
  out.space = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k));
  out.holds = out.volume > out.space;
  return out;
}

/// True iff a code with distance >= 2 delta + 1 would violate the sphere-packing bound, so d <= 2 delta.
inline bool sphere_packing_trigger(std::uint64_t q, unsigned m, std::uint64_t delta, std::uint64_t k) {
  return sphere_packing_check(q, m, delta, k).holds;
}

inline std::uint64_t bch_lower_bound(std::uint64_t delta) { return 2 * delta; }

}  // namespace rbch
