#pragma once

// Integer-side combinatorics for q-cyclotomic cosets modulo n = q^m - 1:
// q-ary expansions, runs, coset leaders, negation pairs and their pattern
// families, leader-pair counts, and the run-count recursion l_r(s).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rbch/errors.hpp"
#include "rbch/field.hpp"

namespace rbch {

/// Default number of sequences an exhaustive run-count oracle may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

namespace detail {

inline std::uint64_t modulus_n(std::uint64_t q, unsigned m) {
  if (q < 2) throw invalid_parameter("q must be at least 2");
  if (m == 0) throw invalid_parameter("m must be positive");
  return checked_pow(q, m) - 1;
}

}  // namespace detail

/// q-ary expansion (s_{m-1}, ..., s_0) of an integer 0 <= s <= q^m - 1.
struct ExpansionSequence {
  std::uint64_t q = 2;
  unsigned m = 0;
  std::vector<std::uint32_t> digits;  ///< digits[i] = s_i, least significant first

  [[nodiscard]] std::uint64_t value() const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * q + digits[i];
    return v;
  }

  /// Number of nonzero digits.
  [[nodiscard]] unsigned weight() const {
    return static_cast<unsigned>(std::count_if(digits.begin(), digits.end(), [](auto d) { return d != 0; }));
  }

  /// Sum of the digits.
  [[nodiscard]] std::uint64_t q_weight() const {
    std::uint64_t w = 0;
    for (const auto d : digits) w += d;
    return w;
  }

  [[nodiscard]] std::vector<unsigned> support() const {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < digits.size(); ++i) {
      if (digits[i] != 0) out.push_back(i);
    }
    return out;
  }

  /// Most significant digit first, e.g. "(0,1,0,1)".
  [[nodiscard]] std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = digits.size(); i-- > 0;) {
      out += std::to_string(digits[i]);
      if (i != 0) out += ",";
    }
    return out + ")";
  }

  friend bool operator==(const ExpansionSequence&, const ExpansionSequence&) = default;
};

inline ExpansionSequence expand(std::uint64_t s, std::uint64_t q, unsigned m) {
  const std::uint64_t n = detail::modulus_n(q, m);
  if (s > n) throw invalid_parameter("value " + std::to_string(s) + " exceeds q^m - 1");
  ExpansionSequence seq{q, m, std::vector<std::uint32_t>(m, 0)};
  for (unsigned i = 0; i < m; ++i) {
    seq.digits[i] = static_cast<std::uint32_t>(s % q);
    s /= q;
  }
  return seq;
}

/// Orbit of i under multiplication by q modulo n = q^m - 1.
struct CyclotomicCoset {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> members;  ///< sorted ascending

  [[nodiscard]] std::uint64_t leader() const { return members.front(); }
  [[nodiscard]] std::size_t size() const { return members.size(); }
  [[nodiscard]] bool contains(std::uint64_t x) const { return std::binary_search(members.begin(), members.end(), x % n); }
};

inline CyclotomicCoset cyclotomic_coset(std::uint64_t i, std::uint64_t q, unsigned m) {
  const std::uint64_t n = detail::modulus_n(q, m);
  if (i >= n) throw invalid_parameter("coset representative must lie in [0, n-1]");
  CyclotomicCoset c{n, {}};
  std::uint64_t x = i;
  do {
    c.members.push_back(x);
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % n);
  } while (x != i);
  std::sort(c.members.begin(), c.members.end());
  return c;
}

/// cl(i): smallest member of C_i.  Accepts any i (reduced mod n).
inline std::uint64_t coset_leader(std::uint64_t i, std::uint64_t q, unsigned m) {
  const std::uint64_t n = detail::modulus_n(q, m);
  const std::uint64_t start = i % n;
  std::uint64_t best = start;
  std::uint64_t x = start;
  for (unsigned t = 0; t < m; ++t) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % n);
    best = std::min(best, x);
  }
  return best;
}

namespace detail {

// -j in C_i, with i and j reduced mod n.  Used by the sweeps whose ranges can exceed n - 1.
inline bool negation_in_coset_mod(std::uint64_t i, std::uint64_t j, std::uint64_t q, unsigned m) {
  const std::uint64_t n = modulus_n(q, m);
  const std::uint64_t target = (n - j % n) % n;
  std::uint64_t x = i % n;
  for (unsigned t = 0; t < m; ++t) {
    if (x == target) return true;
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % n);
  }
  return false;
}

}  // namespace detail

/// True iff -j mod n lies in C_i, i.e. q^l i + j = 0 (mod n) for some l.
inline bool negation_in_coset(std::uint64_t i, std::uint64_t j, std::uint64_t q, unsigned m) {
  const std::uint64_t n = detail::modulus_n(q, m);
  if (i == 0 || j == 0 || i >= n || j >= n) throw invalid_parameter("negation test needs 1 <= i, j <= n-1");
  return detail::negation_in_coset_mod(i, j, q, m);
}

// ---------------------------------------------------------------------------
// Leader-pair counts |{(cl(i), cl(j)) : -j in C_i, 1 <= i, j <= l}|

/// Counts distinct ordered leader pairs by direct enumeration.
inline std::uint64_t leader_pair_count_enumerated(std::uint64_t l, std::uint64_t q, unsigned m) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t i = 1; i <= l; ++i) {
    for (std::uint64_t j = 1; j <= l; ++j) {
      if (detail::negation_in_coset_mod(i, j, q, m)) pairs.emplace(coset_leader(i, q, m), coset_leader(j, q, m));
    }
  }
  return pairs.size();
}

/// Enumerated counts for every l in [1, lmax] in one incremental pass; entry l-1 holds the count for l.
inline std::vector<std::uint64_t> leader_pair_counts_enumerated(std::uint64_t lmax, std::uint64_t q, unsigned m) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::uint64_t> leaders(lmax + 1, 0);
  std::vector<std::uint64_t> out;
  out.reserve(lmax);
  for (std::uint64_t l = 1; l <= lmax; ++l) {
    leaders[l] = coset_leader(l, q, m);
    for (std::uint64_t j = 1; j <= l; ++j) {
      if (detail::negation_in_coset_mod(l, j, q, m)) pairs.emplace(leaders[l], leaders[j]);
      if (detail::negation_in_coset_mod(j, l, q, m)) pairs.emplace(leaders[j], leaders[l]);
    }
    out.push_back(pairs.size());
  }
  return out;
}

/// Closed piecewise count; nullopt outside the ranges it is stated for.
///
/// For q = 2 and even m the first two ranges need m >= 4 and the last two m >= 6
/// (at m = 4, l = 5..8 the closed values 3 and 5 overcount the true 2 and 4).
inline std::optional<std::uint64_t> leader_pair_count_closed(std::uint64_t l, std::uint64_t q, unsigned m) {
  if (m < 2 || l < 1) return std::nullopt;
  if (m % 2 == 1) {
    const std::uint64_t a = detail::checked_pow(q, (m + 1) / 2);
    if (l <= a - q) return 0;
    if (l + 2 <= a) return 2 * (l - (a - q));
    if (l <= a) return 2 * (q - 1);
    return std::nullopt;
  }
  const std::uint64_t h = detail::checked_pow(q, m / 2);
  if (q > 2) {
    if (l + 2 <= h) return 0;
    if (l + 3 <= 2 * h) return 1;
    if (l + 2 == 2 * h) return 2;
    if (l <= 2 * h) return 4;
    return std::nullopt;
  }
  const std::uint64_t top = 2 * h;  // 2^{m/2 + 1}
  if (m >= 4 && l + 2 <= h) return 0;
  if (m >= 4 && l + 4 <= top) return 1;
  if (m >= 6 && l + 2 <= top) return 3;
  if (m >= 6 && l <= top) return 5;
  return std::nullopt;
}

struct LeaderPairCount {
  std::uint64_t l = 0;
  std::uint64_t enumerated = 0;
  std::optional<std::uint64_t> closed;

  [[nodiscard]] bool match() const { return !closed || *closed == enumerated; }
};

inline LeaderPairCount leader_pair_count(std::uint64_t l, std::uint64_t q, unsigned m) {
  return {l, leader_pair_count_enumerated(l, q, m), leader_pair_count_closed(l, q, m)};
}

/// Upper end of the index range covered by the leader-pair closed form and the pattern catalogue.
inline std::uint64_t negation_pair_range(std::uint64_t q, unsigned m) {
  if (m % 2 == 1) return detail::checked_pow(q, (m + 1) / 2);
  return 2 * detail::checked_pow(q, m / 2);
}

// ---------------------------------------------------------------------------
// Pattern families of negation pairs (i, j)

enum class PatternFamily {
  odd_prefix_u,      ///< m odd:  i = (q-1 at (m-1)/2..1, u at 0),  j = (q-1-u at (m-1)/2, q-1 below)
  odd_suffix_u,      ///< m odd:  the same two shapes with i and j swapped
  even_both_wide,    ///< m even, q > 2: i = j = (1 at m/2, q-1 at m/2-1..1, q-2 at 0)
  even_short_wide,   ///< m even, q > 2: i = (q-1 at m/2-1..1, q-2 at 0), j = (1 at m/2, q-1 below)
  even_wide_short,   ///< m even, q > 2: the previous pair swapped
  even_both_half,    ///< m even, q > 2: i = j = (q-1 at m/2-1..0)
  binary_short_long, ///< m even, q = 2: i = (1 at m/2-2..0), j = (1 at m/2..0)
  binary_long_short, ///< m even, q = 2: swapped
  binary_both_half,  ///< m even, q = 2: i = j = (1 at m/2-1..0)
  binary_gap_high,   ///< m even, q = 2: i = (1 at m/2, 0 at m/2-1, 1 below), j = (1 at m/2..2, 0 at 1, 1 at 0)
  binary_gap_low,    ///< m even, q = 2: swapped
};

inline std::string to_string(PatternFamily f) {
  switch (f) {
    case PatternFamily::odd_prefix_u: return "odd_prefix_u";
    case PatternFamily::odd_suffix_u: return "odd_suffix_u";
    case PatternFamily::even_both_wide: return "even_both_wide";
    case PatternFamily::even_short_wide: return "even_short_wide";
    case PatternFamily::even_wide_short: return "even_wide_short";
    case PatternFamily::even_both_half: return "even_both_half";
    case PatternFamily::binary_short_long: return "binary_short_long";
    case PatternFamily::binary_long_short: return "binary_long_short";
    case PatternFamily::binary_both_half: return "binary_both_half";
    case PatternFamily::binary_gap_high: return "binary_gap_high";
    case PatternFamily::binary_gap_low: return "binary_gap_low";
  }
  return "unknown";
}

struct PatternForm {
  PatternFamily family{};
  std::optional<std::uint32_t> u;  ///< free digit, odd-m families only
  /// True when (i, j) is not the catalogued pair itself but lies in the same pair of cosets.
  bool via_multiple = false;

  friend bool operator==(const PatternForm&, const PatternForm&) = default;
};

struct CataloguedPair {
  PatternForm form;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
};

/// Every catalogued (i, j) pair for the given (q, m), rendered as integers.
inline std::vector<CataloguedPair> pattern_catalogue(std::uint64_t q, unsigned m) {
  if (m < 2) throw invalid_parameter("pattern catalogue needs m >= 2");
  auto value = [q](const std::vector<std::pair<unsigned, std::uint64_t>>& digits) {
    std::uint64_t v = 0;
    for (const auto& [pos, d] : digits) v += d * detail::checked_pow(q, pos);
    return v;
  };
  auto run = [](unsigned lo, unsigned hi, std::uint64_t d) {  // digit d at positions lo..hi inclusive
    std::vector<std::pair<unsigned, std::uint64_t>> out;
    for (unsigned t = lo; t <= hi; ++t) out.emplace_back(t, d);
    return out;
  };
  auto with = [](std::vector<std::pair<unsigned, std::uint64_t>> v, unsigned pos, std::uint64_t d) {
    std::erase_if(v, [pos](const auto& e) { return e.first == pos; });
    v.emplace_back(pos, d);
    return v;
  };

  std::vector<CataloguedPair> out;
  if (m % 2 == 1) {
    const unsigned h = (m - 1) / 2;
    for (std::uint32_t u = 0; u < q; ++u) {
      const std::uint64_t a = value(with(run(1, h, q - 1), 0, u));
      const std::uint64_t b = value(with(run(0, h - 1, q - 1), h, q - 1 - u));
      out.push_back({{PatternFamily::odd_prefix_u, u, false}, a, b});
      out.push_back({{PatternFamily::odd_suffix_u, u, false}, b, a});
    }
    return out;
  }
  const unsigned h = m / 2;
  if (q > 2) {
    const std::uint64_t wide = value(with(with(run(1, h - 1, q - 1), h, 1), 0, q - 2));
    const std::uint64_t short_ = value(with(run(1, h - 1, q - 1), 0, q - 2));
    const std::uint64_t wide_tail = value(with(run(0, h - 1, q - 1), h, 1));
    const std::uint64_t half = value(run(0, h - 1, q - 1));
    out.push_back({{PatternFamily::even_both_wide, std::nullopt, false}, wide, wide});
    out.push_back({{PatternFamily::even_short_wide, std::nullopt, false}, short_, wide_tail});
    out.push_back({{PatternFamily::even_wide_short, std::nullopt, false}, wide_tail, short_});
    out.push_back({{PatternFamily::even_both_half, std::nullopt, false}, half, half});
    return out;
  }
  const std::uint64_t shortv = h >= 2 ? value(run(0, h - 2, 1)) : 0;
  const std::uint64_t longv = value(run(0, h, 1));
  const std::uint64_t half = value(run(0, h - 1, 1));
  const std::uint64_t gap_high = value(with(run(0, h, 1), h - 1, 0));
  const std::uint64_t gap_low = value(with(run(0, h, 1), 1, 0));
  out.push_back({{PatternFamily::binary_short_long, std::nullopt, false}, shortv, longv});
  out.push_back({{PatternFamily::binary_long_short, std::nullopt, false}, longv, shortv});
  out.push_back({{PatternFamily::binary_both_half, std::nullopt, false}, half, half});
  out.push_back({{PatternFamily::binary_gap_high, std::nullopt, false}, gap_high, gap_low});
  out.push_back({{PatternFamily::binary_gap_low, std::nullopt, false}, gap_low, gap_high});
  return out;
}

/// Matches a negation pair against the catalogue: exact (i, j) first, then by coset-leader pair.
/// Returns nullopt when no catalogued family covers the pair.
inline std::optional<PatternForm> classify_negation_pair(std::uint64_t i, std::uint64_t j, std::uint64_t q,
                                                         unsigned m) {
  const std::uint64_t n = detail::modulus_n(q, m);
  const std::uint64_t range = std::min(negation_pair_range(q, m), n - 1);
  if (i < 1 || j < 1 || i > range || j > range) {
    throw invalid_parameter("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [1, " +
                            std::to_string(range) + "]");
  }
  if (!detail::negation_in_coset_mod(i, j, q, m)) throw invalid_parameter("-j is not in C_i");
  const auto catalogue = pattern_catalogue(q, m);
  for (const auto& c : catalogue) {
    if (c.i == i && c.j == j) return c.form;
  }
  const std::uint64_t li = coset_leader(i, q, m);
  const std::uint64_t lj = coset_leader(j, q, m);
  for (const auto& c : catalogue) {
    if (coset_leader(c.i, q, m) == li && coset_leader(c.j, q, m) == lj) {
      PatternForm f = c.form;
      f.via_multiple = true;
      return f;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Runs

enum class RunMode { straight, circular };

/// Longest run of `symbol` in the sequence; circular mode glues the two ends together.
inline unsigned run_scan(const ExpansionSequence& seq, std::uint32_t symbol, RunMode mode) {
  const auto& d = seq.digits;
  const auto len = static_cast<unsigned>(d.size());
  unsigned best = 0;
  unsigned cur = 0;
  for (const auto v : d) {
    cur = v == symbol ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  if (mode == RunMode::straight || best == len) return best;
  unsigned head = 0;
  while (head < len && d[head] == symbol) ++head;
  unsigned tail = 0;
  while (tail < len && d[len - 1 - tail] == symbol) ++tail;
  return std::max(best, head + tail);
}

/// l_r(s): number of length-s q-ary sequences containing a straight run of r zeros, via the recursion.
inline std::uint64_t run_count_l(unsigned r, unsigned s, std::uint64_t q) {
  if (r < 1) throw invalid_parameter("run length r must be at least 1");
  detail::checked_pow(q, s);
  std::vector<std::uint64_t> l(s + 1, 0);
  for (unsigned t = 0; t <= s; ++t) {
    if (t < r) {
      l[t] = 0;
    } else if (t == r) {
      l[t] = 1;
    } else {
      l[t] = q * l[t - 1] + (q - 1) * (detail::checked_pow(q, t - r - 1) - l[t - r - 1]);
    }
  }
  return l[s];
}

/// Counts for every r in [0, s] at once: entry r is the number of length-s sequences
/// whose longest straight 0-run is at least r.  Enumerates all q^s sequences.
inline std::vector<std::uint64_t> run_count_oracle_table(unsigned s, std::uint64_t q,
                                                        std::uint64_t budget = kDefaultEnumerationBudget) {
  const std::uint64_t total = detail::checked_pow(q, s);
  if (total > budget) {
    throw budget_exceeded("q^s = " + std::to_string(total) + " sequences exceed the budget of " + std::to_string(budget));
  }
  std::vector<std::uint64_t> hist(s + 1, 0);  // hist[r] = sequences whose longest 0-run is exactly r
  std::vector<std::uint32_t> seq(s, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    unsigned best = 0;
    unsigned cur = 0;
    for (const auto v : seq) {
      cur = v == 0 ? cur + 1 : 0;
      best = std::max(best, cur);
    }
    ++hist[best];
    for (unsigned i = 0; i < s; ++i) {  // odometer increment
      if (++seq[i] < q) break;
      seq[i] = 0;
    }
  }
  std::vector<std::uint64_t> at_least(s + 1, 0);
  std::uint64_t acc = 0;
  for (unsigned r = s + 1; r-- > 0;) {
    acc += hist[r];
    at_least[r] = acc;
  }
  return at_least;
}

/// Literal count of length-s sequences with a straight 0-run of length >= r.
inline std::uint64_t run_count_oracle(unsigned r, unsigned s, std::uint64_t q,
                                      std::uint64_t budget = kDefaultEnumerationBudget) {
  if (r < 1) throw invalid_parameter("run length r must be at least 1");
  const auto table = run_count_oracle_table(s, q, budget);
  return r <= s ? table[r] : 0;
}

}  // namespace rbch
