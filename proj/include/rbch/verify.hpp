#pragma once

// Invariant sweeps.  Each suite emits one JSON object per case through a sink and
// returns the case and failure counts.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rbch/bch.hpp"
#include "rbch/cosets.hpp"
#include "rbch/distance.hpp"
#include "rbch/report.hpp"
#include "rbch/tables.hpp"
#include "rbch/theory.hpp"

namespace rbch {

using CaseSink = std::function<void(const json&)>;

struct SuiteResult {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  [[nodiscard]] bool passed() const { return failures == 0; }
};

struct SuiteOptions {
  std::uint64_t budget = kDefaultDistanceBudget;
  std::uint32_t seed = 20240101;
  std::size_t samples = 200;  ///< random codewords per code for the structural checks
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cosets", "dimension", "runs", "degree", "bounds", "distance"};
  return names;
}

namespace detail {

class SuiteRun {
 public:
  SuiteRun(std::string name, CaseSink sink) : sink_(std::move(sink)) { res_.suite = std::move(name); }
  void emit(json j, bool ok) {
    ++res_.cases;
    if (!ok) ++res_.failures;
    j["match"] = ok;
    if (sink_) sink_(j);
  }
  SuiteResult result() const { return res_; }

 private:
  CaseSink sink_;
  SuiteResult res_;
};

}  // namespace detail

/// Leader-pair closed counts vs enumeration, and pattern classification of every negation pair.
inline SuiteResult verify_cosets(const CaseSink& sink, const std::vector<std::uint64_t>& qs = {2, 3, 4, 5},
                                 unsigned m_max = 8) {
  detail::SuiteRun run("cosets", sink);
  for (const auto q : qs) {
    for (unsigned m = 2; m <= m_max; ++m) {
      const std::uint64_t n = detail::modulus_n(q, m);
      const std::uint64_t range = std::min(negation_pair_range(q, m), n - 1);
      const auto counts = leader_pair_counts_enumerated(range, q, m);
      for (std::uint64_t l = 1; l <= range; ++l) {
        const auto closed = leader_pair_count_closed(l, q, m);
        const std::uint64_t en = counts[l - 1];
        json j{{"check", "leader_pairs"}, {"q", q}, {"m", m}, {"l", l}};
        j["closed"] = closed ? json(*closed) : json("n/a");
        j["enumerated"] = en;
        run.emit(j, !closed || *closed == en);
      }
      std::uint64_t pairs = 0;
      std::uint64_t unclassified = 0;
      std::uint64_t via_multiple = 0;
      for (std::uint64_t i = 1; i <= range; ++i) {
        for (std::uint64_t jj = 1; jj <= range; ++jj) {
          if (!detail::negation_in_coset_mod(i, jj, q, m)) continue;
          ++pairs;
          const auto form = classify_negation_pair(i, jj, q, m);
          if (!form) {
            ++unclassified;
          } else if (form->via_multiple) {
            ++via_multiple;
          }
        }
      }
      run.emit(json{{"check", "pattern_families"},
                    {"q", q},
                    {"m", m},
                    {"range", range},
                    {"pairs", pairs},
                    {"via_multiple", via_multiple},
                    {"unclassified", unclassified}},
               unclassified == 0);
    }
  }
  return run.result();
}

namespace detail {

/// Structural invariants of the four generators for one (q, m, delta); reversal closure and
/// even-like evaluation are sampled on random codewords.
inline json structural_case(std::uint64_t q, unsigned m, std::uint64_t delta, const FieldPtr& field,
                            std::mt19937_64& rng, std::size_t samples, bool& ok) {
  const BchCode plus = build_code(q, m, delta, Variant::plus, field);
  const BchCode minus = build_code(q, m, delta, Variant::minus, field);
  const BchCode tilde = build_code(q, m, delta, Variant::tilde, field);
  const BchCode bar = build_code(q, m, delta, Variant::overline, field);
  const bool deg_pm = plus.generator.degree() == minus.generator.degree();
  const bool rec_tilde = is_reversible(tilde);
  const bool rec_bar = is_reversible(bar);
  const bool factor = bar.generator == tilde.generator * Polynomial::linear(field, field->one());
  auto divides_xn1 = [&](const BchCode& code) {
    if (code.has_digit_form()) {
      DigitWord w(code.n + 1, 0);
      w[0] = static_cast<std::uint8_t>(code.prime() - 1);
      w[code.n] = 1;
      const DigitWord r = digit::remainder(std::move(w), code);
      return std::all_of(r.begin(), r.end(), [](std::uint8_t v) { return v == 0; });
    }
    return (Polynomial::x_n_minus_one(field, code.n) % code.generator).is_zero();
  };
  const bool divides = divides_xn1(bar) && divides_xn1(plus);
  bool closure = true;
  bool even = true;
  std::size_t sampled = 0;
  if (bar.has_digit_form()) {
    const std::uint32_t p = bar.prime();
    std::uniform_int_distribution<std::uint32_t> sym(0, p - 1);
    for (const BchCode* code : {&tilde, &bar}) {
      if (code->dimension == 0) continue;
      for (std::size_t s = 0; s < samples; ++s) {
        DigitWord msg(code->dimension);
        for (auto& v : msg) v = static_cast<std::uint8_t>(sym(rng));
        const DigitWord c = digit::encode(msg, *code);
        closure = closure && digit::is_member(digit::reversed(c, code->n), *code);
        if (code == &bar) even = even && digit::sum(c, p) == 0;
        ++sampled;
      }
    }
  }
  ok = deg_pm && rec_tilde && rec_bar && factor && divides && closure && even;
  return json{{"deg_plus_eq_minus", deg_pm}, {"tilde_self_reciprocal", rec_tilde},
              {"overline_self_reciprocal", rec_bar}, {"overline_eq_x_minus_1_tilde", factor},
              {"divides_x_n_minus_1", divides}, {"reversal_closure", closure},
              {"even_like", even}, {"sampled", sampled}};
}

}  // namespace detail

/// Closed-form k vs construction over every admissible (q, m, delta), plus structural invariants.
inline SuiteResult verify_dimension(const CaseSink& sink, const SuiteOptions& opt = {},
                                    const std::vector<std::uint64_t>& qs = {2, 3}, unsigned m_max = 8) {
  detail::SuiteRun run("dimension", sink);
  std::mt19937_64 rng(opt.seed);
  for (const auto q : qs) {
    for (unsigned m = 2; m <= m_max; ++m) {
      const FieldPtr field = code_field(q, m);
      const std::uint64_t hi = max_delta(q, m, Variant::overline);
      for (std::uint64_t delta = 2; delta <= hi; ++delta) {
        DimensionReport rep;
        try {
          rep = dimension_closed_form(q, m, delta);
        } catch (const formula_not_applicable&) {
          continue;
        }
        const BchCode bar = build_code(q, m, delta, Variant::overline, field);
        rep.k_constructed = bar.dimension;
        const std::uint64_t deg_counts = overline_degree_from_counts(q, m, delta);
        bool structural_ok = false;
        json j = to_json(rep);
        j["check"] = "closed_form";
        j["deg_from_counts"] = deg_counts;
        j["structural"] = detail::structural_case(q, m, delta, field, rng, opt.samples, structural_ok);
        const bool ok = rep.consistent() &&
                        deg_counts == static_cast<std::uint64_t>(bar.generator.degree()) && structural_ok;
        run.emit(j, ok);
      }
    }
  }
  return run.result();
}

/// l_r(s) recursion vs literal enumeration, and the circular-run description of the zeros of g+ and g-.
inline SuiteResult verify_runs(const CaseSink& sink, const std::vector<std::uint64_t>& qs = {2, 3, 4},
                               unsigned s_max = 12, std::uint64_t budget = std::uint64_t{1} << 24) {
  detail::SuiteRun run("runs", sink);
  for (const auto q : qs) {
    for (unsigned s = 1; s <= s_max; ++s) {
      const auto table = run_count_oracle_table(s, q, budget);
      for (unsigned r = 1; r <= s; ++r) {
        const std::uint64_t rec = run_count_l(r, s, q);
        run.emit(json{{"check", "l_r"}, {"q", q}, {"r", r}, {"s", s}, {"recursion", rec}, {"oracle", table[r]}},
                 rec == table[r]);
      }
    }
  }
  for (const std::uint64_t q : {2, 3}) {
    for (unsigned m = 2;; ++m) {
      const std::uint64_t n = detail::modulus_n(q, m);
      if (n > 728) break;
      for (unsigned lambda = (m + 1) / 2; lambda < m; ++lambda) {
        const std::uint64_t delta = detail::checked_pow(q, lambda);
        const unsigned r = m - lambda;
        std::uint64_t bad = 0;
        for (std::uint64_t i = 1; i < n; ++i) {
          const auto seq = expand(i, q, m);
          const bool plus = coset_leader(i, q, m) < delta;
          const bool minus = coset_leader(n - i, q, m) < delta;
          if (plus != (run_scan(seq, 0, RunMode::circular) >= r)) ++bad;
          if (minus != (run_scan(seq, static_cast<std::uint32_t>(q - 1), RunMode::circular) >= r)) ++bad;
        }
        run.emit(json{{"check", "circular_runs"}, {"q", q}, {"m", m}, {"lambda", lambda}, {"mismatches", bad}},
                 bad == 0);
      }
    }
  }
  return run.result();
}

/// Degree formula for delta = q^lambda vs the constructed g+.
inline SuiteResult verify_degree(const CaseSink& sink, const std::vector<std::uint64_t>& qs = {2, 3},
                                 unsigned m_max = 6) {
  detail::SuiteRun run("degree", sink);
  for (const auto q : qs) {
    for (unsigned m = 2; m <= m_max; ++m) {
      const FieldPtr field = code_field(q, m);
      for (unsigned lambda = (m + 1) / 2; lambda < m; ++lambda) {
        const std::uint64_t delta = detail::checked_pow(q, lambda);
        const std::uint64_t formula = degree_formula(q, m, lambda);
        const BchCode plus = build_code(q, m, delta, Variant::plus, field);
        const auto constructed = static_cast<std::uint64_t>(plus.generator.degree());
        run.emit(json{{"q", q}, {"m", m}, {"lambda", lambda}, {"formula", formula}, {"constructed", constructed}},
                 formula == constructed);
      }
    }
  }
  return run.result();
}

/// Dimension bounds for delta = q^lambda bracket the constructed k; |N| obeys 2|N'| <= |N| <= m|N'|.
inline SuiteResult verify_bounds(const CaseSink& sink, const std::vector<std::uint64_t>& qs = {2, 3},
                                 unsigned m_max = 6) {
  detail::SuiteRun run("bounds", sink);
  for (const auto q : qs) {
    for (unsigned m = 2; m <= m_max; ++m) {
      const FieldPtr field = code_field(q, m);
      for (unsigned lambda = (m + 1) / 2; lambda < m; ++lambda) {
        DimensionBoundsReport rep = dimension_bounds(q, m, lambda);
        const std::uint64_t delta = detail::checked_pow(q, lambda);
        const BchCode bar = build_code(q, m, delta, Variant::overline, field);
        const bool same = !rep.k_constructed || *rep.k_constructed == bar.dimension;
        rep.k_constructed = bar.dimension;
        json j = to_json(rep);
        j["lower_le_upper"] = rep.lower <= rep.upper;
        run.emit(j, same && rep.lower <= rep.upper && rep.brackets_k() && rep.n_bounds_hold());
      }
    }
  }
  return run.result();
}

/// Distance certificates for the reference codes and a small exhaustive sweep.
inline SuiteResult verify_distance(const CaseSink& sink, const SuiteOptions& opt = {}) {
  detail::SuiteRun run("distance", sink);
  for (const auto& row : table2_reference()) {
    const BchCode code = build_code(2, row.m, row.delta, Variant::overline);
    const DistanceCertificate cert = certify_distance(code, opt.budget);
    const bool valid = verify_certificate(cert, code);
    const bool agrees = cert.is_exact() ? cert.d_lower == row.d
                                        : cert.d_lower <= row.d && (!cert.d_upper || row.d <= *cert.d_upper);
    json j{{"check", "reference"}, {"stored_d", row.d}, {"certificate", to_json(cert)}};
    run.emit(j, valid && agrees);
  }
  {
    const FieldPtr field = code_field(3, 3, parse_digit_polynomial("x^3-x+1", 3));
    const BchCode code = build_code(3, 3, 4, Variant::overline, field);
    const DistanceCertificate cert = exact_min_distance(code, opt.budget);
    run.emit(json{{"check", "ternary"}, {"certificate", to_json(cert)}},
             verify_certificate(cert, code) && cert.is_exact() && cert.d_lower == 8);
  }
  for (unsigned m = 3; m <= 5; ++m) {
    const FieldPtr field = code_field(2, m);
    for (std::uint64_t delta = 2; delta <= max_delta(2, m, Variant::overline); ++delta) {
      const BchCode code = build_code(2, m, delta, Variant::overline, field);
      if (code.dimension == 0) continue;
      const DistanceCertificate cert = exact_min_distance(code, opt.budget);
      if (!cert.is_exact()) continue;
      const bool floor_ok = designed_floor(code) <= cert.d_lower;
      const bool trigger = sphere_packing_trigger(2, m, delta, code.dimension);
      const bool trigger_ok = !trigger || cert.d_lower == 2 * delta;
      run.emit(json{{"check", "exhaustive"}, {"m", m}, {"delta", delta}, {"k", code.dimension},
                    {"d", cert.d_lower}, {"trigger", trigger}},
               verify_certificate(cert, code) && floor_ok && trigger_ok);
    }
  }
  return run.result();
}

inline SuiteResult run_suite(std::string_view name, const CaseSink& sink, const SuiteOptions& opt = {}) {
  if (name == "cosets") return verify_cosets(sink);
  if (name == "dimension") return verify_dimension(sink, opt);
  if (name == "runs") return verify_runs(sink);
  if (name == "degree") return verify_degree(sink);
  if (name == "bounds") return verify_bounds(sink);
  if (name == "distance") return verify_distance(sink, opt);
  throw invalid_parameter("unknown suite '" + std::string(name) +
                          "' (expected cosets, dimension, runs, degree, bounds or distance)");
}

}  // namespace rbch
