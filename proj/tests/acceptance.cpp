// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rbch/rbch.hpp"
#include "rbch/report.hpp"
#include "rbch/tables.hpp"
#include "rbch/verify.hpp"

using namespace rbch;

namespace {

// Pinned limits
constexpr double kTable2SecondsLimit = 300.0;
constexpr double kTernarySecondsLimit = 120.0;
constexpr std::uint64_t kTable2Budget = std::uint64_t{1} << 24;
constexpr std::uint64_t kRunOracleBudget = std::uint64_t{1} << 24;
constexpr std::size_t kReversalSamples = 200;
const char* kTernaryGenerator = "x^13 + x^12 + 2x^11 + 2x^10 + x^8 + 2x^5 + x^3 + x^2 + 2x + 2";

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome table2() {
  const auto t0 = Clock::now();
  const auto rows = regenerate_table2(kTable2Budget);
  const double secs = seconds_since(t0);
  bool ok = secs < kTable2SecondsLimit;
  std::ostringstream os;
  const std::set<std::uint64_t> witness_rows{50, 38, 26};  // k of the n = 63 rows beyond the search budget
  for (const auto& r : rows) {
    const auto& c = r.certificate;
    bool row_ok = r.k_match && r.d_match;
    if (r.n == 63 && witness_rows.contains(r.stored.k)) {
      row_ok = row_ok && c.d_lower == 2 * r.stored.delta && c.d_upper.has_value() && c.witness.has_value();
    } else {
      row_ok = row_ok && c.is_exact() && c.method.starts_with("exhaustive") && c.d_lower == r.stored.d;
    }
    ok = ok && row_ok;
    os << " [" << r.n << "," << r.k_constructed << "," << r.d_text() << "]";
    if (!r.d_certified) os << "(uncertified)";
    if (!row_ok) os << "(mismatch)";
  }
  os << " in " << secs << " s";
  return {ok, os.str()};
}

Outcome ternary() {
  const auto t0 = Clock::now();
  const auto field = code_field(3, 3, parse_digit_polynomial("x^3-x+1", 3));
  const auto code = build_code(3, 3, 4, Variant::overline, field);
  const std::string g = to_string(code.generator);
  const auto cert = exact_min_distance(code, kTable2Budget);
  const double secs = seconds_since(t0);
  const bool ok = g == kTernaryGenerator && code.dimension == 13 && cert.is_exact() && cert.d_lower == 8 &&
                  verify_certificate(cert, code) && secs < kTernarySecondsLimit;
  std::ostringstream os;
  os << " g = " << g << ", k = " << code.dimension << ", d = " << cert.d_lower << " in " << secs << " s";
  return {ok, os.str()};
}

Outcome quintic() {
  const auto field = code_field(2, 5, parse_digit_polynomial("x^5+x^2+1", 2));
  const SubspaceQuadruple quad{2,
                               {subspace_from_exponents(*field, {1, 2, 19}), subspace_from_exponents(*field, {8, 12, 18}),
                                subspace_from_exponents(*field, {12, 13, 30}),
                                subspace_from_exponents(*field, {19, 23, 29})}};
  const auto chk = check_quadruple(quad, *field);
  const auto bar = build_code(2, 5, 3, Variant::overline, field);
  const auto word = quadruple_codeword(quad, field);
  const auto exact = exact_min_distance(bar);
  const bool ok = chk.ok() && membership(word, bar) && word.weight() == 6 && exact.is_exact() && exact.d_lower == 6;
  std::ostringstream os;
  os << " subspaces=" << chk.subspaces << " h12=" << chk.h12_trivial << " h34=" << chk.h34_trivial
     << " inverse=" << chk.inverse_match << " member=" << membership(word, bar) << " wt=" << word.weight()
     << " d=" << exact.d_lower;
  return {ok, os.str()};
}

struct DimensionSweep {
  std::uint64_t cases = 0;
  std::uint64_t k_mismatch = 0;
  std::uint64_t count_mismatch = 0;
  std::uint64_t structural_fail = 0;
  std::uint64_t max_n = 0;
  std::uint64_t sampled = 0;
};

const DimensionSweep& dimension_sweep() {
  static const DimensionSweep sweep = [] {
    DimensionSweep s;
    SuiteOptions opt;
    opt.samples = kReversalSamples;
    verify_dimension(
        [&](const json& j) {
          ++s.cases;
          s.max_n = std::max<std::uint64_t>(s.max_n, j.at("n").get<std::uint64_t>());
          if (j.at("k_closed") != j.at("k_constructed")) ++s.k_mismatch;
          if (j.at("deg_from_counts").get<std::uint64_t>() + j.at("k_constructed").get<std::uint64_t>() !=
              j.at("n").get<std::uint64_t>()) {
            ++s.count_mismatch;
          }
          const auto& st = j.at("structural");
          bool all = true;
          for (const auto& [key, v] : st.items()) {
            if (v.is_boolean() && !v.get<bool>()) all = false;
          }
          s.sampled += st.at("sampled").get<std::uint64_t>();
          if (!all) ++s.structural_fail;
        },
        opt);
    return s;
  }();
  return sweep;
}

Outcome closed_form() {
  const auto& s = dimension_sweep();
  std::ostringstream os;
  os << " " << s.cases << " (q, m, delta) cases, n up to " << s.max_n << ", k mismatches " << s.k_mismatch
     << ", degree-count mismatches " << s.count_mismatch;
  return {s.cases > 0 && s.max_n == 6560 && s.k_mismatch == 0 && s.count_mismatch == 0, os.str()};
}

Outcome structural() {
  const auto& s = dimension_sweep();
  std::ostringstream os;
  os << " " << s.cases << " parameter sets, " << s.sampled << " random codewords, failures " << s.structural_fail;
  return {s.cases > 0 && s.structural_fail == 0, os.str()};
}

Outcome suite_outcome(const SuiteResult& r) {
  return {r.cases > 0 && r.passed(),
          " " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures"};
}

Outcome leader_pairs() { return suite_outcome(verify_cosets(nullptr, {2, 3, 4, 5}, 8)); }

Outcome run_counts() {
  // l_r(s) only; the circular-run check belongs to the runs suite but not to this criterion
  std::uint64_t cases = 0;
  std::uint64_t bad = 0;
  for (const std::uint64_t q : {2, 3, 4}) {
    for (unsigned s = 1; s <= 12; ++s) {
      const auto table = run_count_oracle_table(s, q, kRunOracleBudget);
      for (unsigned r = 1; r <= s; ++r) {
        ++cases;
        if (run_count_l(r, s, q) != table[r]) ++bad;
      }
    }
  }
  return {cases == 3 * 78 && bad == 0, " " + std::to_string(cases) + " (q, r, s) cases, " + std::to_string(bad) +
                                           " mismatches"};
}

Outcome degree_and_bounds() {
  const auto deg = verify_degree(nullptr, {2, 3}, 6);
  const auto bnd = verify_bounds(nullptr, {2, 3}, 6);
  return {deg.cases > 0 && bnd.cases > 0 && deg.passed() && bnd.passed(),
          " degree " + std::to_string(deg.cases) + " cases / " + std::to_string(deg.failures) + " failures, bounds " +
              std::to_string(bnd.cases) + " cases / " + std::to_string(bnd.failures) + " failures"};
}

Outcome table1() {
  const auto rows = regenerate_table1();
  bool ok = rows.size() == 4;
  std::size_t cells = 0;
  bool flagged = false;
  for (const auto& r : rows) {
    ok = ok && r.all_hold();
    cells += r.cells.size();
    for (const auto& n : r.notes) flagged = flagged || n.find("duplicates: 17") != std::string::npos;
  }
  const auto control = trigger_cell(6, 5);
  ok = ok && flagged && !control.holds;
  std::ostringstream os;
  os << " " << cells << " (m, delta) cells hold, duplicate 17 flagged=" << flagged << ", control (6,5): V = "
     << control.volume << " vs " << control.space << " holds=" << control.holds;
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 reference table of binary even-like codes", table2},
      {"2 ternary [26,13,8] example", ternary},
      {"3 GF(32) subspace quadruple", quintic},
      {"4 closed-form dimension sweep", closed_form},
      {"5 leader-pair counts and pattern families", leader_pairs},
      {"6 run-count recursion vs oracle", run_counts},
      {"7 degree formula and dimension bounds", degree_and_bounds},
      {"8 sphere-packing trigger table", table1},
      {"9 structural invariants", structural},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %s:%s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
