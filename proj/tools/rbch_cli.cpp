// rbch: command-line front end for reversible BCH code construction and certification.
//
//   rbch info    --q 2 --m 4 --delta 3
//   rbch table   --paper 2 --format csv
//   rbch verify  --suite dimension --log-dir logs
//   rbch witness --kind subspace --m 5 --r 2 --modulus "x^5+x^2+1"
//
// Exit status: 0 success, 1 verification failure or no witness, 2 usage / precondition error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rbch/rbch.hpp"
#include "rbch/report.hpp"
#include "rbch/tables.hpp"
#include "rbch/verify.hpp"

namespace {

using rbch::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::uint64_t q = 2;
  unsigned m = 4;
  std::uint64_t delta = 3;
  unsigned r = 2;
  std::string variant = "overline";
  std::string modulus;
  std::uint64_t budget = rbch::kDefaultDistanceBudget;
  std::string format;
  std::string out;
  std::string log_dir;
  int paper = 2;
  std::string suite;
  std::string kind;
  std::string word;
};

std::string utc_stamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::ostringstream os;
  os << std::put_time(&tm, "%Y%m%dT%H%M%S") << '.' << std::setw(3) << std::setfill('0') << ms << 'Z';
  return os.str();
}

std::string resolve_log_dir(const RunConfig& cfg, bool required) {
  if (!cfg.log_dir.empty()) return cfg.log_dir;
  if (const char* env = std::getenv("RBCH_LOG_DIR"); env != nullptr && *env != '\0') return env;
  return required ? "rbch-logs" : "";
}

/// Opens <dir>/<UTC timestamp>-<command>.jsonl, creating the directory.
std::optional<std::ofstream> open_log(const RunConfig& cfg, const std::string& command, bool required,
                                      std::string* path_out = nullptr) {
  const std::string dir = resolve_log_dir(cfg, required);
  if (dir.empty()) return std::nullopt;
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / (utc_stamp() + "-" + command + ".jsonl")).string();
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open log file " + path);
  if (path_out) *path_out = path;
  return f;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::optional<rbch::Digits> parse_modulus(const RunConfig& cfg) {
  if (cfg.modulus.empty()) return std::nullopt;
  const auto factors = rbch::detail::prime_factors(cfg.q);
  if (factors.size() != 1) throw rbch::invalid_parameter("q = " + std::to_string(cfg.q) + " is not a prime power");
  return rbch::parse_digit_polynomial(cfg.modulus, static_cast<std::uint32_t>(factors.front()));
}

void log_record(const RunConfig& cfg, const std::string& command, const json& record) {
  if (auto log = open_log(cfg, command, false)) *log << record.dump() << '\n';
}

std::string certificate_text(const rbch::DistanceCertificate& c) {
  std::ostringstream os;
  os << "d: ";
  if (c.is_exact()) {
    os << c.d_lower;
  } else {
    os << "[" << c.d_lower << ", " << (c.d_upper ? std::to_string(*c.d_upper) : "?") << "]";
  }
  os << " (" << rbch::to_string(c.kind) << "; " << c.method << ")\n";
  if (c.witness) os << "witness: " << rbch::to_string(*c.witness) << "\n";
  return os.str();
}

int cmd_info(const RunConfig& cfg) {
  const rbch::Variant variant = rbch::parse_variant(cfg.variant);
  const auto field = rbch::code_field(cfg.q, cfg.m, parse_modulus(cfg));
  const rbch::BchCode code = rbch::build_code(cfg.q, cfg.m, cfg.delta, variant, field);

  json report{{"code", rbch::to_json(rbch::summarize(code))}};
  std::optional<rbch::DimensionReport> dim;
  if (variant == rbch::Variant::overline) {
    dim = rbch::dimension_report(cfg.q, cfg.m, cfg.delta, false);
    dim->k_constructed = code.dimension;
    report["dimension"] = rbch::to_json(*dim);
    const auto sp = rbch::sphere_packing_check(cfg.q, cfg.m, cfg.delta, code.dimension);
    report["sphere_packing"] = json{{"holds", sp.holds}, {"volume", sp.volume.str()}, {"space", sp.space.str()}};
  } else {
    report["dimension"] = json{{"k_closed", "n/a"}, {"k_constructed", code.dimension}};
  }
  report["bch_floor"] = rbch::designed_floor(code);
  const auto cert = code.dimension == 0 ? std::optional<rbch::DistanceCertificate>{}
                                        : std::optional(rbch::certify_distance(code, cfg.budget));
  report["certificate"] = cert ? rbch::to_json(*cert) : json(nullptr);
  log_record(cfg, "info", report);

  if (cfg.format == "text") {
    std::ostringstream os;
    os << "code: [" << code.n << ", " << code.dimension << "] over GF(" << code.q << "), variant "
       << rbch::to_string(variant) << ", delta " << code.delta << "\n";
    os << "generator: " << rbch::to_string(code.generator) << "\n";
    os << "k constructed: " << code.dimension << ", k closed form: "
       << (dim && dim->k_closed ? std::to_string(*dim->k_closed) : std::string("n/a")) << "\n";
    os << "BCH floor: " << rbch::designed_floor(code) << "\n";
    if (report.contains("sphere_packing")) {
      os << "sphere-packing trigger: " << (report["sphere_packing"]["holds"].get<bool>() ? "true" : "false") << "\n";
    }
    if (cert) os << certificate_text(*cert);
    emit(cfg, os.str());
  } else {
    emit(cfg, report.dump(2));
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg) {
  if (cfg.paper == 1) {
    const auto rows = rbch::regenerate_table1();
    json all = json::array();
    for (const auto& r : rows) all.push_back(rbch::to_json(r));
    log_record(cfg, "table1", all);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "m,delta,k,holds\n";
      for (const auto& r : rows) {
        for (const auto& c : r.cells) os << c.m << ',' << c.delta << ',' << c.k << ',' << (c.holds ? "true" : "false") << '\n';
      }
      emit(cfg, os.str());
    } else if (cfg.format == "text") {
      std::ostringstream os;
      for (const auto& r : rows) {
        os << "m in {";
        for (std::size_t i = 0; i < r.stored.m_list.size(); ++i) os << (i ? "," : "") << r.stored.m_list[i];
        os << "}, delta in {";
        for (std::size_t i = 0; i < r.stored.delta_list.size(); ++i) os << (i ? "," : "") << r.stored.delta_list[i];
        os << "}: " << (r.all_hold() ? "all hold" : "MISMATCH") << "\n";
        for (const auto& n : r.notes) os << "  note: " << n << "\n";
      }
      emit(cfg, os.str());
    } else {
      std::ostringstream os;
      for (const auto& j : all) os << j.dump() << '\n';
      emit(cfg, os.str());
    }
    return kOk;
  }
  if (cfg.paper != 2) throw rbch::invalid_parameter("--paper must be 1 or 2");
  const auto rows = rbch::regenerate_table2(cfg.budget);
  json all = json::array();
  for (const auto& r : rows) all.push_back(rbch::to_json(r));
  log_record(cfg, "table2", all);
  if (cfg.format == "json") {
    std::ostringstream os;
    for (const auto& j : all) os << j.dump() << '\n';
    emit(cfg, os.str());
  } else {
    std::string text = rbch::table2_csv(rows);
    if (cfg.format == "text") {
      std::ostringstream os;
      os << text;
      for (const auto& r : rows) {
        for (const auto& n : r.notes) os << "# [" << r.n << "," << r.k_constructed << "] " << n << '\n';
      }
      text = os.str();
    } else {
      for (const auto& r : rows) {
        for (const auto& n : r.notes) std::cerr << "note [" << r.n << "," << r.k_constructed << "]: " << n << '\n';
      }
    }
    emit(cfg, text);
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::string path;
  auto log = open_log(cfg, "verify-" + cfg.suite, true, &path);
  rbch::SuiteOptions opt;
  opt.budget = cfg.budget;
  std::uint64_t shown = 0;
  const auto res = rbch::run_suite(
      cfg.suite,
      [&](const json& j) {
        *log << j.dump() << '\n';
        if (!j.value("match", true) && shown++ < 10) std::cerr << "FAIL " << j.dump() << '\n';
      },
      opt);
  json summary{{"suite", res.suite}, {"cases", res.cases}, {"failures", res.failures},
               {"passed", res.passed()}, {"log", path}};
  if (cfg.format == "text") {
    emit(cfg, "suite " + res.suite + ": " + std::to_string(res.cases) + " cases, " + std::to_string(res.failures) +
                  " failures (" + (res.passed() ? "PASS" : "FAIL") + "), log " + path);
  } else {
    emit(cfg, summary.dump());
  }
  return res.passed() ? kOk : kFailure;
}

int cmd_witness(const RunConfig& cfg) {
  json out;
  rbch::DistanceCertificate cert;
  if (cfg.kind == "subspace") {
    if (cfg.q != 2) throw rbch::invalid_parameter("subspace witness needs --q 2");
    const auto field = rbch::code_field(2, cfg.m, parse_modulus(cfg));
    const auto w = rbch::subspace_quadruple_witness(cfg.m, cfg.r, field, cfg.budget);
    if (!w) throw rbch::no_witness("subspace quadruple: search space exhausted without a valid quadruple");
    cert = w->certificate;
    out = rbch::to_json(cert);
    out["quadruple"] = rbch::to_json(w->quadruple, *field);
  } else if (cfg.kind == "subgroup" || cfg.kind == "reversible") {
    const auto field = rbch::code_field(cfg.q, cfg.m, parse_modulus(cfg));
    const rbch::BchCode plus = rbch::build_code(cfg.q, cfg.m, cfg.delta, rbch::Variant::plus, field);
    std::optional<rbch::Polynomial> c;
    if (cfg.kind == "subgroup") {
      c = rbch::subgroup_witness(cfg.q, cfg.m, cfg.delta, field);
    } else if (!cfg.word.empty()) {
      c = rbch::Polynomial::from_digits(field, rbch::parse_digit_polynomial(cfg.word, field->characteristic()));
    } else {
      c = rbch::build_code(cfg.q, cfg.m, cfg.delta, rbch::Variant::tilde, field).generator;
    }
    cert = rbch::lift_reversible(*c, plus);
    cert.method = (cfg.kind == "subgroup" ? "subgroup witness + " : "") + cert.method;
    out = rbch::to_json(cert);
    out["c"] = rbch::to_string(*c);
  } else {
    throw rbch::invalid_parameter("--kind must be subgroup, subspace or reversible");
  }
  log_record(cfg, "witness-" + cfg.kind, out);
  emit(cfg, cfg.format == "text" ? certificate_text(cert) : out.dump(2));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible BCH codes: construction, dimensions and distance certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--modulus", cfg.modulus, "Irreducible modulus over GF(p) in caret notation, e.g. \"x^5+x^2+1\"");
    sub->add_option("--budget", cfg.budget, "Enumeration budget (codewords, pairs)")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Write the output to this file instead of stdout");
    sub->add_option("--log-dir", cfg.log_dir, "Log directory (default: $RBCH_LOG_DIR)");
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "Alphabet size (prime power)");
    sub->add_option("--m", cfg.m, "Extension degree, n = q^m - 1");
    sub->add_option("--delta", cfg.delta, "Designed distance");
  };

  auto* info = app.add_subcommand("info", "Construct one code and report k, bounds and a distance certificate");
  params(info);
  common(info);
  info->add_option("--variant", cfg.variant, "plus, minus, tilde or overline")->capture_default_str();
  info->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "Regenerate a reference table and diff it against the stored rows");
  table->add_option("--paper", cfg.paper, "Table number (1 or 2)")->required()->check(CLI::IsMember({1, 2}));
  table->add_option("--format", cfg.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  common(table);

  auto* verify = app.add_subcommand("verify", "Run an invariant sweep, writing one JSON line per case");
  verify->add_option("--suite", cfg.suite, "cosets, dimension, runs, degree, bounds or distance")
      ->required()
      ->check(CLI::IsMember(rbch::suite_names()));
  verify->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  common(verify);

  auto* witness = app.add_subcommand("witness", "Build a low-weight witness and emit its certificate");
  witness->add_option("--kind", cfg.kind, "subgroup, subspace or reversible")
      ->required()
      ->check(CLI::IsMember({"subgroup", "subspace", "reversible"}));
  params(witness);
  witness->add_option("--r", cfg.r, "Subspace dimension (subspace kind), delta = 2^r - 1");
  witness->add_option("--word", cfg.word, "Codeword c of the plus code to lift (reversible kind)");
  witness->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  common(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(cfg);
    if (*table) return cmd_table(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*witness) return cmd_witness(cfg);
  } catch (const rbch::no_witness& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const rbch::invalid_parameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const rbch::formula_not_applicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const rbch::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
