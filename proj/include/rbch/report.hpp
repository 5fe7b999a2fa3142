#pragma once

// JSON views of codes, dimension reports and distance certificates.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "rbch/bch.hpp"
#include "rbch/distance.hpp"
#include "rbch/theory.hpp"

namespace rbch {

using json = nlohmann::ordered_json;

inline json to_json(const CodeSummary& c) {
  return json{{"q", c.q},           {"m", c.m}, {"n", c.n},
              {"delta", c.delta},   {"variant", to_string(c.variant)},
              {"generator", c.generator}, {"k", c.k}, {"self_reciprocal", c.self_reciprocal}};
}

inline CodeSummary code_summary_from_json(const json& j) {
  CodeSummary c;
  c.q = j.at("q").get<std::uint64_t>();
  c.m = j.at("m").get<unsigned>();
  c.n = j.at("n").get<std::uint64_t>();
  c.delta = j.at("delta").get<std::uint64_t>();
  c.variant = parse_variant(j.at("variant").get<std::string>());
  c.generator = j.at("generator").get<std::string>();
  c.k = j.at("k").get<std::uint64_t>();
  c.self_reciprocal = j.at("self_reciprocal").get<bool>();
  return c;
}

/// Field-free copy of a certificate: the witness is kept as canonical text.
struct CertificateRecord {
  CodeSummary code;
  CertificateKind kind = CertificateKind::lower_bound_only;
  std::uint64_t d_lower = 0;
  std::optional<std::uint64_t> d_upper;
  std::string method;
  std::optional<std::string> witness;
  double elapsed_ms = 0.0;

  bool operator==(const CertificateRecord&) const = default;
};

inline CertificateRecord record_of(const DistanceCertificate& cert) {
  CertificateRecord r{cert.code, cert.kind, cert.d_lower, cert.d_upper, cert.method, std::nullopt, cert.elapsed_ms};
  if (cert.witness) r.witness = to_string(*cert.witness);
  return r;
}

inline json to_json(const CertificateRecord& r) {
  json j{{"code", to_json(r.code)}, {"kind", to_string(r.kind)}, {"d_lower", r.d_lower}};
  j["d_upper"] = r.d_upper ? json(*r.d_upper) : json(nullptr);
  j["method"] = r.method;
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline json to_json(const DistanceCertificate& cert) { return to_json(record_of(cert)); }

inline CertificateRecord certificate_from_json(const json& j) {
  CertificateRecord r;
  r.code = code_summary_from_json(j.at("code"));
  r.kind = parse_certificate_kind(j.at("kind").get<std::string>());
  r.d_lower = j.at("d_lower").get<std::uint64_t>();
  if (!j.at("d_upper").is_null()) r.d_upper = j.at("d_upper").get<std::uint64_t>();
  r.method = j.at("method").get<std::string>();
  if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

inline json to_json(const DimensionReport& r) {
  json j{{"q", r.q},
         {"m", r.m},
         {"n", r.n},
         {"delta", r.delta},
         {"delta_q", r.delta_q},
         {"delta_0", r.delta_0},
         {"epsilon", r.epsilon}};
  j["case"] = r.case_label.empty() ? json("n/a") : json(r.case_label);
  j["k_closed"] = r.k_closed ? json(*r.k_closed) : json("n/a");
  j["k_constructed"] = r.k_constructed ? json(*r.k_constructed) : json(nullptr);
  return j;
}

inline json to_json(const DimensionBoundsReport& r) {
  json j{{"q", r.q}, {"m", r.m}, {"lambda", r.lambda}, {"r", r.r}, {"lower", r.lower}, {"upper", r.upper}};
  j["n_size"] = r.n_size ? json(*r.n_size) : json(nullptr);
  j["n_prime_size"] = r.n_prime_size;
  j["k_constructed"] = r.k_constructed ? json(*r.k_constructed) : json(nullptr);
  return j;
}

inline json to_json(const ProbeReport& p) {
  return json{{"conjecture", p.which}, {"q", p.q},
              {"m", p.m},            {"delta", p.delta},
              {"expected_d", p.expected_d}, {"verdict", to_string(p.verdict)},
              {"certificate", to_json(p.certificate)}};
}

inline json to_json(const SubspaceQuadruple& quad, const Field& field) {
  json hs = json::array();
  for (const auto& h : quad.h) {
    json exps = json::array();
    std::vector<std::uint64_t> e;
    for (const auto v : h) {
      if (v != 0) e.push_back(field.log(field.element(v)));
    }
    std::sort(e.begin(), e.end());
    for (const auto x : e) exps.push_back(x);
    hs.push_back(exps);
  }
  return json{{"r", quad.r}, {"exponents", hs}};
}

}  // namespace rbch
