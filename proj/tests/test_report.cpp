#include <gtest/gtest.h>

#include "rbch/report.hpp"
#include "rbch/tables.hpp"
#include "rbch/verify.hpp"

using namespace rbch;

TEST(Json, CodeSummaryRoundTrip) {
  const auto s = summarize(build_code(3, 3, 4, Variant::overline, code_field(3, 3, parse_digit_polynomial("x^3-x+1", 3))));
  const json j = to_json(s);
  EXPECT_EQ(j.at("k"), 13);
  EXPECT_EQ(code_summary_from_json(json::parse(j.dump())), s);
}

TEST(Json, CertificateRoundTrip) {
  for (const auto& [m, delta] : std::vector<std::pair<unsigned, std::uint64_t>>{{4, 3}, {6, 3}}) {
    const auto code = build_code(2, m, delta, Variant::overline);
    const auto cert = m == 6 ? exact_min_distance(code, 16) : exact_min_distance(code);
    const auto rec = record_of(cert);
    const auto back = certificate_from_json(json::parse(to_json(cert).dump()));
    EXPECT_EQ(back, rec);
    EXPECT_EQ(back.witness.has_value(), cert.witness.has_value());
  }
  EXPECT_THROW(certificate_from_json(json{{"kind", "exact"}}), json::exception);
}

TEST(Json, DimensionReportNotApplicable) {
  const auto rep = dimension_report(2, 6, 20, false);
  const json j = to_json(rep);
  EXPECT_EQ(j.at("k_closed"), "n/a");
  EXPECT_TRUE(j.at("k_constructed").is_null());
  EXPECT_EQ(to_json(dimension_report(2, 5, 3)).at("k_closed"), 20);
}

TEST(Json, QuadrupleExponents) {
  const auto field = code_field(2, 5, parse_digit_polynomial("x^5+x^2+1", 2));
  const SubspaceQuadruple quad{2,
                               {subspace_from_exponents(*field, {19, 1, 2}), subspace_from_exponents(*field, {8, 12, 18}),
                                subspace_from_exponents(*field, {12, 13, 30}),
                                subspace_from_exponents(*field, {19, 23, 29})}};
  const json j = to_json(quad, *field);
  EXPECT_EQ(j.at("exponents").at(0), json({1, 2, 19}));
  EXPECT_EQ(j.at("exponents").at(3), json({19, 23, 29}));
}

TEST(Table1, RegenerationFlagsDuplicate) {
  const auto rows = regenerate_table1();
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) EXPECT_TRUE(r.all_hold());
  const auto& third = rows[2];
  EXPECT_EQ(third.m_evaluated, (std::vector<unsigned>{14, 15, 16, 17, 18, 19}));
  ASSERT_FALSE(third.notes.empty());
  EXPECT_NE(third.notes.front().find("17"), std::string::npos);
  EXPECT_NE(third.notes.front().find("16"), std::string::npos);
  EXPECT_TRUE(rows[0].notes.empty());
  EXPECT_FALSE(trigger_cell(6, 5).holds);
}

TEST(Table2, CsvHeaderAndRows) {
  Table2Result r;
  r.stored = table2_reference().front();
  r.n = 15;
  r.k_constructed = 6;
  r.certificate.kind = CertificateKind::exact;
  r.certificate.d_lower = 6;
  r.certificate.d_upper = 6;
  EXPECT_EQ(table2_csv({r}), "m,n,k,d,delta,best_cyclic,optimal\n4,15,6,6,3,Yes,Yes\n");
  r.certificate.kind = CertificateKind::upper_witness;
  EXPECT_EQ(r.d_text(), "≥6");
}

TEST(Table2, SmallRowsRegenerate) {
  for (const auto& row : table2_reference()) {
    if (row.m > 5) continue;
    const auto res = regenerate_table2_row(row);
    EXPECT_TRUE(res.k_match);
    EXPECT_TRUE(res.d_certified) << row.n << "," << row.k;
  }
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 6u);
  EXPECT_THROW(run_suite("nope", nullptr), invalid_parameter);
  std::size_t lines = 0;
  const auto res = run_suite("degree", [&](const json& j) {
    ++lines;
    EXPECT_TRUE(j.contains("match"));
  });
  EXPECT_TRUE(res.passed());
  EXPECT_EQ(res.cases, lines);
}
