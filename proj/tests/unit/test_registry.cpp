#include "latticelab/registry.hpp"
#include "latticelab/report.hpp"
#include "latticelab/runner.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace latticelab;
using namespace latticelab::registry;

TEST(Registry, KindCounts) {
  std::map<RecordKind, int> counts;
  for (const auto& r : registry_catalog()) ++counts[r.kind];
  EXPECT_EQ(counts[RecordKind::coefficient_exact], 10);
  EXPECT_EQ(counts[RecordKind::numeric_theorem], 20);
  EXPECT_EQ(counts[RecordKind::numeric_conjecture], 4);
}

TEST(Registry, IdsUniqueAndConjecturesMarked) {
  std::set<std::string> ids;
  std::set<std::string> conj;
  for (const auto& r : registry_catalog()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_FALSE(r.anchor.empty()) << r.id;
    EXPECT_TRUE(r.evaluate) << r.id;
    if (r.kind == RecordKind::numeric_conjecture) {
      conj.insert(r.id);
      EXPECT_EQ(r.status, RecordStatus::conjectural);
    } else {
      EXPECT_EQ(r.status, RecordStatus::proved) << r.id;
    }
    if (r.kind == RecordKind::coefficient_exact) {
      EXPECT_TRUE(r.evaluate_mutated) << r.id;
      EXPECT_EQ(r.weight, 2U) << r.id;
    }
  }
  EXPECT_EQ(conj, (std::set<std::string>{"cuspform30-g3", "conj-F215", "conj-F253", "conductor17"}));
}

TEST(Registry, Selection) {
  EXPECT_EQ(select_records({"all"}).size(), registry_catalog().size());
  EXPECT_EQ(select_records({"coefficient-exact"}).size(), 10U);
  EXPECT_EQ(select_records({"somos-3term", "F23"}).size(), 2U);
  EXPECT_THROW(find_record("no-such-record"), DomainError);
  EXPECT_EQ(parse_record_kind(to_string(RecordKind::numeric_theorem)), RecordKind::numeric_theorem);
}

TEST(Registry, SturmBoundDecidesCoefficientVerdict) {
  WorkingPrecision wp(PrecisionPolicy{40, {}});
  const auto& r = find_record("somos-3term");
  EvalContext ctx;
  ctx.n_terms = 50;
  EXPECT_EQ(evaluate_record(r, ctx).verdict, Verdict::pass);
  ctx.n_terms = 10;
  const auto low = evaluate_record(r, ctx);
  EXPECT_EQ(low.verdict, Verdict::fail);
  EXPECT_NE(low.detail.find("Sturm"), std::string::npos);
}

TEST(Registry, MutatedCoefficientRecordFails) {
  WorkingPrecision wp(PrecisionPolicy{40, {}});
  const auto res = evaluate_record(find_record("somos-3term"), EvalContext{}, true);
  EXPECT_EQ(res.verdict, Verdict::fail);
  EXPECT_TRUE(res.first_mismatch.has_value());
}

TEST(Registry, ConjectureVerdicts) {
  WorkingPrecision wp(PrecisionPolicy{40, {}});
  EvalContext ctx;
  ctx.tolerance_digits = 12;
  EXPECT_EQ(evaluate_record(find_record("conductor17"), ctx).verdict, Verdict::conjecture_consistent);
}

TEST(Registry, NumericCheck) {
  WorkingPrecision wp(PrecisionPolicy{40, {}});
  const auto ok = numeric_check("x", BigReal(2), BigReal(2) + ten_to_minus(30), 25);
  EXPECT_TRUE(ok.pass);
  EXPECT_NEAR(ok.digits, 30, 0.5);
  const auto bad = numeric_check("y", BigReal(2), BigReal(3), 25);
  EXPECT_FALSE(bad.pass);
  const auto both = combine_checks({ok, bad});
  EXPECT_FALSE(both.pass);
  EXPECT_EQ(both.residual, bad.residual);
}

namespace {

VerificationReport sample_report() {
  VerificationReport r;
  r.version = "1.2.3";
  r.n_terms = 500;
  RecordResult a;
  a.id = "exact";
  a.kind = RecordKind::coefficient_exact;
  a.verdict = Verdict::pass;
  a.coefficients_checked = 500;
  a.seconds = 0.25;
  RecordResult b;
  b.id = "num";
  b.verdict = Verdict::pass;
  b.digits = 47.5;
  b.residual = "-1.5e-48";
  b.checks = {CheckLine{"t=1", "1.0", "1.0", "0", 54, true}};
  RecordResult c;
  c.id = "guess";
  c.kind = RecordKind::numeric_conjecture;
  c.status = RecordStatus::conjectural;
  c.verdict = Verdict::inconsistent;
  c.digits = 3;
  r.results = {a, b, c};
  return r;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  const auto r = sample_report();
  const auto j = to_json(r);
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(report_from_json(j), r);
  auto wrong = j;
  wrong["schema_version"] = 2;
  EXPECT_ANY_THROW(report_from_json(wrong));
}

TEST(Report, ExitCodeIgnoresConjectures) {
  auto r = sample_report();
  EXPECT_EQ(r.exit_code(), 0);
  r.results[1].verdict = Verdict::timeout;
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Report, CsvAndHuman) {
  const auto r = sample_report();
  const std::string csv = report_emit(r, ReportFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,kind,verdict,digits,seconds");
  EXPECT_NE(csv.find("\nexact,coefficient-exact,PASS,,"), std::string::npos);
  const std::string human = report_emit(r, ReportFormat::human);
  EXPECT_NE(human.find("Conjectures (numerical evidence, not gating)"), std::string::npos);
  EXPECT_LT(human.find("Identities"), human.find("Conjectures"));
  EXPECT_THROW(parse_report_format("xml"), ParseError);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
}

TEST(Report, RunIsDeterministic) {
  RunOptions o;
  o.precision = 30;
  const auto a = run({"somos-3term", "F23"}, o);
  const auto b = run({"somos-3term", "F23"}, o);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].verdict, b.results[i].verdict);
    EXPECT_EQ(a.results[i].residual, b.results[i].residual);
    EXPECT_EQ(a.results[i].checks, b.results[i].checks);
  }
}
