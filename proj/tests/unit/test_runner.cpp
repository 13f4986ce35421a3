#include "latticelab/cusp_forms.hpp"
#include "latticelab/runner.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace latticelab;
using namespace latticelab::registry;

namespace {

IdentityRecord record(std::string id, Evaluator e, RecordKind kind = RecordKind::numeric_theorem) {
  IdentityRecord r;
  r.id = std::move(id);
  r.kind = kind;
  r.anchor = "x = x";
  r.evaluate = std::move(e);
  return r;
}

Outcome passing(const EvalContext&) { return combine_checks({numeric_check("one", BigReal(1), BigReal(1), 20)}); }

}  // namespace

TEST(Runner, PassFailAndError) {
  RunOptions o;
  o.precision = 20;
  const auto rep = run_records(
      {record("ok", passing),
       record("bad", [](const EvalContext&) { return combine_checks({numeric_check("x", BigReal(1), BigReal(2), 10)}); }),
       record("boom", [](const EvalContext&) -> Outcome { throw DomainError("broken"); })},
      o);
  ASSERT_EQ(rep.results.size(), 3U);
  EXPECT_EQ(rep.results[0].verdict, Verdict::pass);
  EXPECT_EQ(rep.results[1].verdict, Verdict::fail);
  EXPECT_EQ(rep.results[2].verdict, Verdict::error);
  EXPECT_EQ(rep.results[2].detail, "broken");
  EXPECT_EQ(rep.exit_code(), 1);
}

TEST(Runner, ConjectureFailureDoesNotGate) {
  RunOptions o;
  o.precision = 20;
  const auto rep = run_records(
      {record("ok", passing),
       record("guess", [](const EvalContext&) { return combine_checks({numeric_check("x", BigReal(1), BigReal(2), 10)}); },
              RecordKind::numeric_conjecture)},
      o);
  EXPECT_EQ(rep.results[1].verdict, Verdict::inconsistent);
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Runner, Timeout) {
  RunOptions o;
  o.precision = 20;
  o.timeout_secs = 0.1;
  const auto rep = run_records({record("slow", [](const EvalContext& c) {
                                  std::this_thread::sleep_for(std::chrono::milliseconds(600));
                                  return passing(c);
                                })},
                               o);
  EXPECT_EQ(rep.results[0].verdict, Verdict::timeout);
  EXPECT_EQ(rep.exit_code(), 1);
  std::this_thread::sleep_for(std::chrono::milliseconds(800));
}

TEST(Runner, ShortfallIsRetriedAtHigherPrecision) {
  RunOptions o;
  o.precision = 20;
  auto seen = std::make_shared<std::vector<unsigned>>();
  const auto rep = run_records({record("needs-more", [seen](const EvalContext& c) {
                                  seen->push_back(working_digits());
                                  if (working_digits() < 60) throw PrecisionShortfall("short", 60);
                                  return passing(c);
                                })},
                               o);
  EXPECT_EQ(rep.results[0].verdict, Verdict::pass);
  ASSERT_EQ(seen->size(), 2U);
  EXPECT_GE(seen->at(1), 60U);
  EXPECT_NE(rep.results[0].detail.find("retried at 60"), std::string::npos);
}

TEST(Runner, PrecisionAndGuardReported) {
  RunOptions o;
  o.precision = 30;
  o.guard_digits = 7;
  o.parallelism = 3;
  const auto rep = run_records({record("a", passing), record("b", passing), record("c", passing)}, o);
  EXPECT_EQ(rep.precision, 30U);
  EXPECT_EQ(rep.guard_digits, 7U);
  EXPECT_EQ(rep.results[2].id, "c");
  o.precision = 5;
  EXPECT_THROW(run_records({}, o), DomainError);
}

TEST(Runner, MutatedRunsOnlyRecordsWithVariants) {
  RunOptions o;
  o.precision = 20;
  o.mutated = true;
  auto r = record("with", passing, RecordKind::coefficient_exact);
  r.evaluate_mutated = [](const EvalContext&) { return Outcome{}; };
  const auto rep = run_records({r, record("without", passing)}, o);
  ASSERT_EQ(rep.results.size(), 1U);
  EXPECT_EQ(rep.results[0].verdict, Verdict::fail);
  EXPECT_TRUE(rep.mutated);
}
