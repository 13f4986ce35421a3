#include "latticelab/runner.hpp"

#include "latticelab/cusp_forms.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <memory>
#include <thread>

#ifndef LATTICELAB_VERSION
#define LATTICELAB_VERSION "unknown"
#endif

namespace latticelab::registry {
namespace {

using Clock = std::chrono::steady_clock;

struct Attempt {
  RecordResult result;
  std::optional<unsigned> shortfall;  // working digits a retry would need
};

RecordResult skeleton(const IdentityRecord& record, const EvalContext& ctx) {
  RecordResult r;
  r.id = record.id;
  r.kind = record.kind;
  r.status = record.status;
  r.anchor = record.anchor;
  r.tolerance_digits = ctx.tolerance_digits;
  return r;
}

Verdict verdict_for(RecordKind kind, bool pass) {
  if (kind == RecordKind::numeric_conjecture) return pass ? Verdict::conjecture_consistent : Verdict::inconsistent;
  return pass ? Verdict::pass : Verdict::fail;
}

Attempt attempt(const IdentityRecord& record, const EvalContext& ctx, bool mutated) {
  Attempt a;
  a.result = skeleton(record, ctx);
  const auto t0 = Clock::now();
  try {
    const Evaluator& eval = (mutated && record.evaluate_mutated) ? record.evaluate_mutated : record.evaluate;
    if (!eval) throw DomainError("record has no evaluator");
    Outcome o = eval(ctx);
    a.result.verdict = verdict_for(record.kind, o.pass);
    a.result.digits = o.digits;
    a.result.residual = std::move(o.residual);
    a.result.first_mismatch = std::move(o.first_mismatch);
    a.result.coefficients_checked = o.coefficients_checked;
    a.result.detail = std::move(o.detail);
    a.result.checks = std::move(o.checks);
  } catch (const PrecisionShortfall& e) {
    a.result.verdict = Verdict::error;
    a.result.detail = e.what();
    a.shortfall = e.needed_digits();
  } catch (const std::exception& e) {
    a.result.verdict = Verdict::error;
    a.result.detail = e.what();
  }
  a.result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return a;
}

EvalContext context_for(const IdentityRecord& record, const RunOptions& opts) {
  EvalContext ctx;
  ctx.precision = opts.precision;
  ctx.n_terms = opts.n_terms;
  ctx.tolerance_digits = opts.tolerance_digits.value_or(record.tolerance_digits);
  return ctx;
}

// Shared with the evaluation thread, which may outlive the runner on timeout.
struct Job {
  IdentityRecord record;
  EvalContext ctx;
  bool mutated = false;
  std::promise<Attempt> done;
};

}  // namespace

std::string library_version() { return LATTICELAB_VERSION; }

RecordResult evaluate_record(const IdentityRecord& record, const EvalContext& ctx, bool mutated) {
  return attempt(record, ctx, mutated).result;
}

VerificationReport run_records(const std::vector<IdentityRecord>& all, const RunOptions& opts) {
  if (opts.precision < 10) throw DomainError("precision must be at least 10 digits");
  PrecisionPolicy policy;
  policy.digits = opts.precision;
  policy.guard = opts.guard_digits;

  std::vector<IdentityRecord> records;
  for (const auto& r : all) {
    if (!opts.mutated || r.evaluate_mutated) records.push_back(r);
  }

  VerificationReport report;
  report.version = library_version();
  report.precision = policy.digits;
  report.guard_digits = policy.guard_digits();
  report.n_terms = opts.n_terms;
  report.mutated = opts.mutated;

  std::vector<Attempt> attempts(records.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> timed_out{false};
  const auto timeout = std::chrono::duration<double>(opts.timeout_secs);

  WorkingPrecision wp(policy);
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      auto job = std::make_shared<Job>();
      job->record = records[i];
      job->ctx = context_for(records[i], opts);
      job->mutated = opts.mutated;
      auto future = job->done.get_future();
      std::thread([job] { job->done.set_value(attempt(job->record, job->ctx, job->mutated)); }).detach();
      if (future.wait_for(timeout) == std::future_status::ready) {
        attempts[i] = future.get();
      } else {
        Attempt a;
        a.result = skeleton(records[i], context_for(records[i], opts));
        a.result.verdict = Verdict::timeout;
        a.result.detail = "no result after " + std::to_string(opts.timeout_secs) + " s";
        a.result.seconds = opts.timeout_secs;
        attempts[i] = std::move(a);
        timed_out = true;
      }
    }
  };
  const unsigned n_workers = std::max(1u, std::min<unsigned>(opts.parallelism, static_cast<unsigned>(records.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Records that ran out of guard digits are repeated one at a time at the
  // precision they asked for. Changing the precision while a timed-out
  // evaluation is still running would corrupt it, so the retry is skipped then.
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!attempts[i].shortfall) continue;
    const unsigned needed = *attempts[i].shortfall;
    if (timed_out) {
      attempts[i].result.detail += "; retry at " + std::to_string(needed) + " digits skipped while timed-out work is running";
      continue;
    }
    WorkingPrecision higher(needed);
    const double first_seconds = attempts[i].result.seconds;
    Attempt again = attempt(records[i], context_for(records[i], opts), opts.mutated);
    again.result.seconds += first_seconds;
    again.result.detail += (again.result.detail.empty() ? "" : "; ") + std::string("retried at ") +
                           std::to_string(needed) + " working digits";
    attempts[i] = std::move(again);
  }

  for (auto& a : attempts) report.results.push_back(std::move(a.result));
  return report;
}

VerificationReport run(const std::vector<std::string>& selectors, const RunOptions& opts) {
  return run_records(select_records(selectors), opts);
}

}  // namespace latticelab::registry
