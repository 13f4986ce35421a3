#pragma once

// Runs catalog records concurrently with per-record timeouts.
//
// The working precision is process-wide, so the runner sets it once before
// any worker starts. A record that times out keeps running on a detached
// thread; its result is discarded.

#include "latticelab/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latticelab::registry {

struct RunOptions {
  unsigned precision = 40;
  std::optional<unsigned> guard_digits;
  std::size_t n_terms = 0;        // 0: each record's default
  std::optional<int> tolerance_digits;  // overrides every record's tolerance
  unsigned parallelism = 1;
  double timeout_secs = 600;
  bool mutated = false;  // run the perturbed variants of coefficient records
};

/// Evaluates one record on the calling thread at the current working
/// precision. Evaluator exceptions become ERROR results.
RecordResult evaluate_record(const IdentityRecord& record, const EvalContext& ctx, bool mutated = false);

VerificationReport run_records(const std::vector<IdentityRecord>& records, const RunOptions& opts);

/// Selectors as in select_records ("all", a kind, or ids).
VerificationReport run(const std::vector<std::string>& selectors, const RunOptions& opts);

/// Library version string.
std::string library_version();

}  // namespace latticelab::registry
