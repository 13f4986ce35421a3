#pragma once

// Verification reports and their json / csv / human serializations.

#include "latticelab/registry.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latticelab::registry {

enum class Verdict { pass, fail, error, timeout, conjecture_consistent, inconsistent };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct RecordResult {
  std::string id;
  RecordKind kind = RecordKind::numeric_theorem;
  RecordStatus status = RecordStatus::proved;
  std::string anchor;
  Verdict verdict = Verdict::error;
  int tolerance_digits = 0;
  std::optional<double> digits;
  std::string residual;
  std::optional<std::string> first_mismatch;
  std::size_t coefficients_checked = 0;
  std::string detail;
  double seconds = 0;
  std::vector<CheckLine> checks;

  friend bool operator==(const RecordResult&, const RecordResult&) = default;
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::string version;
  unsigned precision = 40;
  unsigned guard_digits = 14;
  std::size_t n_terms = 0;
  std::uint64_t seed = 0;
  bool mutated = false;
  std::vector<RecordResult> results;

  /// 1 iff some coefficient-exact or theorem record is not PASS.
  int exit_code() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { json, csv, human };

/// Throws ParseError for anything but json, csv, human.
ReportFormat parse_report_format(std::string_view text);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

std::string report_emit(const VerificationReport& r, ReportFormat format);

}  // namespace latticelab::registry
