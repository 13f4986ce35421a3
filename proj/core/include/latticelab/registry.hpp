#pragma once

// Catalog of executable identities. Each record binds an identity to an
// evaluator that computes both sides with the other modules and decides the
// outcome under the record's tolerance.

#include "latticelab/bigreal.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latticelab::registry {

using latticelab::to_string;

enum class RecordKind { coefficient_exact, numeric_theorem, numeric_conjecture };
enum class RecordStatus { proved, conjectural };

std::string to_string(RecordKind k);
std::string to_string(RecordStatus s);
RecordKind parse_record_kind(std::string_view text);
RecordStatus parse_record_status(std::string_view text);

struct EvalContext {
  unsigned precision = 40;
  std::size_t n_terms = 0;  // coefficient records: 0 means max(500, Sturm bound)
  int tolerance_digits = 25;

  /// Digits requested from quadratures and series: P + 5, inside the guard.
  int target_digits() const { return static_cast<int>(precision) + 5; }
};

/// One compared pair of values. Decimal strings carry the full working precision.
struct CheckLine {
  std::string label;
  std::string lhs;
  std::string rhs;
  std::string residual;  // lhs - rhs, signed
  double digits = 0;
  bool pass = false;

  friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

struct Outcome {
  bool pass = false;
  std::optional<double> digits;  // worst agreement over the numeric checks
  std::string residual;          // residual of the worst check
  std::optional<std::string> first_mismatch;
  std::size_t coefficients_checked = 0;
  std::string detail;
  std::vector<CheckLine> checks;
};

using Evaluator = std::function<Outcome(const EvalContext&)>;

struct IdentityRecord {
  std::string id;
  RecordKind kind = RecordKind::numeric_theorem;
  RecordStatus status = RecordStatus::proved;
  std::string anchor;  // the identity in formula form
  std::string lhs;
  std::string rhs;
  int tolerance_digits = 25;
  unsigned level = 0;   // coefficient records
  unsigned weight = 0;  // coefficient records
  Evaluator evaluate;
  Evaluator evaluate_mutated;  // coefficient records: one coefficient perturbed
};

/// |lhs - rhs| <= 10^{-tolerance} max(1, |lhs|).
CheckLine numeric_check(std::string label, const BigReal& lhs, const BigReal& rhs, int tolerance_digits);

/// Passes iff every line passes; digits and residual come from the worst line.
Outcome combine_checks(std::vector<CheckLine> lines);

/// Every record, in a fixed order.
const std::vector<IdentityRecord>& registry_catalog();

/// Throws DomainError for an unknown id.
const IdentityRecord& find_record(std::string_view id);

/// "all", a kind name ("coefficient-exact", "conjecture", ...) or explicit ids.
std::vector<IdentityRecord> select_records(const std::vector<std::string>& selectors);

}  // namespace latticelab::registry
