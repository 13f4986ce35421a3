#include "latticelab/registry.hpp"

#include <algorithm>
#include <cmath>

namespace latticelab::registry {

std::string to_string(RecordKind k) {
  switch (k) {
    case RecordKind::coefficient_exact:
      return "coefficient-exact";
    case RecordKind::numeric_theorem:
      return "numeric-theorem";
    case RecordKind::numeric_conjecture:
      return "numeric-conjecture";
  }
  return "?";
}

std::string to_string(RecordStatus s) {
  return s == RecordStatus::proved ? "proved" : "conjectural";
}

RecordKind parse_record_kind(std::string_view text) {
  if (text == "coefficient-exact" || text == "coefficient") return RecordKind::coefficient_exact;
  if (text == "numeric-theorem" || text == "theorem") return RecordKind::numeric_theorem;
  if (text == "numeric-conjecture" || text == "conjecture") return RecordKind::numeric_conjecture;
  throw ParseError("unknown record kind '" + std::string(text) + "'");
}

RecordStatus parse_record_status(std::string_view text) {
  if (text == "proved") return RecordStatus::proved;
  if (text == "conjectural") return RecordStatus::conjectural;
  throw ParseError("unknown record status '" + std::string(text) + "'");
}

CheckLine numeric_check(std::string label, const BigReal& lhs, const BigReal& rhs, int tolerance_digits) {
  const int digits = static_cast<int>(working_digits());
  CheckLine line;
  line.label = std::move(label);
  line.lhs = to_string(lhs, digits);
  line.rhs = to_string(rhs, digits);
  const BigReal residual = lhs - rhs;
  line.residual = to_string(residual, digits);
  line.digits = std::min(agreement_digits(lhs, rhs), static_cast<double>(digits));
  const BigReal scale = abs(lhs) > 1 ? BigReal(abs(lhs)) : BigReal(1);
  line.pass = abs(residual) <= ten_to_minus(tolerance_digits) * scale;
  return line;
}

Outcome combine_checks(std::vector<CheckLine> lines) {
  Outcome out;
  out.pass = !lines.empty();
  const CheckLine* worst = nullptr;
  for (const auto& l : lines) {
    out.pass = out.pass && l.pass;
    if (!worst || l.digits < worst->digits) worst = &l;
  }
  if (worst) {
    out.digits = worst->digits;
    out.residual = worst->residual;
  }
  out.checks = std::move(lines);
  return out;
}

const IdentityRecord& find_record(std::string_view id) {
  for (const auto& r : registry_catalog()) {
    if (r.id == id) return r;
  }
  throw DomainError("unknown record id '" + std::string(id) + "'");
}

std::vector<IdentityRecord> select_records(const std::vector<std::string>& selectors) {
  const auto& all = registry_catalog();
  std::vector<bool> chosen(all.size(), false);
  for (const auto& s : selectors) {
    if (s == "all") {
      std::fill(chosen.begin(), chosen.end(), true);
      continue;
    }
    std::optional<RecordKind> kind;
    try {
      kind = parse_record_kind(s);
    } catch (const ParseError&) {
    }
    bool found = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((kind && all[i].kind == *kind) || all[i].id == s) {
        chosen[i] = true;
        found = true;
      }
    }
    if (!found) throw DomainError("unknown record id '" + s + "'");
  }
  std::vector<IdentityRecord> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (chosen[i]) out.push_back(all[i]);
  }
  return out;
}

}  // namespace latticelab::registry
