#include "latticelab/report.hpp"

#include <iomanip>
#include <sstream>

namespace latticelab::registry {
namespace {

nlohmann::json optional_json(const std::optional<std::string>& s) { return s ? nlohmann::json(*s) : nlohmann::json(); }
nlohmann::json optional_json(const std::optional<double>& d) { return d ? nlohmann::json(*d) : nlohmann::json(); }

std::string fixed(double x, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << x;
  return os.str();
}

std::string digits_text(const std::optional<double>& d) { return d ? fixed(*d, 1) : "exact"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void human_record(std::ostringstream& os, const RecordResult& r, bool conjecture) {
  os << "  " << std::left << std::setw(22) << r.id << " " << std::setw(22) << to_string(r.verdict) << " "
     << std::right << std::setw(6) << digits_text(r.digits) << "  " << std::setw(8) << fixed(r.seconds, 2) << " s\n";
  if (r.first_mismatch) os << "      first mismatch " << *r.first_mismatch << "\n";
  if (conjecture || r.verdict != Verdict::pass) {
    if (!r.residual.empty()) os << "      residual " << r.residual << "\n";
  }
  if (r.verdict != Verdict::pass && r.verdict != Verdict::conjecture_consistent && !r.detail.empty()) {
    os << "      " << r.detail << "\n";
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::error:
      return "ERROR";
    case Verdict::timeout:
      return "TIMEOUT";
    case Verdict::conjecture_consistent:
      return "CONJECTURE-CONSISTENT";
    case Verdict::inconsistent:
      return "INCONSISTENT";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::error, Verdict::timeout, Verdict::conjecture_consistent,
                    Verdict::inconsistent}) {
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown verdict '" + std::string(text) + "'");
}

int VerificationReport::exit_code() const {
  for (const auto& r : results) {
    if (r.kind != RecordKind::numeric_conjecture && r.verdict != Verdict::pass) return 1;
  }
  return 0;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "human") return ReportFormat::human;
  throw ParseError("unknown report format '" + std::string(text) + "' (expected json, csv or human)");
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& x : r.results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : x.checks) {
      checks.push_back({{"label", c.label},
                        {"lhs", c.lhs},
                        {"rhs", c.rhs},
                        {"residual", c.residual},
                        {"digits", c.digits},
                        {"pass", c.pass}});
    }
    records.push_back({{"id", x.id},
                       {"kind", to_string(x.kind)},
                       {"status", to_string(x.status)},
                       {"anchor", x.anchor},
                       {"verdict", to_string(x.verdict)},
                       {"tolerance_digits", x.tolerance_digits},
                       {"digits", optional_json(x.digits)},
                       {"residual", x.residual},
                       {"first_mismatch", optional_json(x.first_mismatch)},
                       {"coefficients_checked", x.coefficients_checked},
                       {"detail", x.detail},
                       {"seconds", x.seconds},
                       {"checks", checks}});
  }
  return {{"schema_version", r.schema_version},
          {"version", r.version},
          {"precision", r.precision},
          {"guard_digits", r.guard_digits},
          {"n_terms", r.n_terms},
          {"seed", r.seed},
          {"mutated", r.mutated},
          {"records", records}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != VerificationReport::kSchemaVersion) {
    throw ParseError("unsupported report schema version " + std::to_string(r.schema_version));
  }
  r.version = j.at("version").get<std::string>();
  r.precision = j.at("precision").get<unsigned>();
  r.guard_digits = j.at("guard_digits").get<unsigned>();
  r.n_terms = j.at("n_terms").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.mutated = j.at("mutated").get<bool>();
  for (const auto& x : j.at("records")) {
    RecordResult res;
    res.id = x.at("id").get<std::string>();
    res.kind = parse_record_kind(x.at("kind").get<std::string>());
    res.status = parse_record_status(x.at("status").get<std::string>());
    res.anchor = x.at("anchor").get<std::string>();
    res.verdict = parse_verdict(x.at("verdict").get<std::string>());
    res.tolerance_digits = x.at("tolerance_digits").get<int>();
    if (!x.at("digits").is_null()) res.digits = x.at("digits").get<double>();
    res.residual = x.at("residual").get<std::string>();
    if (!x.at("first_mismatch").is_null()) res.first_mismatch = x.at("first_mismatch").get<std::string>();
    res.coefficients_checked = x.at("coefficients_checked").get<std::size_t>();
    res.detail = x.at("detail").get<std::string>();
    res.seconds = x.at("seconds").get<double>();
    for (const auto& c : x.at("checks")) {
      res.checks.push_back(CheckLine{c.at("label").get<std::string>(), c.at("lhs").get<std::string>(),
                                     c.at("rhs").get<std::string>(), c.at("residual").get<std::string>(),
                                     c.at("digits").get<double>(), c.at("pass").get<bool>()});
    }
    r.results.push_back(std::move(res));
  }
  return r;
}

std::string report_emit(const VerificationReport& r, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::json:
      os << to_json(r).dump(2) << "\n";
      break;
    case ReportFormat::csv:
      os << "id,kind,verdict,digits,seconds\n";
      for (const auto& x : r.results) {
        os << csv_field(x.id) << "," << to_string(x.kind) << "," << to_string(x.verdict) << ","
           << (x.digits ? fixed(*x.digits, 2) : "") << "," << fixed(x.seconds, 3) << "\n";
      }
      break;
    case ReportFormat::human: {
      os << "latticelab " << r.version << "  precision " << r.precision << " (+" << r.guard_digits << " guard)";
      if (r.n_terms) os << "  n_terms " << r.n_terms;
      if (r.mutated) os << "  MUTATED VARIANTS";
      os << "\n\n";
      std::size_t gating = 0;
      std::size_t passed = 0;
      std::size_t conjectures = 0;
      std::size_t consistent = 0;
      os << "Identities\n";
      for (const auto& x : r.results) {
        if (x.kind == RecordKind::numeric_conjecture) continue;
        ++gating;
        if (x.verdict == Verdict::pass) ++passed;
        human_record(os, x, false);
      }
      os << "\nConjectures (numerical evidence, not gating)\n";
      for (const auto& x : r.results) {
        if (x.kind != RecordKind::numeric_conjecture) continue;
        ++conjectures;
        if (x.verdict == Verdict::conjecture_consistent) ++consistent;
        human_record(os, x, true);
      }
      os << "\n" << passed << "/" << gating << " identities pass, " << consistent << "/" << conjectures
         << " conjectures consistent\n";
      break;
    }
  }
  return os.str();
}

}  // namespace latticelab::registry
