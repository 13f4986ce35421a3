// latticelab: command-line front end for expansions, lattice sums, Mahler
// measures, L-values, lacunarity scans and the identity registry.

#include "latticelab/config.hpp"
#include "latticelab/cusp_forms.hpp"
#include "latticelab/eta_expression.hpp"
#include "latticelab/lattice_sums.hpp"
#include "latticelab/mahler.hpp"
#include "latticelab/runner.hpp"
#include "latticelab/two_dim_sums.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace latticelab;

namespace {

struct Common {
  std::optional<unsigned> precision;
  std::string config_path;
};

RunnerConfig resolve_config(const Common& c) {
  RunnerConfig cfg;
  if (!c.config_path.empty()) cfg = load_config_file(c.config_path, cfg);
  cfg = apply_environment(cfg);
  if (c.precision) cfg.precision = *c.precision;
  return cfg;
}

PrecisionPolicy policy_of(const RunnerConfig& cfg) {
  PrecisionPolicy p;
  p.digits = cfg.precision;
  p.guard = cfg.guard_digits;
  return p;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--precision,-p", c.precision, "Decimal digits P (working precision adds guard digits)")
      ->check(CLI::Range(10u, 100000u));
  cmd->add_option("--config", c.config_path, "key = value settings file")->check(CLI::ExistingFile);
}

int cmd_expand(const std::string& expr, std::size_t terms, const std::string& format) {
  const auto x = series::parse_eta_expression(expr);
  const auto s = series::expand_expression(x, terms);
  if (format == "json") {
    std::cout << nlohmann::json{{"expression", x.str()},
                                {"numerator", series::to_json(s.numerator)},
                                {"denominator", s.denominator.str()}}
                     .dump(2)
              << "\n";
    return 0;
  }
  const std::int64_t start = x.min_lead24();
  std::cout << "# " << x.str() << ", " << terms << " coefficients from q^" << to_string(BigRational(start, 24)) << "\n";
  for (std::size_t k = 0; k < terms; ++k) {
    const std::int64_t e = start + 24 * static_cast<std::int64_t>(k);
    std::cout << to_string(BigRational(e, 24)) << " " << to_string(s.coefficient_at(e)) << "\n";
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& ids, const Common& common, std::size_t terms,
               std::optional<unsigned> parallelism, std::optional<double> timeout, const std::string& format,
               bool mutated, const std::string& output) {
  const auto fmt = registry::parse_report_format(format);
  const RunnerConfig cfg = resolve_config(common);
  registry::RunOptions opts;
  opts.precision = cfg.precision;
  opts.guard_digits = cfg.guard_digits;
  opts.parallelism = parallelism.value_or(cfg.parallelism);
  opts.timeout_secs = timeout.value_or(cfg.timeout_secs);
  opts.n_terms = terms;
  opts.mutated = mutated;
  std::vector<registry::IdentityRecord> records;
  try {
    records = registry::select_records(ids);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  const auto report = registry::run_records(records, opts);
  const std::string text = registry::report_emit(report, fmt);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw ParseError("cannot write '" + output + "'");
    out << text;
  }
  const int code = report.exit_code();
  for (const auto& r : report.results) {
    if (r.verdict == registry::Verdict::timeout) {
      // Timed-out evaluations are still running on detached threads; leave
      // without running static destructors underneath them.
      std::cout.flush();
      std::fflush(nullptr);
      std::_Exit(code);
    }
  }
  return code;
}

int cmd_sum(const std::vector<std::string>& words, const Common& common, int cubes) {
  const RunnerConfig cfg = resolve_config(common);
  WorkingPrecision wp(policy_of(cfg));
  const int digits = static_cast<int>(cfg.precision);
  if (!words.empty() && words.front() != "F" && words.front() != "f") {
    // Two-dimensional sums: sum <odd-odd|odd-even-alt|log-series> <x>
    if (words.size() != 2) throw ParseError("expected 'sum <variant> <x>'");
    const TwoDimSumSpec spec{parse_two_dim_variant(words[0]), to_real(parse_rational(words[1]))};
    std::cout << to_string(spec.variant) << "(" << words[1] << ") = " << to_string(sum2d(spec, digits + 5), digits)
              << "\n";
    return 0;
  }
  const LatticeSpec spec = parse_lattice_spec(words);
  std::cout << spec.str() << " = " << to_string(F_integral(spec, digits + 5), digits) << "\n";
  if (cubes > 0) {
    std::cout << spec.str() << " by cubes R=" << cubes << " ~ " << std::setprecision(12) << F_cubes(spec, cubes)
              << "\n";
  }
  return 0;
}

MahlerRoute parse_route(const std::string& s) {
  if (s == "auto") return MahlerRoute::automatic;
  if (s == "hyper") return MahlerRoute::hypergeometric;
  if (s == "jensen") return MahlerRoute::jensen;
  if (s == "ncomb") return MahlerRoute::n_combination;
  throw ParseError("unknown route '" + s + "'");
}

int cmd_mahler(const std::string& family, const std::string& recipe, const std::string& route, const Common& common) {
  const RunnerConfig cfg = resolve_config(common);
  WorkingPrecision wp(policy_of(cfg));
  const int digits = static_cast<int>(cfg.precision);
  const MahlerArg a = mahler_arg(recipe);
  const BigReal v = mahler_measure(parse_mahler_family(family), a.value, parse_route(route));
  std::cout << family << "(" << a.recipe << ") = " << to_string(v, digits) << "\n";
  std::cout << "argument " << to_string(a.value, digits) << "\n";
  return 0;
}

int cmd_lseries(const std::string& what, const Common& common, std::size_t terms) {
  const RunnerConfig cfg = resolve_config(common);
  WorkingPrecision wp(policy_of(cfg));
  const int digits = static_cast<int>(cfg.precision);
  series::EtaExpression f;
  bool named = false;
  for (const auto& c : cusp_form_catalog()) named = named || c.id == what;
  f = named ? cusp_form(what) : series::parse_eta_expression(what);
  const auto r = cusp_L2_detailed(f, digits + 5);
  std::cout << "L(f,2) = " << to_string(r.value, digits) << "\n";
  std::cout << "digits lost to cancellation " << std::setprecision(3) << r.digits_lost << "\n";
  if (terms > 0) {
    const auto p = cusp_partial_sum(f, terms);
    std::cout << "sum_{n<=" << p.n_terms << "} a_n/n^2 = " << to_string(p.value, 20) << "  (tail estimate "
              << to_string(p.tail_estimate, 3) << ")\n";
  }
  return 0;
}

int cmd_scan(const std::string& expr, std::size_t terms, std::size_t window, const std::string& format) {
  const auto p = series::lacunarity_scan(series::parse_eta_expression(expr), terms, window);
  if (format == "json") {
    std::cout << series::to_json(p).dump(2) << "\n";
  } else {
    std::cout << series::to_csv(p);
  }
  return 0;
}

int cmd_list(const std::string& kind) {
  for (const auto& r : registry::registry_catalog()) {
    if (!kind.empty() && r.kind != registry::parse_record_kind(kind)) continue;
    std::cout << std::left << std::setw(22) << r.id << " " << std::setw(19) << to_string(r.kind) << " tol "
              << std::setw(3) << r.tolerance_digits << " " << r.anchor << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eta-product identities, lattice sums and Mahler measures at high precision"};
  app.set_version_flag("--version", registry::library_version());
  app.require_subcommand(1);

  std::string expr;
  std::size_t terms = 100;
  std::string format = "text";
  auto* expand = app.add_subcommand("expand", "Exact q-expansion of an eta-quotient combination");
  expand->add_option("expression", expr, "e.g. \"e2 e6 e10 e30 - e1 e12 e15 e20\"")->required();
  expand->add_option("--terms,-n", terms, "Number of coefficients")->check(CLI::PositiveNumber);
  expand->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  Common common;
  std::vector<std::string> ids;
  std::size_t verify_terms = 0;
  std::optional<unsigned> parallelism;
  std::optional<double> timeout;
  std::string report_format = "human";
  bool mutated = false;
  std::string output;
  auto* verify = app.add_subcommand("verify", "Run catalog records and report verdicts");
  verify->add_option("ids", ids, "Record ids, a kind (coefficient-exact, theorem, conjecture) or all")->required();
  add_common(verify, common);
  verify->add_option("--terms,-n", verify_terms, "Coefficient count for coefficient-exact records");
  verify->add_option("--format", report_format, "json, csv or human");
  verify->add_option("--parallelism,-j", parallelism, "Concurrent records")->check(CLI::PositiveNumber);
  verify->add_option("--timeout", timeout, "Seconds per record")->check(CLI::PositiveNumber);
  verify->add_flag("--mutated", mutated, "Run the perturbed variants of coefficient-exact records");
  verify->add_option("--output,-o", output, "Write the report to a file");

  std::vector<std::string> sum_words;
  int cubes = 0;
  auto* sum = app.add_subcommand("sum", "F a b c d, F b c, or a two-dimensional sum <variant> <x>");
  sum->add_option("spec", sum_words, "F 1 2 | F 1 2 5 10 | odd-odd 9")->required();
  sum->add_option("--cubes", cubes, "Also sum over the cube |n_i| <= R in double precision");
  add_common(sum, common);

  std::string family;
  std::string recipe;
  std::string route = "auto";
  auto* mahler = app.add_subcommand("mahler", "Mahler measure m, n or g at a radical recipe");
  mahler->add_option("family", family, "m, n or g")->required()->check(CLI::IsMember({"m", "n", "g"}));
  mahler->add_option("argument", recipe, "e.g. \"4i\" or \"t=12^(1/4); (4-2t-2t^2+t^3)/sqrt(2)\"")->required();
  mahler->add_option("--route", route, "auto, hyper, jensen or ncomb")
      ->check(CLI::IsMember({"auto", "hyper", "jensen", "ncomb"}));
  add_common(mahler, common);

  std::string form;
  std::size_t l_terms = 0;
  auto* lseries = app.add_subcommand("lseries", "L(f,2) for a weight-2 cusp form (f30, f17 or an eta expression)");
  lseries->add_option("form", form, "Catalog id or eta expression")->required();
  lseries->add_option("--terms,-n", l_terms, "Also print the partial Dirichlet sum through n terms");
  add_common(lseries, common);

  std::string scan_expr;
  std::size_t scan_terms = 10000;
  std::size_t window = 1000;
  std::string scan_format = "csv";
  auto* scan = app.add_subcommand("scan-lacunarity", "Nonzero-coefficient density per window");
  scan->add_option("expression", scan_expr)->required();
  scan->add_option("--terms,-n", scan_terms)->check(CLI::PositiveNumber);
  scan->add_option("--window,-w", window)->check(CLI::PositiveNumber);
  scan->add_option("--format", scan_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string list_kind;
  auto* list = app.add_subcommand("list", "List catalog records");
  list->add_option("--kind", list_kind, "coefficient-exact, numeric-theorem or numeric-conjecture");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) return cmd_expand(expr, terms, format);
    if (*verify) {
      return cmd_verify(ids, common, verify_terms, parallelism, timeout, report_format, mutated, output);
    }
    if (*sum) return cmd_sum(sum_words, common, cubes);
    if (*mahler) return cmd_mahler(family, recipe, route, common);
    if (*lseries) return cmd_lseries(form, common, l_terms);
    if (*scan) return cmd_scan(scan_expr, scan_terms, window, scan_format);
    if (*list) return cmd_list(list_kind);
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
