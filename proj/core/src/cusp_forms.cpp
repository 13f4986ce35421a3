#include "latticelab/cusp_forms.hpp"

#include "latticelab/quadrature.hpp"
#include "latticelab/theta_numeric.hpp"

#include <cmath>
#include <map>

namespace latticelab {
namespace {

// Evaluates every monomial of f at t, sharing eta values across monomials.
std::vector<BigReal> monomial_values(const series::EtaExpression& f, const BigReal& t) {
  // Summed in the log domain: near t = 0 individual eta values leave any
  // exponent range while the quotients stay harmless.
  std::map<unsigned, BigReal> log_eta;
  for (const auto& m : f.terms()) {
    for (const auto& fac : m.factors) {
      if (!log_eta.count(fac.scale)) log_eta.emplace(fac.scale, log_eta_numeric(BigReal(fac.scale) * t));
    }
  }
  std::vector<BigReal> out;
  for (const auto& m : f.terms()) {
    BigReal e = 0;
    for (const auto& fac : m.factors) e += fac.power * log_eta.at(fac.scale);
    out.push_back(to_real(m.coefficient) * exp(e));
  }
  return out;
}

}  // namespace

BigReal eta_expression_numeric(const series::EtaExpression& f, const BigReal& t) {
  BigReal s = 0;
  for (const auto& v : monomial_values(f, t)) s += v;
  return s;
}

CuspL2Result cusp_L2_detailed(const series::EtaExpression& f, int target_digits) {
  if (f.empty()) throw DomainError("cusp_L2 of the empty expression");
  QuadratureOptions opts;
  opts.target_digits = target_digits;
  auto signed_part = [&f](const BigReal& t) { return BigReal(t * eta_expression_numeric(f, t)); };
  auto magnitude_part = [&f](const BigReal& t) {
    BigReal s = 0;
    for (const auto& v : monomial_values(f, t)) s += abs(v);
    return BigReal(t * s);
  };
  const BigReal c = 4 * pi() * pi();
  CuspL2Result r;
  r.value = c * require_converged(integrate_exp_sinh(Integrand(signed_part), BigReal(0), opts), "cusp_L2").value;
  QuadratureOptions rough = opts;
  rough.target_digits = 8;
  r.magnitude = c * integrate_exp_sinh(Integrand(magnitude_part), BigReal(0), rough).value;
  if (r.value == 0) throw ConvergenceError("cusp_L2 integral vanished to working precision");
  r.digits_lost = std::max(0.0, static_cast<double>(log10(r.magnitude / abs(r.value))));
  const unsigned guard = working_digits() > static_cast<unsigned>(target_digits)
                             ? working_digits() - static_cast<unsigned>(target_digits)
                             : 0U;
  if (r.digits_lost > guard) {
    const auto need = static_cast<unsigned>(target_digits + std::ceil(r.digits_lost) + 10);
    throw PrecisionShortfall("cusp_L2 lost " + std::to_string(r.digits_lost) +
                                 " digits to cancellation between monomials; rerun with at least " +
                                 std::to_string(need) + " working digits",
                             need);
  }
  return r;
}

BigReal cusp_L2(const series::EtaExpression& f, int target_digits) {
  return cusp_L2_detailed(f, target_digits).value;
}

CuspPartialSum cusp_partial_sum(const series::EtaExpression& f, std::size_t n_terms) {
  if (f.min_lead24() != 24) throw DomainError("partial Dirichlet sum needs an expansion starting at q^1");
  const auto ex = series::expand_expression(f, n_terms);
  CuspPartialSum out;
  out.value = 0;
  for (std::size_t k = 0; k < n_terms; ++k) {
    const std::int64_t n = static_cast<std::int64_t>(k) + 1;
    const BigRational a = ex.coefficient_at(24 * n);
    if (a != 0) out.value += to_real(a) / (BigReal(n) * n);
  }
  const BigReal N(static_cast<double>(n_terms));
  out.tail_estimate = 4 * (log(N) + 2) / sqrt(N);
  out.n_terms = n_terms;
  return out;
}

std::vector<NamedCuspForm> cusp_form_catalog() {
  return {
      {"f30", "e3*e5*e6*e10 - e1*e2*e15*e30", 30},
      {"f17", "e1*e4^2*e34^5/(e2*e17*e68^2) - e2^5*e17*e68^2/(e1*e4^2*e34)", 68},
  };
}

series::EtaExpression cusp_form(const std::string& id) {
  for (const auto& c : cusp_form_catalog()) {
    if (c.id == id) return series::parse_eta_expression(c.expression);
  }
  throw ParseError("unknown cusp form '" + id + "' (known: f30, f17)");
}

}  // namespace latticelab
