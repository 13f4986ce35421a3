#include "latticelab/cusp_forms.hpp"
#include "latticelab/eta_expression.hpp"
#include "latticelab/hypergeometric.hpp"
#include "latticelab/lattice_sums.hpp"
#include "latticelab/mahler.hpp"
#include "latticelab/quadrature.hpp"
#include "latticelab/recipe.hpp"
#include "latticelab/registry.hpp"
#include "latticelab/theta2d.hpp"
#include "latticelab/theta_numeric.hpp"
#include "latticelab/two_dim_sums.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latticelab::registry {
namespace {

using series::EtaExpression;
using series::parse_eta_expression;

constexpr std::size_t kMinCoefficients = 500;

std::string mismatch_text(const series::CoefficientMismatch& m) {
  return "q^" + to_string(m.exponent) + ": lhs " + to_string(m.lhs) + ", rhs " + to_string(m.rhs);
}

// Coefficient count for a record: max(500, Sturm) unless overridden.
Outcome coefficient_outcome(const EvalContext& ctx, std::uint64_t sturm,
                            const std::function<series::CoefficientVerdict(std::size_t)>& verify) {
  const std::size_t n = ctx.n_terms ? ctx.n_terms : std::max<std::size_t>(kMinCoefficients, sturm);
  const auto v = verify(n);
  Outcome out;
  out.coefficients_checked = v.checked;
  if (v.first_mismatch) out.first_mismatch = mismatch_text(*v.first_mismatch);
  out.pass = v.pass && n >= sturm;
  std::ostringstream d;
  d << v.checked << " coefficients from q^" << to_string(v.start_exponent) << ", Sturm bound " << sturm;
  if (v.pass && n < sturm) d << "; below the Sturm bound, not a proof";
  out.detail = d.str();
  return out;
}

unsigned expression_weight(const EtaExpression& x) {
  const BigRational w = x.terms().front().weight();
  if (denominator(w) != 1) throw DomainError("identity weight is not an integer");
  return static_cast<unsigned>(numerator(w));
}

// The last right-hand term with its coefficient raised by one.
EtaExpression perturb_last(const EtaExpression& x) {
  auto terms = x.terms();
  terms.back().coefficient += 1;
  return EtaExpression(std::move(terms));
}

IdentityRecord eta_identity(std::string id, std::string anchor, std::string lhs, std::string rhs) {
  IdentityRecord r;
  r.id = std::move(id);
  r.kind = RecordKind::coefficient_exact;
  r.anchor = std::move(anchor);
  r.lhs = lhs;
  r.rhs = rhs;
  const EtaExpression l = parse_eta_expression(lhs);
  const EtaExpression rr = parse_eta_expression(rhs);
  // The least common multiple of the eta scales is a level for the identity.
  r.level = std::lcm(l.scale_lcm(), rr.scale_lcm());
  r.weight = expression_weight(l);
  const std::uint64_t sturm = series::sturm_bound(r.level, r.weight);
  r.evaluate = [l, rr, sturm](const EvalContext& ctx) {
    return coefficient_outcome(ctx, sturm, [&](std::size_t n) { return series::verify_coefficient_identity(l, rr, n); });
  };
  const EtaExpression mutated = perturb_last(rr);
  r.evaluate_mutated = [l, mutated, sturm](const EvalContext& ctx) {
    return coefficient_outcome(ctx, sturm,
                               [&](std::size_t n) { return series::verify_coefficient_identity(l, mutated, n); });
  };
  return r;
}

IdentityRecord theta_identity(std::string id, std::string anchor, std::vector<series::Theta2DFamily> fams,
                              std::string target, unsigned level) {
  IdentityRecord r;
  r.id = std::move(id);
  r.kind = RecordKind::coefficient_exact;
  r.anchor = std::move(anchor);
  std::string desc;
  for (const auto& f : fams) desc += (desc.empty() ? "" : " + ") + to_string(BigRational(f.coefficient)) + " [" + f.label + "]";
  r.lhs = desc;
  r.rhs = target;
  r.level = level;
  const EtaExpression t = parse_eta_expression(target);
  r.weight = expression_weight(t);
  const std::uint64_t sturm = series::sturm_bound(r.level, r.weight);
  r.evaluate = [fams, t, sturm](const EvalContext& ctx) {
    return coefficient_outcome(ctx, sturm, [&](std::size_t n) { return series::verify_theta_identity(fams, t, n); });
  };
  auto mutated = fams;
  mutated.back().coefficient += 1;
  r.evaluate_mutated = [mutated, t, sturm](const EvalContext& ctx) {
    return coefficient_outcome(ctx, sturm,
                               [&](std::size_t n) { return series::verify_theta_identity(mutated, t, n); });
  };
  return r;
}

// The expansion of a normalized cusp form has integer coefficients and
// starts with q.
Outcome integrality_outcome(const EvalContext& ctx, const EtaExpression& f, unsigned level) {
  const std::uint64_t sturm = series::sturm_bound(level, 2);
  const std::size_t n = ctx.n_terms ? ctx.n_terms : std::max<std::size_t>(kMinCoefficients, sturm);
  Outcome out;
  if (f.min_lead24() != 24) {
    out.detail = "expansion does not start at q^1";
    return out;
  }
  const auto s = series::expand_expression(f, n);
  out.pass = true;
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t e = 24 + 24 * static_cast<std::int64_t>(k);
    const BigRational c = s.coefficient_at(e);
    ++out.coefficients_checked;
    const bool ok = denominator(c) == 1 && (k != 0 || c == 1);
    if (!ok) {
      out.pass = false;
      out.first_mismatch = "q^" + std::to_string(k + 1) + ": coefficient " + to_string(c) +
                           (k == 0 ? " (expected 1)" : " (not an integer)");
      break;
    }
  }
  out.detail = std::to_string(out.coefficients_checked) + " coefficients integral, leading coefficient 1";
  return out;
}

IdentityRecord integrality(std::string id, std::string anchor, const NamedCuspForm& form) {
  IdentityRecord r;
  r.id = std::move(id);
  r.kind = RecordKind::coefficient_exact;
  r.anchor = std::move(anchor);
  r.lhs = form.expression;
  r.rhs = "q + sum_{n>=2} a_n q^n with a_n integers";
  r.level = form.level;
  r.weight = 2;
  const EtaExpression f = parse_eta_expression(form.expression);
  const unsigned level = form.level;
  r.evaluate = [f, level](const EvalContext& ctx) { return integrality_outcome(ctx, f, level); };
  auto terms = f.terms();
  terms.front().coefficient /= 2;
  const EtaExpression mutated(std::move(terms));
  r.evaluate_mutated = [mutated, level](const EvalContext& ctx) { return integrality_outcome(ctx, mutated, level); };
  return r;
}

IdentityRecord numeric(std::string id, RecordKind kind, std::string anchor, std::string lhs, std::string rhs,
                       int tolerance, Evaluator eval) {
  IdentityRecord r;
  r.id = std::move(id);
  r.kind = kind;
  r.status = kind == RecordKind::numeric_conjecture ? RecordStatus::conjectural : RecordStatus::proved;
  r.anchor = std::move(anchor);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.tolerance_digits = tolerance;
  r.evaluate = std::move(eval);
  return r;
}

// ---- shared numeric helpers

BigReal pi2() { return pi() * pi(); }

BigReal F(const EvalContext& ctx, BigRational b, BigRational c) {
  return F_integral(LatticeSpec::shorthand(std::move(b), std::move(c)), ctx.target_digits());
}

BigReal F4(const EvalContext& ctx, int a, int b, int c, int d) {
  return F_integral(LatticeSpec::make(a, b, c, d), ctx.target_digits());
}

BigReal m_of(const std::string& recipe) { return mahler_m(mahler_arg(recipe).value); }
BigReal n_of(const std::string& recipe) { return mahler_n(mahler_arg(recipe).value); }
BigReal g_of(int a) { return mahler_g(Complex(a)); }

BigReal rational(long p, long q = 1) { return BigReal(p) / q; }

const char* kTheta9Real = "t=12^(1/4); (4-2t-2t^2+t^3)/sqrt(2)";
const char* kTheta9Imag = "t=12^(1/4); 4i(7+4t+2t^2+t^3)";

BigReal odd_odd(const EvalContext& ctx, int x) {
  return sum2d({TwoDimVariant::odd_odd, BigReal(x)}, ctx.target_digits());
}

// Samples of q used for the modular-equation shadows of the three-term identity.
std::vector<std::pair<std::string, BigReal>> q_samples() {
  return {{"q=1/20", rational(1, 20)},
          {"q=1/10", rational(1, 10)},
          {"q=e^-pi", exp(-pi())},
          {"q=3/10", rational(3, 10)},
          {"q=1/2", rational(1, 2)}};
}

struct UProducts {
  BigReal U;  // u1 u3 u5 u15
  BigReal V;  // (1-u1)(1-u3)(1-u5)(1-u15)
  BigReal A;  // {u3 u5 (1-u1)(1-u15)}^{1/8}
  BigReal B;  // {u1 u15 (1-u3)(1-u5)}^{1/8}
  BigReal left_pair;   // (u1 u15)^{1/8} + {(1-u1)(1-u15)}^{1/8}
  BigReal right_pair;  // (u3 u5)^{1/8} + {(1-u3)(1-u5)}^{1/8}
};

UProducts u_products(const BigReal& q) {
  const auto p = modular_params(q, {1, 3, 5, 15});
  const auto& u1 = p.at(1);
  const auto& u3 = p.at(3);
  const auto& u5 = p.at(5);
  const auto& u15 = p.at(15);
  const BigReal eighth = BigReal(1) / 8;
  UProducts r;
  r.U = u1.u * u3.u * u5.u * u15.u;
  r.V = u1.one_minus_u * u3.one_minus_u * u5.one_minus_u * u15.one_minus_u;
  r.A = pow(u3.u * u5.u * u1.one_minus_u * u15.one_minus_u, eighth);
  r.B = pow(u1.u * u15.u * u3.one_minus_u * u5.one_minus_u, eighth);
  r.left_pair = pow(u1.u * u15.u, eighth) + pow(u1.one_minus_u * u15.one_minus_u, eighth);
  r.right_pair = pow(u3.u * u5.u, eighth) + pow(u3.one_minus_u * u5.one_minus_u, eighth);
  return r;
}

BigReal cbrt2() { return cbrt(BigReal(2)); }

// (9 pi 2^{1/4}/128) int_0^1 ((1-k)^2 + 2 sqrt(2(k+k^3))) / ((1+k)(k+k^3)^{3/4})
//                              * log((1+2k-k^2+2 sqrt(k-k^3))/(1+k^2)) dk
BigReal f18_elementary(int target_digits) {
  EndpointIntegrand f = [](const BigReal& k, const BigReal& from0, const BigReal& from1) {
    const BigReal kk = from0;
    const BigReal k3 = kk * (1 + kk * kk);        // k + k^3
    const BigReal km = kk * from1 * (1 + kk);     // k - k^3
    const BigReal num = from1 * from1 + 2 * sqrt(2 * k3);
    const BigReal den = (1 + kk) * pow(k3, BigReal(3) / 4);
    // 1 + 2k - k^2 + 2 sqrt(k - k^3) = (1 + k^2) + 2k(1 - k) + 2 sqrt(k - k^3)
    const BigReal arg = 1 + (2 * kk * from1 + 2 * sqrt(km)) / (1 + kk * kk);
    (void)k;
    return num / den * log(arg);
  };
  QuadratureOptions opts;
  opts.target_digits = target_digits;
  opts.max_level = 14;
  const auto r = integrate_tanh_sinh(f, BigReal(0), BigReal(1), opts);
  require_converged(r, "elementary integral for F(1,8)");
  return 9 * pi() * pow(BigReal(2), BigReal(1) / 4) / 128 * r.value;
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> c;
  const auto T = RecordKind::numeric_theorem;
  const auto C = RecordKind::numeric_conjecture;

  // ---- coefficient-exact
  c.push_back(eta_identity("somos-3term", "e2 e6 e10 e30 = e1 e12 e15 e20 + e3 e4 e5 e60", "e2 e6 e10 e30",
                           "e1 e12 e15 e20 + e3 e4 e5 e60"));
  c.push_back(eta_identity("ramanujan-deg18", "3 e1 e2 e9 e18 = -e1^2 e2^2 + e1^3 e18^2/e9 + e2^3 e9^2/e18",
                           "3 e1 e2 e9 e18", "-e1^2 e2^2 + e1^3 e18^2/e9 + e2^3 e9^2/e18"));
  c.push_back(theta_identity("theta2d-deg18",
                             "3 e1 e2 e9 e18 = -S(1) + S(9) + T(9), S(x) = sum (-1)^n (2n+1) q^{((2n+1)^2+x(2k+1)^2)/8}, "
                             "T(x) = sum (-1)^{n+k} (2n+1) q^{((2n+1)^2+x(2k)^2)/4}",
                             series::theta_families_degree18(), "3 e1 e2 e9 e18", 18));
  c.push_back(eta_identity("somos-deg28", "28 e4 e7^2 e28 = -7 e1 e7^3 - e1^5 e14^2/(e2^2 e7) + 8 e2^5 e14/e1^2",
                           "28 e4 e7^2 e28", "-7 e1 e7^3 - e1^5 e14^2/(e2^2 e7) + 8 e2^5 e14/e1^2"));
  c.push_back(theta_identity("theta2d-deg28",
                             "28 e4 e7^2 e28 = -7 sum (-1)^{n+k} (2k+1) q^{((6n+1)^2+21(2k+1)^2)/24} "
                             "- sum (6n+1) q^{((6n+1)^2+21(2k+1)^2)/24} "
                             "+ 8 sum (-1)^{n+k} (3n+1) q^{(4(3n+1)^2+7(6k+1)^2)/12}",
                             series::theta_families_degree28(), "28 e4 e7^2 e28", 28));
  c.push_back(eta_identity("somos-deg50",
                           "5 e1 e2 e25 e50 + 2 e1^2 e2 e50 + 2 e1 e2^2 e25 = -e1^2 e2^2 + e1^3 e50^2/e25 + e2^3 e25^2/e50",
                           "5 e1 e2 e25 e50 + 2 e1^2 e2 e50 + 2 e1 e2^2 e25",
                           "-e1^2 e2^2 + e1^3 e50^2/e25 + e2^3 e25^2/e50"));
  c.push_back(eta_identity("somos-deg45", "6 e1 e5 e9 e45 = -e1^2 e5^2 - 2 e3^2 e15^2 - 9 e9^2 e45^2 + e3^4 + 5 e15^4",
                           "6 e1 e5 e9 e45", "-e1^2 e5^2 - 2 e3^2 e15^2 - 9 e9^2 e45^2 + e3^4 + 5 e15^4"));
  c.push_back(eta_identity("somos-4term", "e1 e3 e5 e15 + 2 e2 e6 e10 e30 = e1 e2 e15 e30 + e3 e5 e6 e10",
                           "e1 e3 e5 e15 + 2 e2 e6 e10 e30", "e1 e2 e15 e30 + e3 e5 e6 e10"));
  const auto forms = cusp_form_catalog();
  const auto form = [&](const std::string& id) {
    return *std::find_if(forms.begin(), forms.end(), [&](const NamedCuspForm& f) { return f.id == id; });
  };
  c.push_back(integrality("f30-integrality", "f30 = e3 e5 e6 e10 - e1 e2 e15 e30 = q + O(q^2), integral", form("f30")));
  c.push_back(integrality("f17-integrality",
                          "f17 = e1 e4^2 e34^5/(e2 e17 e68^2) - e2^5 e17 e68^2/(e1 e4^2 e34) = q + O(q^2), integral",
                          form("f17")));

  // ---- numeric theorems
  c.push_back(numeric(
      "u-product-midway", T,
      "2^{1/3} {u1 u3 u5 u15 (1-u1)(1-u3)(1-u5)(1-u15)}^{1/24} = {u3 u5 (1-u1)(1-u15)}^{1/8} + {u1 u15 (1-u3)(1-u5)}^{1/8}",
      "2^{1/3} (U V)^{1/24}", "A + B", 25, [](const EvalContext& ctx) {
        std::vector<CheckLine> lines;
        for (const auto& [label, q] : q_samples()) {
          const auto p = u_products(q);
          lines.push_back(numeric_check(label, cbrt2() * pow(p.U * p.V, BigReal(1) / 24), p.A + p.B,
                                        ctx.tolerance_digits));
        }
        return combine_checks(std::move(lines));
      }));
  c.push_back(numeric(
      "u-eighth-root-product", T,
      "((u1 u15)^{1/8} + {(1-u1)(1-u15)}^{1/8}) ((u3 u5)^{1/8} + {(1-u3)(1-u5)}^{1/8}) = 1, hence "
      "A + B = 1 - (u1 u3 u5 u15)^{1/8} - {(1-u1)(1-u3)(1-u5)(1-u15)}^{1/8}",
      "product of the two pairs; A + B", "1; 1 - U^{1/8} - V^{1/8}", 25, [](const EvalContext& ctx) {
        std::vector<CheckLine> lines;
        const BigReal eighth = BigReal(1) / 8;
        for (const auto& [label, q] : q_samples()) {
          const auto p = u_products(q);
          lines.push_back(numeric_check(label + " product", p.left_pair * p.right_pair, BigReal(1), ctx.tolerance_digits));
          lines.push_back(numeric_check(label + " rearranged", p.A + p.B, 1 - pow(p.U, eighth) - pow(p.V, eighth),
                                        ctx.tolerance_digits));
        }
        return combine_checks(std::move(lines));
      }));
  c.push_back(numeric(
      "u-eighth-root-sum", T,
      "1 - (u1 u3 u5 u15)^{1/8} - {(1-u1)(1-u3)(1-u5)(1-u15)}^{1/8} = 2^{1/3} {u1 u3 u5 u15 (1-u1)(1-u3)(1-u5)(1-u15)}^{1/24}",
      "1 - U^{1/8} - V^{1/8}", "2^{1/3} (U V)^{1/24}", 25, [](const EvalContext& ctx) {
        std::vector<CheckLine> lines;
        const BigReal eighth = BigReal(1) / 8;
        for (const auto& [label, q] : q_samples()) {
          const auto p = u_products(q);
          lines.push_back(numeric_check(label, 1 - pow(p.U, eighth) - pow(p.V, eighth),
                                        cbrt2() * pow(p.U * p.V, BigReal(1) / 24), ctx.tolerance_digits));
        }
        return combine_checks(std::move(lines));
      }));
  c.push_back(numeric(
      "eta-inversions", T,
      "eta(q) = 2^{-1/6} u^{1/24} (1-u)^{1/6} sqrt z, eta(q^2) = 2^{-1/3} {u(1-u)}^{1/12} sqrt z, "
      "eta(q^4) = 2^{-2/3} u^{1/6} (1-u)^{1/24} sqrt z; eta(i/t) = sqrt(t) eta(i t)",
      "eta(q), eta(q^2), eta(q^4) by the product", "expressions in u1, z1", 25, [](const EvalContext& ctx) {
        std::vector<CheckLine> lines;
        const std::vector<std::pair<std::string, BigReal>> qs = {
            {"q=e^-pi", exp(-pi())}, {"q=e^-2pi", exp(-2 * pi())}, {"q=3/10", rational(3, 10)}};
        for (const auto& [label, q] : qs) {
          const auto p = modular_params(q, {1}).at(1);
          const BigReal sz = sqrt(p.z);
          const BigReal& u = p.u;
          const BigReal& v = p.one_minus_u;
          lines.push_back(numeric_check(label + " eta(q)", eta_q(q),
                                        pow(BigReal(2), BigReal(-1) / 6) * pow(u, BigReal(1) / 24) * pow(v, BigReal(1) / 6) * sz,
                                        ctx.tolerance_digits));
          lines.push_back(numeric_check(label + " eta(q^2)", eta_q(q * q),
                                        pow(BigReal(2), BigReal(-1) / 3) * pow(u * v, BigReal(1) / 12) * sz,
                                        ctx.tolerance_digits));
          lines.push_back(numeric_check(label + " eta(q^4)", eta_q(pow(q, 4)),
                                        pow(BigReal(2), BigReal(-2) / 3) * pow(u, BigReal(1) / 6) * pow(v, BigReal(1) / 24) * sz,
                                        ctx.tolerance_digits));
        }
        for (const auto& [label, t] : std::vector<std::pair<std::string, BigReal>>{
                 {"t=1/2", rational(1, 2)}, {"t=1/3", rational(1, 3)}, {"t=4/5", rational(4, 5)}}) {
          lines.push_back(numeric_check(label + " inversion", eta_series_direct(t),
                                        eta_series_direct(1 / t) / sqrt(t), ctx.tolerance_digits));
        }
        return combine_checks(std::move(lines));
      }));
  c.push_back(numeric("F12-pair", T, "F(1,2) = (pi^2/8) m(2 sqrt 2) = (pi^2/16) m(4i)", "F(1,2)",
                      "(pi^2/8) m(2 sqrt 2); (pi^2/16) m(4i)", 25, [](const EvalContext& ctx) {
                        const BigReal f = F(ctx, 1, 2);
                        const BigReal a = pi2() / 8 * m_of("2sqrt(2)");
                        const BigReal b = pi2() / 16 * m_of("4i");
                        return combine_checks({numeric_check("F(1,2) vs m(2 sqrt 2)", f, a, ctx.tolerance_digits),
                                               numeric_check("F(1,2) vs m(4i)", f, b, ctx.tolerance_digits),
                                               numeric_check("m(2 sqrt 2) vs m(4i)", a, b, ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("deninger-F35", T, "F(3,5) = (4 pi^2/15) m(1) = (pi^2/15) 3F2(1/2,1/2,1/2; 1,3/2; 1/16)",
                      "F(3,5)", "(pi^2/15) 3F2(...;1/16); (4 pi^2/15) m(1)", 25, [](const EvalContext& ctx) {
                        const BigReal f = F(ctx, 3, 5);
                        const BigRational h(1, 2);
                        const BigReal hyp = pi2() / 15 * hypergeom_pFq({h, h, h}, {BigRational(1), BigRational(3, 2)},
                                                                       rational(1, 16));
                        return combine_checks(
                            {numeric_check("F(3,5) vs 3F2", f, hyp, ctx.tolerance_digits),
                             numeric_check("F(3,5) vs m(1)", f, 4 * pi2() / 15 * m_of("1"), ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("F23", T, "F(2,3) = (pi^2/6) m(2) = (pi^2/12) 3F2(1/2,1/2,1/2; 1,3/2; 1/4)", "F(2,3)",
                      "(pi^2/12) 3F2(...;1/4); (pi^2/6) m(2)", 25, [](const EvalContext& ctx) {
                        const BigReal f = F(ctx, 2, 3);
                        const BigRational h(1, 2);
                        const BigReal hyp = pi2() / 12 * hypergeom_pFq({h, h, h}, {BigRational(1), BigRational(3, 2)},
                                                                       rational(1, 4));
                        return combine_checks(
                            {numeric_check("F(2,3) vs 3F2", f, hyp, ctx.tolerance_digits),
                             numeric_check("F(2,3) vs m(2)", f, pi2() / 6 * m_of("2"), ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("F29-assembly", T,
                      "(3/25) F(2,9) + F(1,2) = 4 sum_{n,k>=0} (-1)^n (2n+1)/((2n+1)^2+9(2k+1)^2)^2 "
                      "+ sum_{n>=0,k in Z} (-1)^{n+k} (2n+1)/((2n+1)^2+9(2k)^2)^2",
                      "(3/25) F(2,9) + F(1,2)", "4 odd-odd(9) + odd-even-alt(9)", 25, [](const EvalContext& ctx) {
                        const BigReal lhs = BigReal(3) / 25 * F(ctx, 2, 9) + F(ctx, 1, 2);
                        const BigReal rhs = 4 * odd_odd(ctx, 9) +
                                            sum2d({TwoDimVariant::odd_even_alt, BigReal(9)}, ctx.target_digits());
                        return combine_checks({numeric_check("assembly", lhs, rhs, ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("F29-theorem", T,
                      "(144/(25 pi^2)) F(2,9) = -3 m(4i) + 2 m((4-2t-2t^2+t^3)/sqrt 2) + m(4i(7+4t+2t^2+t^3)), t = 12^{1/4}",
                      "(144/(25 pi^2)) F(2,9)", "-3 m(4i) + 2 m(...) + m(...)", 20, [](const EvalContext& ctx) {
                        const BigReal lhs = BigReal(144) / (25 * pi2()) * F(ctx, 2, 9);
                        const BigReal rhs = -3 * m_of("4i") + 2 * m_of(kTheta9Real) + m_of(kTheta9Imag);
                        return combine_checks({numeric_check("theorem", lhs, rhs, ctx.tolerance_digits)});
                      }));
  c.push_back(numeric(
      "closed-form-sum", T,
      "sum_{n,k>=0} (-1)^n (2n+1)/((2n+1)^2+x(2k+1)^2)^2 = (pi^2/(32 sqrt x)) m(4 sqrt(alpha_x)), x in {1,4,9}; "
      "at x = 9 this is (pi^2/96) m((4-2t-2t^2+t^3)/sqrt 2)",
      "odd-odd(x)", "log-series(x); (pi^2/(32 sqrt x)) m(4 sqrt alpha_x)", 25, [](const EvalContext& ctx) {
        std::vector<CheckLine> lines;
        for (int x : {1, 4, 9}) {
          const std::string label = "x=" + std::to_string(x);
          const BigReal oo = odd_odd(ctx, x);
          lines.push_back(numeric_check(label + " log-series", oo,
                                        sum2d({TwoDimVariant::log_series, BigReal(x)}, ctx.target_digits()),
                                        ctx.tolerance_digits));
          lines.push_back(numeric_check(label + " closed form", oo, closed_form_sum(BigReal(x)), ctx.tolerance_digits));
          if (x == 9) {
            lines.push_back(numeric_check(label + " explicit argument", oo, pi2() / 96 * m_of(kTheta9Real),
                                          ctx.tolerance_digits));
          }
        }
        return combine_checks(std::move(lines));
      }));
  c.push_back(numeric("odd-even-alt-x9", T,
                      "sum_{n>=0,k in Z} (-1)^{n+k} (2n+1)/((2n+1)^2+9(2k)^2)^2 = (pi^2/48) m(4i(7+4t+2t^2+t^3))",
                      "odd-even-alt(9)", "(pi^2/48) m(4i(7+4t+2t^2+t^3))", 25, [](const EvalContext& ctx) {
                        const BigReal lhs = sum2d({TwoDimVariant::odd_even_alt, BigReal(9)}, ctx.target_digits());
                        return combine_checks({numeric_check("x=9", lhs, pi2() / 48 * m_of(kTheta9Imag),
                                                             ctx.tolerance_digits)});
                      }));
  c.push_back(numeric(
      "F2-25-combination", T,
      "(5/13^2) F(2,25) + (2/9^2) F(1,1,2,50) + (2/5^2) F(1,2,2,25) = (pi^2/80)(-5 m(4i) + 2 m(4 sqrt a25) "
      "+ m(4i sqrt((1-a25)/a25))), a25 = (sqrt 5 - 1)^8 (5^{1/4} - 1)^8 / 2^13",
      "(5/169) F(2,25) + (2/81) F(1,1,2,50) + (2/25) F(1,2,2,25)", "(pi^2/80)(...)", 20,
      [](const EvalContext& ctx) {
        const BigReal lhs = BigReal(5) / 169 * F(ctx, 2, 25) + BigReal(2) / 81 * F4(ctx, 1, 1, 2, 50) +
                            BigReal(2) / 25 * F4(ctx, 1, 2, 2, 25);
        const std::string a25 = "a25=(sqrt(5)-1)^8 (5^(1/4)-1)^8/2^13; ";
        const BigReal rhs =
            pi2() / 80 * (-5 * m_of("4i") + 2 * m_of(a25 + "4sqrt(a25)") + m_of(a25 + "4i sqrt((1-a25)/a25)"));
        const BigReal a25_closed = evaluate_recipe(a25 + "a25").re;
        return combine_checks({numeric_check("combination", lhs, rhs, ctx.tolerance_digits),
                               numeric_check("alpha_25 closed form", singular_modulus(BigReal(25)), a25_closed,
                                             ctx.tolerance_digits)});
      }));
  c.push_back(numeric("F59-linear", T, "9 F(5,9) = 45 F(1,1) - 50 F(1,5)", "9 F(5,9)", "45 F(1,1) - 50 F(1,5)", 25,
                      [](const EvalContext& ctx) {
                        return combine_checks({numeric_check("linear relation", 9 * F(ctx, 5, 9),
                                                             45 * F(ctx, 1, 1) - 50 * F(ctx, 1, 5),
                                                             ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("F59-theorem", T, "(108/(5 pi^2)) F(5,9) = 8 n(3 cbrt 2) - 9 n(2 cbrt 4)",
                      "(108/(5 pi^2)) F(5,9)", "8 n(3 cbrt 2) - 9 n(2 cbrt 4)", 25, [](const EvalContext& ctx) {
                        const BigReal lhs = BigReal(108) / (5 * pi2()) * F(ctx, 5, 9);
                        const BigReal rhs = 8 * n_of("3*2^(1/3)") - 9 * n_of("2*4^(1/3)");
                        return combine_checks({numeric_check("theorem", lhs, rhs, ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("F18-integral", T,
                      "F(1,8) = (9 pi 2^{1/4}/128) int_0^1 ((1-k)^2 + 2 sqrt(2(k+k^3)))/((1+k)(k+k^3)^{3/4}) "
                      "log((1+2k-k^2+2 sqrt(k-k^3))/(1+k^2)) dk",
                      "F(1,8)", "elementary integral", 30, [](const EvalContext& ctx) {
                        return combine_checks({numeric_check("integral", F(ctx, 1, 8),
                                                             f18_elementary(ctx.target_digits()),
                                                             ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("F215-linear", T, "F(2,15) + 4 F(2,5/3) = (8 pi^2/5) m(1)", "F(2,15) + 4 F(2,5/3)",
                      "(8 pi^2/5) m(1)", 25, [](const EvalContext& ctx) {
                        const BigReal lhs = F(ctx, 2, 15) + 4 * F(ctx, 2, BigRational(5, 3));
                        return combine_checks(
                            {numeric_check("linear relation", lhs, 8 * pi2() / 5 * m_of("1"), ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("theta32-involution", T,
                      "sum (-1)^n (2n+1) e^{-pi (n+1/2)^2 u} = u^{-3/2} sum (-1)^n (2n+1) e^{-pi (n+1/2)^2 / u}",
                      "theta(u)", "u^{-3/2} theta(1/u)", 30, [](const EvalContext& ctx) {
                        std::vector<CheckLine> lines;
                        for (const auto& [label, u] : std::vector<std::pair<std::string, BigReal>>{
                                 {"u=1/3", rational(1, 3)},
                                 {"u=1/2", rational(1, 2)},
                                 {"u=1", rational(1)},
                                 {"u=2", rational(2)},
                                 {"u=27/10", rational(27, 10)}}) {
                          lines.push_back(numeric_check(label, theta_weight32(u),
                                                        pow(u, BigReal(-3) / 2) * theta_weight32(1 / u),
                                                        ctx.tolerance_digits));
                        }
                        return combine_checks(std::move(lines));
                      }));
  c.push_back(numeric("second-degree-modular", T,
                      "(1 - sqrt(1 - alpha_{x/4}))/(1 + sqrt(1 - alpha_{x/4})) = sqrt(alpha_x), x in {4,9,25}",
                      "(1 - sqrt(1 - alpha_{x/4}))/(1 + sqrt(1 - alpha_{x/4}))", "sqrt(alpha_x)", 25,
                      [](const EvalContext& ctx) {
                        std::vector<CheckLine> lines;
                        for (int x : {4, 9, 25}) {
                          const BigReal quarter = BigReal(x) / 4;
                          const BigReal s = sqrt(singular_comodulus(quarter));
                          // 1 - s = alpha/(1 + s) avoids the cancellation for small alpha
                          const BigReal lhs = singular_modulus(quarter) / ((1 + s) * (1 + s));
                          lines.push_back(numeric_check("x=" + std::to_string(x), lhs, sqrt(singular_modulus(BigReal(x))),
                                                        ctx.tolerance_digits));
                        }
                        return combine_checks(std::move(lines));
                      }));
  c.push_back(numeric("alpha9-closed", T,
                      "alpha_9 = (1 - sqrt(1 - G_9^{-24}))/2 = (1 - 4t + t^3)/2 = (4-2t-2t^2+t^3)^2/32, "
                      "G_9^{-24} = (sqrt 2/(sqrt 3 + 1))^8",
                      "alpha_9 from theta values", "class invariant; radicals in t = 12^{1/4}", 25,
                      [](const EvalContext& ctx) {
                        const BigReal a9 = singular_modulus(BigReal(9));
                        const BigReal g9 = cbrt((sqrt(BigReal(3)) + 1) / sqrt(BigReal(2)));
                        const BigReal t = pow(BigReal(12), BigReal(1) / 4);
                        const BigReal poly = (1 - 4 * t + t * t * t) / 2;
                        const BigReal sq = pow(4 - 2 * t - 2 * t * t + t * t * t, 2) / 32;
                        return combine_checks({numeric_check("class invariant", a9, class_invariant_alpha(g9),
                                                             ctx.tolerance_digits),
                                               numeric_check("(1-4t+t^3)/2", a9, poly, ctx.tolerance_digits),
                                               numeric_check("square form", a9, sq, ctx.tolerance_digits)});
                      }));
  {
    auto r = numeric("cubes-vs-integral", T,
                     "F by summation over cubes |n_i| <= 40 agrees with the eta integral to 3 significant digits; "
                     "Jensen reduction of m agrees with direct torus quadrature to 8 digits",
                     "F_cubes(R=40); m by Jensen", "F_integral; m by 2D quadrature", 3, [](const EvalContext& ctx) {
                       std::vector<CheckLine> lines;
                       for (const auto& s : {LatticeSpec::make(1, 1, 1, 1), LatticeSpec::make(1, 2, 2, 4),
                                             LatticeSpec::make(1, 3, 5, 15)}) {
                         lines.push_back(numeric_check(s.str() + " cubes", BigReal(F_cubes(s, 40)),
                                                       F_integral(s, ctx.target_digits()), ctx.tolerance_digits));
                       }
                       for (const char* a : {"1", "4i"}) {
                         const Complex z = mahler_arg(a).value;
                         lines.push_back(numeric_check(std::string("m(") + a + ") torus", mahler_m_jensen(z),
                                                       mahler_m_torus2d(z, 12), std::max(ctx.tolerance_digits, 8)));
                       }
                       return combine_checks(std::move(lines));
                     });
    c.push_back(std::move(r));
  }

  // ---- numeric conjectures: consistent iff every residual is below 1e-12
  c.push_back(numeric("cuspform30-g3", C, "L(f30, 2) = F(2,5/3) - F(2,15)/4 = (2 pi^2/15) g(3)", "L(f30,2)",
                      "(2 pi^2/15) g(3); F(2,5/3) - F(2,15)/4", 12, [](const EvalContext& ctx) {
                        const BigReal L = cusp_L2(cusp_form("f30"), ctx.target_digits());
                        const BigReal lattice = F(ctx, 2, BigRational(5, 3)) - F(ctx, 2, 15) / 4;
                        return combine_checks(
                            {numeric_check("L vs g(3)", L, 2 * pi2() / 15 * g_of(3), ctx.tolerance_digits),
                             numeric_check("L vs lattice sums", L, lattice, ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("conj-F215", C, "(15/(4 pi^2)) F(2,15) = 3 m(1) - g(3)", "(15/(4 pi^2)) F(2,15)",
                      "3 m(1) - g(3)", 12, [](const EvalContext& ctx) {
                        return combine_checks({numeric_check("conjecture", BigReal(15) / (4 * pi2()) * F(ctx, 2, 15),
                                                             3 * m_of("1") - g_of(3), ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("conj-F253", C, "(15/pi^2) F(2,5/3) = 3 m(1) + g(3)", "(15/pi^2) F(2,5/3)", "3 m(1) + g(3)", 12,
                      [](const EvalContext& ctx) {
                        return combine_checks(
                            {numeric_check("conjecture", BigReal(15) / pi2() * F(ctx, 2, BigRational(5, 3)),
                                           3 * m_of("1") + g_of(3), ctx.tolerance_digits)});
                      }));
  c.push_back(numeric("conductor17", C, "(17/(2 pi^2)) L(f17, 2) = m((1+sqrt 17)^2/4) - m(sqrt 17)",
                      "(17/(2 pi^2)) L(f17,2)", "m((1+sqrt 17)^2/4) - m(sqrt 17)", 12, [](const EvalContext& ctx) {
                        const BigReal lhs = BigReal(17) / (2 * pi2()) * cusp_L2(cusp_form("f17"), ctx.target_digits());
                        const BigReal rhs = m_of("(1+sqrt(17))^2/4") - m_of("sqrt(17)");
                        return combine_checks({numeric_check("conjecture", lhs, rhs, ctx.tolerance_digits)});
                      }));
  return c;
}

}  // namespace

const std::vector<IdentityRecord>& registry_catalog() {
  static const std::vector<IdentityRecord> catalog = build_catalog();
  return catalog;
}

}  // namespace latticelab::registry
