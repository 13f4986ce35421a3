#include "latticelab/theta_numeric.hpp"

#include <string>

namespace latticelab {
namespace {

void require_unit_disc(const BigReal& q, const char* what) {
  if (!(abs(q) < 1)) throw DomainError(std::string(what) + " needs |q| < 1");
}

// Stop once a term drops below eps * (1 - |q|) of the running sum; the
// remaining terms shrink at least geometrically with ratio |q|.
bool tail_done(const BigReal& term, const BigReal& sum, const BigReal& q_abs) {
  return abs(term) <= working_epsilon() * (1 - q_abs) * abs(sum);
}

// Even and odd parts of phi at q: phi(q^4) and 2 q psi(q^8).
void phi_split(const BigReal& q, BigReal& even, BigReal& odd) {
  const BigReal q4 = pow(q, 4);
  even = phi_numeric(q4);
  odd = 2 * q * psi_numeric(pow(q4, 2));
}

// prod (1 - q^n) = sum_s (-1)^s q^{s(3s-1)/2} over s = 0, -1, 1, -2, 2, ...
BigReal pentagonal_sum(const BigReal& q) {
  BigReal sum = 1;
  if (q == 0) return sum;
  for (long s = 1;; ++s) {
    const BigReal a = pow(q, s * (3 * s - 1) / 2);
    const BigReal b = pow(q, s * (3 * s + 1) / 2);
    const BigReal term = (s % 2 == 0) ? BigReal(a + b) : BigReal(-(a + b));
    sum += term;
    if (tail_done(term, sum, q)) break;
  }
  return sum;
}

}  // namespace

BigReal eta_q(const BigReal& q) {
  if (q < 0 || !(q < 1)) throw DomainError("eta_q needs 0 <= q < 1");
  if (q == 0) return BigReal(0);
  return pow(q, BigReal(1) / 24) * pentagonal_sum(q);
}

BigReal eta_series_direct(const BigReal& t) {
  if (!(t > 0)) throw DomainError("eta_numeric needs t > 0");
  // q^{1/24} is formed directly so that it survives long after q underflows.
  const BigReal q = exp(-2 * pi() * t);
  return exp(-pi() * t / 12) * pentagonal_sum(q);
}

BigReal eta_numeric(const BigReal& t) {
  if (!(t > 0)) throw DomainError("eta_numeric needs t > 0");
  if (t < 1) {
    const BigReal inv = 1 / t;
    return eta_series_direct(inv) / sqrt(t);
  }
  return eta_series_direct(t);
}

BigReal log_eta_numeric(const BigReal& t) {
  if (!(t > 0)) throw DomainError("eta_numeric needs t > 0");
  // log eta(i t) = -pi t/12 + log prod(1 - q^n), with eta(i t) = eta(i/t)/sqrt(t)
  const BigReal s = (t < 1) ? BigReal(1 / t) : t;
  BigReal v = -pi() * s / 12 + log(pentagonal_sum(exp(-2 * pi() * s)));
  if (t < 1) v -= log(t) / 2;
  return v;
}

BigReal phi_numeric(const BigReal& q) {
  require_unit_disc(q, "phi");
  const BigReal qa = abs(q);
  BigReal sum = 1;
  for (long n = 1;; ++n) {
    const BigReal term = 2 * pow(q, n * n);
    sum += term;
    if (term == 0 || tail_done(term, sum, qa)) break;
  }
  return sum;
}

BigReal psi_numeric(const BigReal& q) {
  require_unit_disc(q, "psi");
  const BigReal qa = abs(q);
  BigReal sum = 1;
  for (long n = 1;; ++n) {
    const BigReal term = pow(q, n * (n + 1) / 2);
    sum += term;
    if (term == 0 || tail_done(term, sum, qa)) break;
  }
  return sum;
}

BigReal theta_weight32(const BigReal& u) {
  if (!(u > 0)) throw DomainError("theta_weight32 needs u > 0");
  const BigReal c = pi() * u;
  BigReal sum = 0;
  // Terms decrease once (n+1/2)^2 pi u exceeds 1; from then on the ratio is
  // at most exp(-2 pi u (n+1)) and the tail is below a few terms.
  for (long n = 0;; ++n) {
    const BigReal x = BigReal(n) + BigReal(0.5);
    const BigReal term = (2 * n + 1) * exp(-c * x * x);
    sum += (n % 2 == 0) ? term : BigReal(-term);
    if (c * x * x > 1 && term <= working_epsilon() * abs(sum) * ten_to_minus(2)) break;
  }
  return sum;
}

const ModularParam& ModularParams::at(unsigned degree) const {
  for (const auto& p : params) {
    if (p.degree == degree) return p;
  }
  throw DomainError("modular parameter of degree " + std::to_string(degree) + " was not computed");
}

ModularParams modular_params(const BigReal& q, const std::vector<unsigned>& degrees) {
  if (!(q > 0 && q < 1)) throw DomainError("modular_params needs 0 < q < 1");
  ModularParams out;
  out.q = q;
  for (unsigned j : degrees) {
    if (j == 0) throw DomainError("modular degree must be positive");
    BigReal e;
    BigReal o;
    phi_split(pow(q, j), e, o);
    // phi(q) = e + o, phi(-q) = e - o
    const BigReal s = e + o;
    const BigReal s4 = pow(s, 4);
    ModularParam p;
    p.degree = j;
    p.u = 8 * e * o * (e * e + o * o) / s4;
    p.one_minus_u = pow(e - o, 4) / s4;
    p.z = s * s;
    out.params.push_back(std::move(p));
  }
  return out;
}

BigReal singular_modulus(const BigReal& x) {
  if (!(x > 0)) throw DomainError("singular_modulus needs x > 0");
  return modular_params(exp(-pi() * sqrt(x)), {1}).params[0].u;
}

BigReal singular_comodulus(const BigReal& x) {
  if (!(x > 0)) throw DomainError("singular_modulus needs x > 0");
  return modular_params(exp(-pi() * sqrt(x)), {1}).params[0].one_minus_u;
}

BigReal class_invariant_alpha(const BigReal& g) {
  if (g < 1) throw DomainError("class invariant must be >= 1");
  const BigReal eps = pow(g, -24);
  return eps / (2 * (1 + sqrt(1 - eps)));
}

}  // namespace latticelab
