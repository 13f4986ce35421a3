#pragma once

// Numerical eta and theta values for real q in (0,1), the modular parameters
// u_j = 1 - phi^4(-q^j)/phi^4(q^j), z_j = phi^2(q^j), and singular moduli.
//
// The eta inversion eta(i/t) = sqrt(t) eta(i t) is classical background and
// is used so that every eta series is summed at q <= exp(-2 pi).

#include "latticelab/bigreal.hpp"

#include <vector>

namespace latticelab {

/// eta(q) = q^{1/24} prod (1 - q^n) by the pentagonal series, 0 <= q < 1.
BigReal eta_q(const BigReal& q);

/// eta(exp(-2 pi t)), t > 0.
BigReal eta_numeric(const BigReal& t);

/// log eta(exp(-2 pi t)), finite even where eta itself underflows.
BigReal log_eta_numeric(const BigReal& t);

/// Raw pentagonal series at exp(-2 pi t) with no inversion (slow for small t).
BigReal eta_series_direct(const BigReal& t);

/// phi(q) = sum_{n in Z} q^{n^2}, |q| < 1 (negative q allowed).
BigReal phi_numeric(const BigReal& q);

/// psi(q) = sum_{n >= 0} q^{n(n+1)/2}, |q| < 1.
BigReal psi_numeric(const BigReal& q);

/// sum_{n >= 0} (-1)^n (2n+1) exp(-pi (n+1/2)^2 u), u > 0.
BigReal theta_weight32(const BigReal& u);

struct ModularParam {
  unsigned degree = 1;
  BigReal u;  // 1 - phi^4(-q^j)/phi^4(q^j)
  BigReal one_minus_u;
  BigReal z;  // phi^2(q^j)
};

struct ModularParams {
  BigReal q;
  std::vector<ModularParam> params;

  /// Throws DomainError if the degree was not requested.
  const ModularParam& at(unsigned degree) const;
};

/// u_j, 1 - u_j and z_j for each requested degree, 0 < q < 1. Both u and
/// 1 - u are formed from the even/odd split of phi, so neither loses digits
/// when the other is close to 1.
ModularParams modular_params(const BigReal& q, const std::vector<unsigned>& degrees);

/// alpha_x = 1 - phi^4(-e^{-pi sqrt x}) / phi^4(e^{-pi sqrt x}), x > 0.
BigReal singular_modulus(const BigReal& x);

/// 1 - alpha_x, computed without cancellation.
BigReal singular_comodulus(const BigReal& x);

/// (1 - sqrt(1 - G^{-24})) / 2 for the class invariant G >= 1.
BigReal class_invariant_alpha(const BigReal& g);

}  // namespace latticelab
