#pragma once

// Double-exponential quadrature at working precision: tanh-sinh on finite
// intervals, exp-sinh on [a, inf). Each level halves the step; the difference
// between consecutive levels is the error estimate.

#include "latticelab/bigreal.hpp"

#include <functional>
#include <vector>

namespace latticelab {

/// Integrand evaluated at x. The two extra arguments are the distances x - a
/// and b - x, computed without cancellation, for integrands with endpoint
/// singularities (for exp-sinh the second distance is +inf and passed as 0).
using EndpointIntegrand = std::function<BigReal(const BigReal& x, const BigReal& from_a, const BigReal& from_b)>;
using Integrand = std::function<BigReal(const BigReal& x)>;

struct QuadratureOptions {
  int target_digits = 30;
  int min_level = 3;
  int max_level = 12;
  // Converged once the error estimate is below 10^{-target_digits} times
  // max(|value|, scale); a positive scale makes the test absolute for pieces
  // whose value may be zero.
  BigReal scale = 0;
};

struct QuadratureResult {
  BigReal value;
  BigReal error;  // |S_L - S_{L-1}| at the final level
  int level = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

QuadratureResult integrate_tanh_sinh(const EndpointIntegrand& f, const BigReal& a, const BigReal& b,
                                     const QuadratureOptions& opts);
QuadratureResult integrate_tanh_sinh(const Integrand& f, const BigReal& a, const BigReal& b,
                                     const QuadratureOptions& opts);

/// Integral over [a, inf); the integrand must decay at least exponentially.
QuadratureResult integrate_exp_sinh(const EndpointIntegrand& f, const BigReal& a, const QuadratureOptions& opts);
QuadratureResult integrate_exp_sinh(const Integrand& f, const BigReal& a, const QuadratureOptions& opts);

/// Sum of tanh-sinh integrals over consecutive breakpoints (sorted, at least
/// two). Interior kinks and log singularities should be breakpoints.
QuadratureResult integrate_piecewise(const EndpointIntegrand& f, const std::vector<BigReal>& breakpoints,
                                     const QuadratureOptions& opts);

/// Throws ConvergenceError naming `what` unless r converged.
const QuadratureResult& require_converged(const QuadratureResult& r, const std::string& what);

}  // namespace latticelab
