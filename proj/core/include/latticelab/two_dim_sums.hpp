#pragma once

// Two-dimensional alternating sums (m = 2n+1 throughout)
//     odd-odd:      sum_{n,k>=0} (-1)^n m / (m^2 + x (2k+1)^2)^2
//     odd-even-alt: sum_{n>=0, k in Z} (-1)^{n+k} m / (m^2 + x (2k)^2)^2
//     log-series:   pi^2/(16 sqrt x) sum_{n>=0} (-1)^n m log((1+e^{-pi sqrt(x) m/2}) / (1-e^{-pi sqrt(x) m/2}))
// The inner k-sums are done in closed form (partial fractions of the
// hyperbolic functions); the outer alternating sums stop on an explicit
// tail bound.

#include "latticelab/bigreal.hpp"

#include <string>

namespace latticelab {

enum class TwoDimVariant { odd_odd, odd_even_alt, log_series };

struct TwoDimSumSpec {
  TwoDimVariant variant = TwoDimVariant::odd_odd;
  BigReal x;
};

TwoDimVariant parse_two_dim_variant(const std::string& name);
std::string to_string(TwoDimVariant v);

BigReal sum2d(const TwoDimSumSpec& spec, int target_digits);

/// Brute-force partial sum over n < n_max and |k| < k_max in long double, for
/// cross-checking the closed-form inner sums.
long double sum2d_partial(const TwoDimSumSpec& spec, int n_max, int k_max);

/// pi^2/(32 sqrt x) m(4 sqrt(alpha_x)), alpha_x the singular modulus.
BigReal closed_form_sum(const BigReal& x);

}  // namespace latticelab
