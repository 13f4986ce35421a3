#pragma once

// Closed-form roots of complex quadratics and cubics at working precision.
// The cubic roots are Newton-polished against the original coefficients.

#include "latticelab/complex.hpp"

#include <array>

namespace latticelab {

/// Roots of a x^2 + b x + c, a != 0, using the cancellation-free form.
std::array<Complex, 2> quadratic_roots(const Complex& a, const Complex& b, const Complex& c);

/// Roots of a x^3 + b x^2 + c x + d, a != 0 (Cardano, then Newton polish).
std::array<Complex, 3> cubic_roots(const Complex& a, const Complex& b, const Complex& c, const Complex& d);

/// Horner evaluation of sum coeffs[i] x^i.
Complex polynomial_value(const std::array<Complex, 4>& coeffs, const Complex& x);

}  // namespace latticelab
