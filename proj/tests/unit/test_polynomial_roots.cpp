#include "latticelab/polynomial_roots.hpp"

#include <gtest/gtest.h>

using namespace latticelab;

TEST(Roots, QuadraticWithCancellation) {
  WorkingPrecision wp(50);
  // x^2 - 1e20 x + 1: roots 1e20 and 1e-20 (to leading order)
  const BigReal big = pow(BigReal(10), 20);
  const auto r = quadratic_roots(Complex(1), Complex(-big), Complex(1));
  const BigReal small = abs(r[0]) < abs(r[1]) ? abs(r[0]) : abs(r[1]);
  EXPECT_GT(agreement_digits(small * big, BigReal(1)), 35);
}

TEST(Roots, CubicVieta) {
  WorkingPrecision wp(50);
  const Complex a(BigReal(2), BigReal(1));
  const Complex b(BigReal(-3), BigReal(0));
  const Complex c(BigReal(1), BigReal(-5));
  const Complex d(BigReal(7), BigReal(2));
  const auto r = cubic_roots(a, b, c, d);
  const std::array<Complex, 4> coeffs = {d, c, b, a};
  for (const auto& x : r) EXPECT_LT(abs(polynomial_value(coeffs, x)), ten_to_minus(44));
  EXPECT_LT(abs(r[0] + r[1] + r[2] + b / a), ten_to_minus(45));
  EXPECT_LT(abs(r[0] * r[1] * r[2] + d / a), ten_to_minus(45));
}

TEST(Roots, CubicTripleRoot) {
  WorkingPrecision wp(50);
  // (x - 2)^3
  const auto r = cubic_roots(Complex(1), Complex(-6), Complex(12), Complex(-8));
  for (const auto& x : r) EXPECT_LT(abs(x - Complex(2)), ten_to_minus(14));
}

TEST(Roots, DegenerateLeadingCoefficient) {
  WorkingPrecision wp(30);
  EXPECT_THROW(quadratic_roots(Complex(0), Complex(1), Complex(1)), DomainError);
  EXPECT_THROW(cubic_roots(Complex(0), Complex(1), Complex(1), Complex(1)), DomainError);
}
