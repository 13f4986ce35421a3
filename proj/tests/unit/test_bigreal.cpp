#include "latticelab/bigreal.hpp"
#include "latticelab/complex.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace latticelab;

TEST(BigReal, PrecisionScopeRestores) {
  const unsigned before = working_digits();
  {
    WorkingPrecision wp(80);
    EXPECT_EQ(working_digits(), 80u);
    {
      WorkingPrecision inner(30);
      EXPECT_EQ(working_digits(), 30u);
    }
    EXPECT_EQ(working_digits(), 80u);
  }
  EXPECT_EQ(working_digits(), before);
}

TEST(BigReal, PolicyGuard) {
  PrecisionPolicy p;
  EXPECT_EQ(p.guard_digits(), 14u);
  EXPECT_EQ(p.working_digits(), 54u);
  p.digits = 100;
  EXPECT_EQ(p.working_digits(), 120u);
  p.guard = 5;
  EXPECT_EQ(p.working_digits(), 105u);
}

TEST(BigReal, ConstantsAgreeWithDouble) {
  WorkingPrecision wp(50);
  EXPECT_NEAR(static_cast<double>(pi()), M_PI, 1e-15);
  EXPECT_NEAR(static_cast<double>(ln2()), std::log(2.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(catalan()), 0.915965594177219015, 1e-15);
}

TEST(BigReal, PiToFiftyDigits) {
  WorkingPrecision wp(60);
  // sixteen-term Machin formula check: pi = 16 atan(1/5) - 4 atan(1/239)
  const BigReal machin = 16 * atan(BigReal(1) / 5) - 4 * atan(BigReal(1) / 239);
  EXPECT_GT(agreement_digits(pi(), machin), 58);
}

TEST(BigReal, ParseRational) {
  EXPECT_EQ(parse_rational("5/3"), BigRational(5, 3));
  EXPECT_EQ(parse_rational("-4"), BigRational(-4));
  EXPECT_EQ(parse_rational("2.25"), BigRational(9, 4));
  EXPECT_EQ(parse_rational("10/4"), BigRational(5, 2));
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(BigReal, RationalToString) {
  EXPECT_EQ(to_string(BigRational(5, 3)), "5/3");
  EXPECT_EQ(to_string(BigRational(-6, 3)), "-2");
}

TEST(BigReal, AgreementDigits) {
  WorkingPrecision wp(40);
  EXPECT_NEAR(agreement_digits(BigReal(1), BigReal(1) + ten_to_minus(20)), 20.0, 1e-9);
  EXPECT_NEAR(agreement_digits(BigReal(1000), BigReal(1000) + ten_to_minus(20)), 23.0, 1e-9);
  EXPECT_EQ(agreement_digits(BigReal(3), BigReal(3)), 40.0);
}

TEST(Complex, FieldOperations) {
  WorkingPrecision wp(40);
  const Complex a(BigReal(3), BigReal(-2));
  const Complex b(BigReal(-1), BigReal(5));
  const Complex q = a / b;
  const Complex back = q * b;
  EXPECT_LT(abs(back - a), ten_to_minus(38));
  EXPECT_EQ(a * Complex::i(), Complex(BigReal(2), BigReal(3)));
  EXPECT_EQ(norm(a), BigReal(13));
}

TEST(Complex, PrincipalBranches) {
  WorkingPrecision wp(40);
  const Complex m1(-1);
  const Complex s = sqrt(m1);
  EXPECT_LT(abs(s - Complex::i()), ten_to_minus(38));
  const Complex l = log(m1);
  EXPECT_LT(abs(l.im - pi()), ten_to_minus(38));
  const Complex c = cbrt(Complex(-8));
  // principal cube root of -8 is 1 + i sqrt 3
  EXPECT_LT(abs(c - Complex(BigReal(1), sqrt(BigReal(3)))), ten_to_minus(37));
  const Complex z(BigReal(1), BigReal(2));
  EXPECT_LT(abs(exp(log(z)) - z), ten_to_minus(37));
  EXPECT_LT(abs(pow(z, 3L) - z * z * z), ten_to_minus(37));
}
