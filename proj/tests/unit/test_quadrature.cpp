#include "latticelab/quadrature.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace latticelab;

namespace {

QuadratureOptions opts(int digits) {
  QuadratureOptions o;
  o.target_digits = digits;
  return o;
}

}  // namespace

TEST(TanhSinh, Polynomial) {
  WorkingPrecision wp(50);
  const auto r = integrate_tanh_sinh([](const BigReal& x) { return x * x * x; }, BigReal(0), BigReal(2), opts(40));
  EXPECT_TRUE(r.converged);
  EXPECT_GT(agreement_digits(r.value, BigReal(4)), 40);
}

TEST(TanhSinh, SineOverHalfPeriod) {
  WorkingPrecision wp(50);
  const auto r = integrate_tanh_sinh([](const BigReal& x) { return sin(x); }, BigReal(0), pi(), opts(40));
  EXPECT_GT(agreement_digits(r.value, BigReal(2)), 40);
}

TEST(TanhSinh, EndpointSingularities) {
  WorkingPrecision wp(50);
  // int_0^1 x^{-1/2} = 2 and int_0^1 log x = -1
  EndpointIntegrand inv_sqrt = [](const BigReal&, const BigReal& from_a, const BigReal&) { return 1 / sqrt(from_a); };
  EXPECT_GT(agreement_digits(integrate_tanh_sinh(inv_sqrt, BigReal(0), BigReal(1), opts(40)).value, BigReal(2)), 38);
  EndpointIntegrand logx = [](const BigReal&, const BigReal& from_a, const BigReal&) { return log(from_a); };
  EXPECT_GT(agreement_digits(integrate_tanh_sinh(logx, BigReal(0), BigReal(1), opts(40)).value, BigReal(-1)), 38);
  // int_0^1 1/sqrt(1-x^2) = pi/2, singular at the right end
  EndpointIntegrand arcsin = [](const BigReal& x, const BigReal&, const BigReal& from_b) {
    return 1 / sqrt(from_b * (1 + x));
  };
  EXPECT_GT(agreement_digits(integrate_tanh_sinh(arcsin, BigReal(0), BigReal(1), opts(40)).value, pi() / 2), 38);
}

TEST(ExpSinh, ExponentialAndGaussian) {
  WorkingPrecision wp(50);
  EXPECT_GT(agreement_digits(integrate_exp_sinh([](const BigReal& x) { return exp(-x); }, BigReal(0), opts(40)).value,
                             BigReal(1)),
            40);
  const auto g = integrate_exp_sinh([](const BigReal& x) { return x * exp(-x * x); }, BigReal(0), opts(40));
  EXPECT_GT(agreement_digits(g.value, BigReal(1) / 2), 40);
  // int_0^inf t e^{-2 pi t} dt = 1/(4 pi^2)
  const auto t = integrate_exp_sinh([](const BigReal& x) { return x * exp(-2 * pi() * x); }, BigReal(0), opts(40));
  EXPECT_GT(agreement_digits(t.value, 1 / (4 * pi() * pi())), 40);
}

TEST(Piecewise, KinkAtBreakpoint) {
  WorkingPrecision wp(50);
  EndpointIntegrand f = [](const BigReal& x, const BigReal&, const BigReal&) { return abs(x - BigReal(1) / 3); };
  const auto r = integrate_piecewise(f, {BigReal(0), BigReal(1) / 3, BigReal(1)}, opts(40));
  // (1/3)^2/2 + (2/3)^2/2 = 5/18
  EXPECT_GT(agreement_digits(r.value, BigReal(5) / 18), 40);
}

TEST(Quadrature, ReportsNonConvergence) {
  WorkingPrecision wp(50);
  QuadratureOptions o = opts(45);
  o.max_level = 4;
  const auto r = integrate_tanh_sinh([](const BigReal& x) { return sin(200 * x); }, BigReal(0), BigReal(3), o);
  EXPECT_FALSE(r.converged);
  EXPECT_THROW(require_converged(r, "oscillatory"), ConvergenceError);
}

TEST(Quadrature, NonFiniteIntegrandThrows) {
  WorkingPrecision wp(30);
  EXPECT_THROW(integrate_tanh_sinh([](const BigReal&) { return std::numeric_limits<BigReal>::infinity(); }, BigReal(0),
                                   BigReal(1), opts(20)),
               ConvergenceError);
}
