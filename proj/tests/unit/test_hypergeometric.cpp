#include "latticelab/hypergeometric.hpp"

#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace latticelab;

namespace {

std::vector<BigRational> rats(std::initializer_list<BigRational> l) { return l; }

}  // namespace

TEST(Hypergeometric, ElementaryClosedForms) {
  WorkingPrecision wp(50);
  const BigReal z = BigReal(3) / 10;
  // 2F1(1,1;2;z) = -log(1-z)/z
  EXPECT_GT(agreement_digits(hypergeom_pFq(rats({1, 1}), rats({2}), z), -log(1 - z) / z), 45);
  // 1F0(a;;z) = (1-z)^{-a}
  EXPECT_GT(agreement_digits(hypergeom_pFq(rats({BigRational(3, 2)}), {}, z), pow(1 - z, BigReal(-3) / 2)), 45);
  // 0F0(;;z) = e^z, also for large z
  EXPECT_GT(agreement_digits(hypergeom_pFq({}, {}, BigReal(20)), exp(BigReal(20))), 45);
  // 2F1(1/2,1/2;3/2;z^2) = asin(z)/z
  const BigRational h(1, 2);
  EXPECT_GT(agreement_digits(hypergeom_pFq(rats({h, h}), rats({BigRational(3, 2)}), z * z), asin(z) / z), 45);
}

TEST(Hypergeometric, ComplexArgument) {
  WorkingPrecision wp(50);
  // 1F0(1;;z) = 1/(1-z) for z = 0.3 + 0.4 i
  const Complex z(BigReal(3) / 10, BigReal(4) / 10);
  const Complex v = hypergeom_pFq(rats({1}), {}, z);
  const Complex expected = Complex(1) / (Complex(1) - z);
  EXPECT_LT(abs(v - expected), ten_to_minus(45));
}

TEST(Hypergeometric, TailBoundIsHonest) {
  WorkingPrecision wp(50);
  const auto r = hypergeom_detailed(rats({1, 1}), rats({2}), Complex(BigReal(9) / 10), 30);
  const BigReal exact = -log(BigReal(1) / 10) / (BigReal(9) / 10);
  EXPECT_LE(abs(r.value.re - exact), r.tail_bound * 2 + ten_to_minus(45));
  EXPECT_LT(r.tail_bound, ten_to_minus(29));
}

TEST(Hypergeometric, DomainErrors) {
  WorkingPrecision wp(30);
  EXPECT_THROW(hypergeom_pFq(rats({1, 1}), rats({2}), BigReal(1)), DomainError);
  EXPECT_THROW(hypergeom_pFq(rats({1, 1, 1}), rats({2}), BigReal(1) / 10), DomainError);
  EXPECT_THROW(hypergeom_pFq(rats({1}), rats({-2}), BigReal(1) / 10), DomainError);
  EXPECT_THROW(hypergeom_pFq(rats({1}), rats({0}), BigReal(1) / 10), DomainError);
}

TEST(Hypergeometric, TerminatingSeriesAllowed) {
  WorkingPrecision wp(30);
  // 3F1(-2, 1, 1; 1; z) = 1 - 2 z + 2 z^2 (terms k = 0..2: (-2)_k (1)_k / k!)
  const BigReal z(5);
  EXPECT_GT(agreement_digits(hypergeom_pFq(rats({-2, 1, 1}), rats({1}), z), 1 - 2 * z * 1 + z * z * 2), 28);
}

// Double-precision re-summation: the same series summed independently by
// Boost.Math in double agrees to about 1e-13.
TEST(Hypergeometric, DoublePrecisionResummation) {
  WorkingPrecision wp(40);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_real_distribution<double> zd(-0.9, 0.9);
  for (int trial = 0; trial < 25; ++trial) {
    const BigRational a1(num(rng), den(rng));
    const BigRational a2(num(rng), den(rng));
    const BigRational a3(num(rng), den(rng));
    const BigRational b1(num(rng), den(rng));
    const BigRational b2(num(rng) + 2, den(rng));
    const double z = zd(rng);
    const BigReal ours = hypergeom_pFq(rats({a1, a2, a3}), rats({b1, b2}), BigReal(z));
    const double ref = boost::math::hypergeometric_pFq(
        {a1.convert_to<double>(), a2.convert_to<double>(), a3.convert_to<double>()},
        {b1.convert_to<double>(), b2.convert_to<double>()}, z);
    EXPECT_NEAR(ours.convert_to<double>() / ref, 1.0, 1e-11) << "trial " << trial;
  }
}
