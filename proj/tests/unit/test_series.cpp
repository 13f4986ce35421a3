#include "latticelab/series.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

using namespace latticelab;
using namespace latticelab::series;

namespace {

// prod_{n>=1} (1 - q^n) through n_terms, by repeated multiplication in int64.
std::vector<std::int64_t> naive_euler_product(std::size_t n_terms) {
  std::vector<std::int64_t> c(n_terms, 0);
  c[0] = 1;
  for (std::size_t n = 1; n < n_terms; ++n) {
    for (std::size_t i = n_terms - 1; i >= n; --i) c[i] -= c[i - n];
  }
  return c;
}

FormalQSeries from_ints(std::int64_t lead24, const std::vector<long>& v) {
  std::vector<BigInt> c;
  for (long x : v) c.emplace_back(x);
  return FormalQSeries(lead24, c);
}

}  // namespace

TEST(Series, EtaMatchesNaiveEulerProduct) {
  const auto eta = eta_series(1, 300);
  const auto naive = naive_euler_product(300);
  EXPECT_EQ(eta.lead24(), 1);
  ASSERT_EQ(eta.order(), 300u);
  for (std::size_t i = 0; i < 300; ++i) EXPECT_EQ(eta.coeffs()[i], BigInt(naive[i])) << "index " << i;
}

TEST(Series, ScaledEtaIsSubstitution) {
  EXPECT_EQ(eta_series(5, 100), substitute_power(eta_series(1, 20), 5));
  EXPECT_EQ(eta_series(5, 100).lead24(), 5);
}

TEST(Series, EtaTwentyFourthPowerGivesTau) {
  // Delta = eta^24 = q - 24 q^2 + 252 q^3 - 1472 q^4 + 4830 q^5 - 6048 q^6 ...
  const auto delta = series_pow(eta_series(1, 8), 24);
  EXPECT_EQ(delta.lead24(), 24);
  const std::vector<long> tau = {1, -24, 252, -1472, 4830, -6048, -16744, 84480};
  for (std::size_t i = 0; i < tau.size(); ++i) EXPECT_EQ(delta.coeffs()[i], BigInt(tau[i]));
}

TEST(Series, PhiFourthPowerCountsSumsOfFourSquares) {
  // r_4(n) = 8 * sum of divisors d of n with 4 not dividing d
  const auto phi4 = series_pow(theta_series_phi(200), 4);
  for (std::size_t n = 1; n < 200; ++n) {
    long s = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0 && d % 4 != 0) s += static_cast<long>(d);
    }
    EXPECT_EQ(phi4.coeffs()[n], BigInt(8 * s)) << "n = " << n;
  }
}

TEST(Series, JacobiCubeOfEta) {
  // eta^3 = sum_{n>=0} (-1)^n (2n+1) q^{(2n+1)^2/8}
  const auto cube = series_pow(eta_series(1, 400), 3);
  EXPECT_EQ(cube.lead24(), 3);
  for (std::size_t k = 0; k < 400; ++k) {
    const std::int64_t e24 = 3 + 24 * static_cast<std::int64_t>(k);
    long expected = 0;
    for (long n = 0; (2 * n + 1) * (2 * n + 1) * 3 <= e24; ++n) {
      if ((2 * n + 1) * (2 * n + 1) * 3 == e24) expected = (n % 2 ? -1 : 1) * (2 * n + 1);
    }
    EXPECT_EQ(cube.coefficient_at(e24), BigInt(expected));
  }
}

TEST(Series, MultiplicationTruncatesToShorterRange) {
  const auto a = from_ints(0, {1, 1, 1, 1, 1});
  const auto b = from_ints(24, {1, -1});
  const auto p = a * b;
  EXPECT_EQ(p.lead24(), 24);
  EXPECT_EQ(p.order(), 2u);
  EXPECT_EQ(p.bound24(), std::min(a.lead24() + b.bound24(), b.lead24() + a.bound24()));
}

TEST(Series, DivisionInvertsMultiplication) {
  const auto a = eta_series(2, 60);
  const auto b = eta_series(3, 60);
  const auto q = series_div(a * b, b, 50);
  EXPECT_EQ(q.truncated(50), a.truncated(50));
}

TEST(Series, DivisionNeedsUnitLeadingCoefficient) {
  EXPECT_THROW(series_div(eta_series(1, 10), from_ints(0, {2, 1}), 5), DomainError);
}

TEST(Series, AdditionAlignsExponents) {
  const auto a = from_ints(0, {1, 2, 3});
  const auto b = from_ints(24, {5, 5});
  const auto s = a + b;
  EXPECT_EQ(s.lead24(), 0);
  EXPECT_EQ(s.coefficient_at(0), BigInt(1));
  EXPECT_EQ(s.coefficient_at(24), BigInt(7));
  EXPECT_EQ(s.coefficient_at(48), BigInt(8));
  EXPECT_THROW((void)s.coefficient_at(72), DomainError);
}

TEST(Series, SubtractionToZero) {
  const auto a = eta_series(1, 30);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Series, JsonRoundTrip) {
  const auto a = series_pow(eta_series(7, 40), 3);
  EXPECT_EQ(series_from_json(to_json(a)), a);
}

TEST(Series, CoefficientsFromPadsLeadingZeros) {
  const auto a = from_ints(48, {3, 4});
  const auto c = a.coefficients_from(0, 4);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], BigInt(0));
  EXPECT_EQ(c[1], BigInt(0));
  EXPECT_EQ(c[2], BigInt(3));
  EXPECT_EQ(c[3], BigInt(4));
}
