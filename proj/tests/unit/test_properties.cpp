// Seeded randomized property checks.

#include "latticelab/eta_expression.hpp"
#include "latticelab/lattice_sums.hpp"
#include "latticelab/series.hpp"
#include "latticelab/theta_numeric.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace latticelab;
using namespace latticelab::series;

namespace {

constexpr std::uint32_t kSeed = 0x5eed1234;

FormalQSeries random_series(std::mt19937& rng, std::int64_t lead24, std::size_t order) {
  std::uniform_int_distribution<long> c(-50, 50);
  std::vector<BigInt> v;
  for (std::size_t i = 0; i < order; ++i) v.emplace_back(c(rng));
  return FormalQSeries(lead24, v);
}

EtaExpression random_expression(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_terms(1, 3);
  std::uniform_int_distribution<int> n_factors(1, 4);
  std::uniform_int_distribution<int> scale(1, 12);
  std::uniform_int_distribution<int> power(-3, 4);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  EtaExpression x;
  const int t = n_terms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<EtaFactor> f;
    const int k = n_factors(rng);
    for (int j = 0; j < k; ++j) {
      const int p = power(rng);
      f.push_back({static_cast<unsigned>(scale(rng)), p == 0 ? 1 : p});
    }
    int c = num(rng);
    if (c == 0) c = 1;
    x = x + eta_monomial(BigRational(c, den(rng)), f);
  }
  return x;
}

}  // namespace

TEST(Properties, SeriesRingAxioms) {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_series(rng, 0, 30);
    const auto b = random_series(rng, 24, 30);
    const auto c = random_series(rng, 48, 30);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Properties, DivisionInvertsMultiplication) {
  std::mt19937 rng(kSeed + 1);
  std::uniform_int_distribution<long> coeff(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigInt> c{BigInt(trial % 2 ? 1 : -1)};
    for (int i = 1; i < 25; ++i) c.emplace_back(coeff(rng));
    const FormalQSeries b(0, c);
    const auto a = random_series(rng, 24, 25);
    const auto ab = a * b;
    EXPECT_EQ(series_div(ab, b, 25), a.truncated(ab.order()));
  }
}

TEST(Properties, ExpressionPrintParseRoundTrip) {
  std::mt19937 rng(kSeed + 2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_expression(rng);
    const auto y = parse_eta_expression(x.str());
    EXPECT_EQ(y.str(), x.str());
  }
}

TEST(Properties, SeriesJsonRoundTrip) {
  std::mt19937 rng(kSeed + 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, static_cast<std::int64_t>(trial) * 5 - 30, 40);
    EXPECT_EQ(series_from_json(nlohmann::json::parse(to_json(a).dump())), a);
  }
}

TEST(Properties, EtaInversion) {
  WorkingPrecision wp(50);
  std::mt19937 rng(kSeed + 4);
  std::uniform_real_distribution<double> t(0.05, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const BigReal s(t(rng));
    // eta(i/s) = sqrt(s) eta(i s)
    EXPECT_GT(agreement_digits(eta_numeric(1 / s), sqrt(s) * eta_numeric(s)), 45) << s;
  }
}

TEST(Properties, WeightThreeHalvesInvolution) {
  WorkingPrecision wp(50);
  std::mt19937 rng(kSeed + 5);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const BigReal x(u(rng));
    EXPECT_GT(agreement_digits(theta_weight32(x), pow(x, BigReal(-3) / 2) * theta_weight32(1 / x)), 45) << x;
  }
}

TEST(Properties, LatticeSumScaleAndPermutation) {
  WorkingPrecision wp(30);
  std::mt19937 rng(kSeed + 6);
  std::uniform_int_distribution<int> e(1, 6);
  std::uniform_int_distribution<int> k(2, 5);
  for (int trial = 0; trial < 4; ++trial) {
    std::array<int, 4> v = {e(rng), e(rng), e(rng), e(rng)};
    const int s = k(rng);
    const auto base = LatticeSpec::make(v[0], v[1], v[2], v[3]);
    const auto scaled = LatticeSpec::make(s * v[0], s * v[1], s * v[2], s * v[3]);
    const auto perm = LatticeSpec::make(v[2], v[0], v[3], v[1]);
    const BigReal f = F_integral(base, 22);
    EXPECT_GT(agreement_digits(f, F_integral(scaled, 22)), 22) << base.str();
    EXPECT_GT(agreement_digits(f, F_integral(perm, 22)), 22) << base.str();
  }
}
