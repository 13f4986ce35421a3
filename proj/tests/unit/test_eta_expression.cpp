#include "latticelab/eta_expression.hpp"

#include <gtest/gtest.h>

using namespace latticelab;
using namespace latticelab::series;

TEST(EtaParse, SingleMonomial) {
  const auto x = parse_eta_expression("3 e1 e2 e9 e18");
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.terms()[0].coefficient, BigRational(3));
  EXPECT_EQ(x.terms()[0].factors.size(), 4u);
  EXPECT_EQ(x.terms()[0].lead24(), 1 + 2 + 9 + 18);
  EXPECT_EQ(x.terms()[0].weight(), BigRational(2));
}

TEST(EtaParse, QuotientsAndGroups) {
  const auto a = parse_eta_expression("e1^5/(e2^2 e7)");
  const auto b = parse_eta_expression("e1^5 e2^-2 e7^-1");
  EXPECT_EQ(a.terms()[0].lead24(), 5 - 4 - 7);
  EXPECT_EQ(a.terms()[0].lead24(), b.terms()[0].lead24());
  EXPECT_EQ(a.terms()[0].weight(), BigRational(1));
}

TEST(EtaParse, AlternativeSpellings) {
  const auto a = parse_eta_expression("eta(q^4)^2 * e3");
  EXPECT_EQ(a.terms()[0].lead24(), 8 + 3);
  const auto b = parse_eta_expression("1/2*e1^3 - e2");
  ASSERT_EQ(b.terms().size(), 2u);
  EXPECT_EQ(b.terms()[0].coefficient, BigRational(1, 2));
  EXPECT_EQ(b.terms()[1].coefficient, BigRational(-1));
}

TEST(EtaParse, StrRoundTrips) {
  for (const char* s : {"e2 e6 e10 e30 - e1 e12 e15 e20", "-7 e1 e7^3 + 8 e2^5 e14/e1^2", "1/3 e4"}) {
    const auto x = parse_eta_expression(s);
    const auto y = parse_eta_expression(x.str());
    EXPECT_EQ(x.str(), y.str());
    EXPECT_EQ(x.min_lead24(), y.min_lead24());
  }
}

TEST(EtaParse, RejectsMalformed) {
  for (const char* s : {"", "e0", "e1^", "x2", "e1 +", "(e1", "e1^2/(e2"}) {
    EXPECT_THROW(parse_eta_expression(s), ParseError) << s;
  }
}

TEST(EtaExpand, MonomialMatchesSeriesProduct) {
  const auto x = parse_eta_expression("e1 e2^2");
  const auto s = expand_expression(x, 80);
  const auto ref = eta_series(1, 80) * series_pow(eta_series(2, 80), 2);
  for (std::int64_t k = 0; k < 80; ++k) {
    const std::int64_t e = 5 + 24 * k;
    EXPECT_EQ(s.coefficient_at(e), BigRational(ref.coefficient_at(e)));
  }
}

TEST(EtaExpand, RationalCoefficientsUseDenominator) {
  const auto s = expand_expression(parse_eta_expression("1/2 e1 - 1/3 e1"), 10);
  EXPECT_EQ(s.coefficient_at(1), BigRational(1, 6));
  EXPECT_EQ(s.coefficient_at(25), BigRational(-1, 6));
}

TEST(EtaExpand, MixedExponentClassesRejected) {
  EXPECT_THROW(expand_expression(parse_eta_expression("e1 + e2"), 10), DomainError);
}

TEST(EtaIdentity, SmallestThreeTermIdentityHolds) {
  const auto v = verify_coefficient_identity(parse_eta_expression("e2 e6 e10 e30"),
                                             parse_eta_expression("e1 e12 e15 e20 + e3 e4 e5 e60"), 200);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.checked, 200u);
  EXPECT_FALSE(v.first_mismatch);
}

TEST(EtaIdentity, FirstMismatchIsReported) {
  // e1^2 = q^{1/12}(1 - 2q - q^2 + ...), e2 = q^{1/12}(1 - q^2 - ...)
  const auto v = verify_coefficient_identity(parse_eta_expression("e1^2"), parse_eta_expression("e2"), 10);
  EXPECT_FALSE(v.pass);
  ASSERT_TRUE(v.first_mismatch);
  EXPECT_EQ(v.first_mismatch->exponent, BigRational(13, 12));
  EXPECT_EQ(v.first_mismatch->lhs, BigRational(-2));
  EXPECT_EQ(v.first_mismatch->rhs, BigRational(0));
  EXPECT_EQ(v.checked, 2u);
}

TEST(Sturm, IndexAndBound) {
  EXPECT_EQ(gamma0_index(1), 1u);
  EXPECT_EQ(gamma0_index(18), 36u);
  EXPECT_EQ(gamma0_index(60), 144u);
  EXPECT_EQ(gamma0_index(17), 18u);
  EXPECT_EQ(sturm_bound(60, 2), 25u);
  EXPECT_EQ(sturm_bound(18, 2), 7u);
  EXPECT_EQ(sturm_bound(28, 2), 9u);
  EXPECT_THROW(sturm_bound(10, 3), DomainError);
}

TEST(Lacunarity, JacobiCubeDensityIsExact) {
  // e1^3 has nonzero coefficients exactly at k(k+1)/2.
  const auto p = lacunarity_scan(parse_eta_expression("e1^3"), 1000, 250);
  ASSERT_EQ(p.nonzero_counts.size(), 4u);
  for (std::size_t w = 0; w < 4; ++w) {
    std::size_t expected = 0;
    for (std::size_t k = 0; k * (k + 1) / 2 < 1000; ++k) {
      const std::size_t t = k * (k + 1) / 2;
      if (t >= 250 * w && t < 250 * (w + 1)) ++expected;
    }
    EXPECT_EQ(p.nonzero_counts[w], expected);
    EXPECT_DOUBLE_EQ(p.densities[w], static_cast<double>(expected) / 250);
  }
}

TEST(Lacunarity, WindowMustDivide) {
  EXPECT_THROW(lacunarity_scan(parse_eta_expression("e1"), 100, 30), DomainError);
}

TEST(Lacunarity, CsvHasHeaderAndRows) {
  const auto p = lacunarity_scan(parse_eta_expression("e1"), 100, 25);
  const std::string csv = to_csv(p);
  EXPECT_EQ(csv.rfind("window_start,window_end,nonzero,density\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}
