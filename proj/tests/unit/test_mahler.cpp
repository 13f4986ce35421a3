#include "latticelab/mahler.hpp"
#include "latticelab/recipe.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <gtest/gtest.h>

using namespace latticelab;

namespace {

BigReal catalan_constant() { return boost::math::constants::catalan<BigReal>(); }

// L(chi_{-3}, 2) = (psi'(1/3) - psi'(2/3)) / 9
BigReal l_chi3_2() {
  return (boost::math::trigamma(BigReal(1) / 3) - boost::math::trigamma(BigReal(2) / 3)) / 9;
}

}  // namespace

TEST(Mahler, ZeroArguments) {
  WorkingPrecision wp(40);
  // m(x + 1/x + y + 1/y) = 0
  EXPECT_LT(abs(mahler_m_jensen(Complex(0))), ten_to_minus(30));
  // (1+y)(1+z)(y+z): product of cyclotomic-type factors, measure 0
  EXPECT_LT(abs(mahler_g_jensen(Complex(0))), ten_to_minus(30));
}

TEST(Mahler, MAtFourIsCatalan) {
  WorkingPrecision wp(40);
  const BigReal expected = 4 * catalan_constant() / pi();
  EXPECT_GT(agreement_digits(mahler_m_jensen(Complex(4)), expected), 35);
}

TEST(Mahler, NAtZeroIsDirichletL) {
  WorkingPrecision wp(40);
  const BigReal expected = 3 * sqrt(BigReal(3)) / (4 * pi()) * l_chi3_2();
  EXPECT_GT(agreement_digits(mahler_n_jensen(Complex(0)), expected), 35);
}

TEST(Mahler, SeriesAgreesWithJensen) {
  WorkingPrecision wp(40);
  for (const char* r : {"8", "5i", "6+2i", "2sqrt(17)"}) {
    const Complex a = evaluate_recipe(r);
    EXPECT_GT(agreement_digits(mahler_m_hyper(a), mahler_m_jensen(a)), 35) << r;
  }
  for (const char* r : {"6", "5i", "4+3i"}) {
    const Complex a = evaluate_recipe(r);
    EXPECT_GT(agreement_digits(mahler_n_hyper(a), mahler_n_jensen(a)), 35) << r;
  }
}

TEST(Mahler, GCombinationAgreesWithJensenForLargeArguments) {
  WorkingPrecision wp(40);
  for (int a : {10, 12, 20}) {
    EXPECT_GT(agreement_digits(mahler_g_ncombination(Complex(a)), mahler_g_jensen(Complex(a))), 33) << a;
  }
  EXPECT_THROW(mahler_g_ncombination(Complex(3)), DomainError);
}

TEST(Mahler, SeriesOutsideItsDiskThrows) {
  WorkingPrecision wp(30);
  EXPECT_THROW(mahler_m_hyper(Complex(3)), DomainError);
  EXPECT_THROW(mahler_n_hyper(Complex(2)), DomainError);
}

TEST(Mahler, RouteDispatch) {
  WorkingPrecision wp(30);
  const Complex a(8);
  EXPECT_GT(agreement_digits(mahler_measure(MahlerFamily::m, a, MahlerRoute::hypergeometric),
                             mahler_measure(MahlerFamily::m, a, MahlerRoute::jensen)),
            25);
  EXPECT_EQ(parse_mahler_family("n"), MahlerFamily::n);
  EXPECT_THROW(parse_mahler_family("q"), ParseError);
}

TEST(Mahler, TorusQuadratureAgreesWithJensen) {
  WorkingPrecision wp(30);
  const Complex a = evaluate_recipe("4i");
  EXPECT_GT(agreement_digits(mahler_m_torus2d(a, 15), mahler_m_jensen(a)), 14);
}

TEST(Mahler, CatalogArgumentsEvaluate) {
  WorkingPrecision wp(30);
  const auto args = catalog_arguments();
  EXPECT_FALSE(args.empty());
  for (const auto& x : args) EXPECT_NO_THROW((void)mahler_arg(x.recipe)) << x.name;
}
