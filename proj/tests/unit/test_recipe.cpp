#include "latticelab/recipe.hpp"
#include "latticelab/theta_numeric.hpp"

#include <gtest/gtest.h>

using namespace latticelab;

TEST(Recipe, ImaginaryAndProducts) {
  WorkingPrecision wp(40);
  EXPECT_EQ(evaluate_recipe("4*i"), Complex(BigReal(0), BigReal(4)));
  EXPECT_EQ(evaluate_recipe("4i"), Complex(BigReal(0), BigReal(4)));
  EXPECT_EQ(evaluate_recipe("2^3^2"), Complex(512));
  EXPECT_EQ(evaluate_recipe("-2^2"), Complex(-4));
}

TEST(Recipe, BindingsAndImplicitMultiplication) {
  WorkingPrecision wp(50);
  const Complex v = evaluate_recipe("t=12^(1/4); (4-2t-2t^2+t^3)/sqrt(2)");
  const BigReal t = pow(BigReal(12), BigReal(1) / 4);
  const BigReal expected = (4 - 2 * t - 2 * t * t + t * t * t) / sqrt(BigReal(2));
  EXPECT_GT(agreement_digits(v.re, expected), 48);
  EXPECT_EQ(v.im, 0);
  const Complex w = evaluate_recipe("t=12^(1/4); 4i(7+4t+2t^2+t^3)");
  EXPECT_GT(agreement_digits(w.im, 4 * (7 + 4 * t + 2 * t * t + t * t * t)), 48);
}

TEST(Recipe, Functions) {
  WorkingPrecision wp(50);
  EXPECT_GT(agreement_digits(evaluate_recipe("(1+sqrt(17))^2/4").re, pow(1 + sqrt(BigReal(17)), 2) / 4), 48);
  EXPECT_GT(agreement_digits(evaluate_recipe("cbrt(2)*3").re, 3 * cbrt(BigReal(2))), 48);
  EXPECT_GT(agreement_digits(evaluate_recipe("exp(log(5))").re, BigReal(5)), 48);
  EXPECT_GT(agreement_digits(evaluate_recipe("abs(3+4i)").re, BigReal(5)), 48);
  EXPECT_EQ(evaluate_recipe("im(conj(2+3i))"), Complex(-3));
  EXPECT_GT(agreement_digits(evaluate_recipe("alpha(4)").re, singular_modulus(BigReal(4))), 48);
  EXPECT_GT(agreement_digits(evaluate_recipe("pi").re, pi()), 48);
}

TEST(Recipe, ExternalBindings) {
  WorkingPrecision wp(30);
  EXPECT_EQ(evaluate_recipe("2a+1", {{"a", Complex(5)}}), Complex(11));
}

TEST(Recipe, Errors) {
  WorkingPrecision wp(30);
  for (const char* s : {"", "1+", "sqrt(", "foo(2)", "x", "1/0", "t=; t", "(1", "2 ** 3"}) {
    EXPECT_ANY_THROW(evaluate_recipe(s)) << s;
  }
  EXPECT_THROW(evaluate_recipe("unknown_name"), ParseError);
}
