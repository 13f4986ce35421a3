#pragma once

// Mahler measures of the three two-variable families
//     m(a): y + 1/y + z + 1/z + a
//     n(a): y^3 + z^3 + 1 - a y z
//     g(a): (1 + y)(1 + z)(y + z) - a y z
// by hypergeometric series (large |a|) and by Jensen's formula in one
// variable followed by quadrature in the other (any a).

#include "latticelab/bigreal.hpp"
#include "latticelab/complex.hpp"

#include <string>
#include <vector>

namespace latticelab {

struct MahlerArg {
  Complex value;
  std::string recipe;
};

/// Evaluates a radical recipe such as "t=12^(1/4); (4-2t-2t^2+t^3)/sqrt(2)".
MahlerArg mahler_arg(const std::string& recipe);

enum class MahlerFamily { m, n, g };
enum class MahlerRoute { automatic, hypergeometric, jensen, n_combination };

MahlerFamily parse_mahler_family(const std::string& name);

/// log|a| - Re[(2/a^2) 4F3(3/2,3/2,1,1; 2,2,2; 16/a^2)]; needs |a| > 4.
BigReal mahler_m_hyper(const Complex& a);
/// 2 int_0^{1/2} log max|root| of y^2 + (2cos 2 pi t + a) y + 1 dt.
BigReal mahler_m_jensen(const Complex& a);

/// log|a| - Re[(2/a^3) 4F3(4/3,5/3,1,1; 2,2,2; 27/a^3)]; needs |a| > 3.
BigReal mahler_n_hyper(const Complex& a);
/// Jensen in x for x^3 - a y x + (y^3 + 1), quadrature over y = e^{2 pi i t}.
BigReal mahler_n_jensen(const Complex& a);

/// Jensen in z for (y+1) z^2 + (y^2 + (2-a) y + 1) z + y(y+1).
BigReal mahler_g_jensen(const Complex& a);
/// (n((a+4)/a^{2/3}) + 4 n((a-2)/a^{1/3})) / 3 with both n by hypergeometric
/// series. This continuation of the large-|a| relation is only accepted when
/// both n-arguments exceed 3 in modulus; it is wrong for small a (a = 3, 6).
BigReal mahler_g_ncombination(const Complex& a);

/// Route dispatch. `automatic` picks the series when its argument is at most
/// 0.9 in modulus and Jensen otherwise.
BigReal mahler_measure(MahlerFamily f, const Complex& a, MahlerRoute route = MahlerRoute::automatic);

BigReal mahler_m(const Complex& a);
BigReal mahler_n(const Complex& a);
BigReal mahler_g(const Complex& a);

/// Brute-force m(a) by nested quadrature over both torus angles, without
/// Jensen's formula. Slow; intended for low-precision cross-checks.
BigReal mahler_m_torus2d(const Complex& a, int target_digits);

struct NamedMahlerArg {
  std::string name;
  std::string recipe;
};

/// Recipes for the algebraic arguments that occur in the catalogued identities.
std::vector<NamedMahlerArg> catalog_arguments();

}  // namespace latticelab
