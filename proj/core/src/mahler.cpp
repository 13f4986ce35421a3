#include "latticelab/mahler.hpp"

#include "latticelab/hypergeometric.hpp"
#include "latticelab/polynomial_roots.hpp"
#include "latticelab/quadrature.hpp"
#include "latticelab/recipe.hpp"

#include <algorithm>

namespace latticelab {
namespace {

QuadratureOptions jensen_options() {
  QuadratureOptions o;
  o.target_digits = static_cast<int>(working_digits()) - 4;
  o.scale = 1;
  return o;
}

// Sorted breakpoints in [lo, hi], always including both ends.
std::vector<BigReal> with_ends(std::vector<BigReal> pts, const BigReal& lo, const BigReal& hi) {
  pts.push_back(lo);
  pts.push_back(hi);
  std::vector<BigReal> kept;
  for (auto& p : pts) {
    if (p >= lo && p <= hi) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

// acos(v)/(2 pi) for |v| <= 1, appended to pts.
void add_angle(std::vector<BigReal>& pts, const BigReal& v, const BigReal& scale) {
  if (v >= -1 && v <= 1) pts.push_back(acos(v) / scale);
}

BigReal log_max_root_modulus(const Complex& b, const Complex& c) {
  const auto r = quadratic_roots(Complex(1), b, c);
  return log(std::max(abs(r[0]), abs(r[1])));
}

BigReal integrate_inner(const std::function<BigReal(const BigReal&)>& inner, const std::vector<BigReal>& pts,
                        const char* what) {
  const auto res = integrate_piecewise(
      [&inner](const BigReal& x, const BigReal&, const BigReal&) { return inner(x); }, pts, jensen_options());
  return require_converged(res, what).value;
}

Complex unit_circle(const BigReal& theta) { return Complex::polar(BigReal(1), 2 * pi() * theta); }

// Roots of x^3 - a y x + (y^3 + 1) for y = e^{2 pi i theta}.
std::array<Complex, 3> n_fiber_roots(const Complex& a, const BigReal& theta) {
  const Complex y = unit_circle(theta);
  return cubic_roots(Complex(1), Complex(0), -(a * y), pow(y, 3L) + Complex(1));
}

int roots_outside(const std::array<Complex, 3>& r) {
  int n = 0;
  for (const auto& x : r) n += abs(x) > 1 ? 1 : 0;
  return n;
}

// Points where a fiber root crosses the unit circle, found as changes in the
// number of roots outside it on a grid refined by bisection.
std::vector<BigReal> n_kinks(const Complex& a, const BigReal& lo, const BigReal& hi) {
  constexpr int grid = 192;
  std::vector<BigReal> kinks;
  BigReal prev_t = lo;
  int prev = roots_outside(n_fiber_roots(a, lo));
  const BigReal stop = working_epsilon() * 10;
  for (int k = 1; k <= grid; ++k) {
    const BigReal t = lo + (hi - lo) * k / grid;
    const int cur = roots_outside(n_fiber_roots(a, t));
    if (cur != prev) {
      BigReal l = prev_t;
      BigReal r = t;
      while (r - l > stop) {
        const BigReal mid = (l + r) / 2;
        if (roots_outside(n_fiber_roots(a, mid)) == prev) {
          l = mid;
        } else {
          r = mid;
        }
      }
      kinks.push_back((l + r) / 2);
    }
    prev = cur;
    prev_t = t;
  }
  return kinks;
}

}  // namespace

MahlerArg mahler_arg(const std::string& recipe) { return {evaluate_recipe(recipe), recipe}; }

MahlerFamily parse_mahler_family(const std::string& name) {
  if (name == "m") return MahlerFamily::m;
  if (name == "n") return MahlerFamily::n;
  if (name == "g") return MahlerFamily::g;
  throw ParseError("unknown Mahler family '" + name + "' (expected m, n or g)");
}

BigReal mahler_m_hyper(const Complex& a) {
  if (!(abs(a) > 4)) throw DomainError("m hypergeometric series needs |a| > 4");
  const Complex a2 = a * a;
  const Complex f = hypergeom_pFq({BigRational(3, 2), BigRational(3, 2), BigRational(1), BigRational(1)},
                                  {BigRational(2), BigRational(2), BigRational(2)}, Complex(16) / a2);
  return log(abs(a)) - (Complex(2) / a2 * f).re;
}

BigReal mahler_m_jensen(const Complex& a) {
  auto inner = [&a](const BigReal& theta) {
    const Complex c = Complex(BigReal(2 * cos(2 * pi() * theta))) + a;
    return log_max_root_modulus(c, Complex(1));
  };
  std::vector<BigReal> pts;
  if (a.is_real()) {
    // |2 cos 2 pi t + a| = 2 separates the zero and nonzero pieces.
    const BigReal two_pi = 2 * pi();
    add_angle(pts, (2 - a.re) / 2, two_pi);
    add_angle(pts, (-2 - a.re) / 2, two_pi);
  }
  return 2 * integrate_inner(inner, with_ends(pts, BigReal(0), BigReal(0.5)), "m Jensen quadrature");
}

BigReal mahler_n_hyper(const Complex& a) {
  if (!(abs(a) > 3)) throw DomainError("n hypergeometric series needs |a| > 3");
  const Complex a3 = a * a * a;
  const Complex f = hypergeom_pFq({BigRational(4, 3), BigRational(5, 3), BigRational(1), BigRational(1)},
                                  {BigRational(2), BigRational(2), BigRational(2)}, Complex(27) / a3);
  return log(abs(a)) - (Complex(2) / a3 * f).re;
}

BigReal mahler_n_jensen(const Complex& a) {
  auto inner = [&a](const BigReal& theta) {
    BigReal s = 0;
    for (const auto& x : n_fiber_roots(a, theta)) {
      const BigReal m = abs(x);
      if (m > 1) s += log(m);
    }
    return s;
  };
  // Period 1/3 in theta; real a adds the reflection theta -> -theta.
  const BigReal hi = a.is_real() ? BigReal(1) / 6 : BigReal(1) / 3;
  const BigReal factor = a.is_real() ? 6 : 3;
  const auto pts = with_ends(n_kinks(a, BigReal(0), hi), BigReal(0), hi);
  return factor * integrate_inner(inner, pts, "n Jensen quadrature");
}

BigReal mahler_g_jensen(const Complex& a) {
  // Over y = e^{2 pi i t} the fiber quadrature reduces (with C = cos pi t and
  // W = (y+1) z / sqrt(y)) to W^2 + (4C^2 - a) W + 4C^2 = 0, and the inner
  // Jensen integral is log max|W|. The fiber at y = -1 is measure zero.
  auto inner = [&a](const BigReal& theta) {
    const BigReal c = cos(pi() * theta);
    const BigReal c4 = 4 * c * c;
    return log_max_root_modulus(Complex(c4) - a, Complex(c4));
  };
  std::vector<BigReal> pts;
  if (a.is_real() && a.re >= -1) {
    // |4C^2 - a| = 4C at C = (+-1 +- sqrt(1+a))/2.
    const BigReal r = sqrt(1 + a.re);
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        const BigReal c = (s1 + s2 * r) / 2;
        if (c > 0 && c < 1) pts.push_back(acos(c) / pi());
      }
    }
  }
  return 2 * integrate_inner(inner, with_ends(pts, BigReal(0), BigReal(0.5)), "g Jensen quadrature");
}

BigReal mahler_g_ncombination(const Complex& a) {
  if (norm(a) == 0) throw DomainError("g n-combination needs a != 0");
  const Complex b1 = (a + Complex(4)) / pow(a, Complex(BigReal(2) / 3));
  const Complex b2 = (a - Complex(2)) / pow(a, Complex(BigReal(1) / 3));
  if (!(abs(b1) > 3 && abs(b2) > 3)) {
    throw DomainError("g n-combination is only used where both n-arguments exceed 3 in modulus (|" +
                      to_string(b1, 8) + "|, |" + to_string(b2, 8) + "|)");
  }
  return (mahler_n_hyper(b1) + 4 * mahler_n_hyper(b2)) / 3;
}

BigReal mahler_measure(MahlerFamily f, const Complex& a, MahlerRoute route) {
  const BigReal series_limit("0.9");
  switch (f) {
    case MahlerFamily::m:
      if (route == MahlerRoute::n_combination) throw DomainError("n-combination route applies to g only");
      if (route == MahlerRoute::hypergeometric ||
          (route == MahlerRoute::automatic && norm(a) > 0 && BigReal(16) / norm(a) <= series_limit)) {
        return mahler_m_hyper(a);
      }
      return mahler_m_jensen(a);
    case MahlerFamily::n:
      if (route == MahlerRoute::n_combination) throw DomainError("n-combination route applies to g only");
      if (route == MahlerRoute::hypergeometric ||
          (route == MahlerRoute::automatic && norm(a) > 0 && BigReal(27) / (abs(a) * norm(a)) <= series_limit)) {
        return mahler_n_hyper(a);
      }
      return mahler_n_jensen(a);
    case MahlerFamily::g:
      if (route == MahlerRoute::hypergeometric) throw DomainError("g has no direct hypergeometric route");
      if (route == MahlerRoute::n_combination) return mahler_g_ncombination(a);
      return mahler_g_jensen(a);
  }
  throw DomainError("unknown Mahler family");
}

BigReal mahler_m(const Complex& a) { return mahler_measure(MahlerFamily::m, a); }
BigReal mahler_n(const Complex& a) { return mahler_measure(MahlerFamily::n, a); }
BigReal mahler_g(const Complex& a) { return mahler_measure(MahlerFamily::g, a); }

BigReal mahler_m_torus2d(const Complex& a, int target_digits) {
  QuadratureOptions opts;
  opts.target_digits = target_digits;
  opts.max_level = 10;
  opts.scale = 1;
  const BigReal half(0.5);
  const BigReal two_pi = 2 * pi();

  // For fixed theta2, int_0^1 log|2 cos 2 pi s + c| ds with c = 2 cos 2 pi theta2 + a.
  auto inner = [&](const BigReal& theta2) {
    const Complex c = Complex(BigReal(2 * cos(two_pi * theta2))) + a;
    if (c.is_real() && abs(c.re) <= 2) {
      // 2 cos 2 pi s + c = -4 sin(pi(s + s*)) sin(pi(s - s*)), s* = acos(-c/2)/(2 pi):
      // the log singularity at s* is a breakpoint and s - s* comes from the
      // endpoint distances without cancellation.
      const BigReal star = acos(-c.re / 2) / two_pi;
      auto f = [&](const BigReal& s, const BigReal& from_a, const BigReal& from_b) {
        const BigReal d = (s < star) ? BigReal(-from_b) : from_a;
        return BigReal(log(abs(4 * sin(pi() * (s + star)) * sin(pi() * d))));
      };
      std::vector<BigReal> pts = with_ends({star}, BigReal(0), half);
      BigReal total = 0;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i] < pts[i + 1])) continue;
        const BigReal lo = pts[i];
        const BigReal hi = pts[i + 1];
        total += require_converged(integrate_tanh_sinh(f, lo, hi, opts), "torus inner quadrature").value;
      }
      return BigReal(2 * total);
    }
    auto g = [&](const BigReal& s) {
      const Complex v = Complex(BigReal(2 * cos(two_pi * s))) + c;
      return BigReal(log(abs(v)));
    };
    return BigReal(2 * require_converged(integrate_tanh_sinh(g, BigReal(0), half, opts), "torus inner quadrature")
                           .value);
  };

  std::vector<BigReal> pts;
  if (a.is_real()) {
    add_angle(pts, (2 - a.re) / 2, two_pi);
    add_angle(pts, (-2 - a.re) / 2, two_pi);
  }
  pts = with_ends(pts, BigReal(0), half);
  const auto res = integrate_piecewise(
      [&inner](const BigReal& x, const BigReal&, const BigReal&) { return inner(x); }, pts, opts);
  return 2 * require_converged(res, "torus outer quadrature").value;
}

std::vector<NamedMahlerArg> catalog_arguments() {
  const std::string t = "t=12^(1/4); ";
  const std::string a25 = "a25=(sqrt(5)-1)^8 (5^(1/4)-1)^8/2^13; ";
  return {
      {"4i", "4i"},
      {"theta9-real", t + "(4-2t-2t^2+t^3)/sqrt(2)"},
      {"theta9-imag", t + "4i(7+4t+2t^2+t^3)"},
      {"2sqrt2", "2sqrt(2)"},
      {"alpha25-real", a25 + "4sqrt(a25)"},
      {"alpha25-imag", a25 + "4i sqrt((1-a25)/a25)"},
      {"3cbrt2", "3*2^(1/3)"},
      {"2cbrt4", "2*4^(1/3)"},
      {"sqrt17-square", "(1+sqrt(17))^2/4"},
      {"sqrt17", "sqrt(17)"},
      {"1", "1"},
      {"2", "2"},
      {"3", "3"},
  };
}

}  // namespace latticelab
