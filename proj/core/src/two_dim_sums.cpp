#include "latticelab/two_dim_sums.hpp"

#include "latticelab/mahler.hpp"
#include "latticelab/theta_numeric.hpp"

#include <cmath>

namespace latticelab {
namespace {

// Sums (-1)^n term(n) until the terms are decreasing in magnitude and the
// next one is below the tolerance; for an alternating series with decreasing
// terms that term bounds the tail.
template <class Term>
BigReal alternating_sum(Term&& term, const BigReal& tol, const char* what) {
  BigReal sum = 0;
  BigReal prev_mag = -1;
  for (long n = 0; n < 10'000'000; ++n) {
    const BigReal t = term(n);
    const BigReal mag = abs(t);
    sum += (n % 2 == 0) ? t : BigReal(-t);
    if (prev_mag >= 0 && mag <= prev_mag) {
      // next term is at most this one; stop once it is negligible
      if (mag <= tol * abs(sum)) return sum;
    }
    prev_mag = mag;
  }
  throw ConvergenceError(std::string(what) + " did not converge");
}

}  // namespace

TwoDimVariant parse_two_dim_variant(const std::string& name) {
  if (name == "odd-odd") return TwoDimVariant::odd_odd;
  if (name == "odd-even-alt") return TwoDimVariant::odd_even_alt;
  if (name == "log-series") return TwoDimVariant::log_series;
  throw ParseError("unknown two-dimensional sum '" + name + "' (odd-odd, odd-even-alt, log-series)");
}

std::string to_string(TwoDimVariant v) {
  switch (v) {
    case TwoDimVariant::odd_odd:
      return "odd-odd";
    case TwoDimVariant::odd_even_alt:
      return "odd-even-alt";
    case TwoDimVariant::log_series:
      return "log-series";
  }
  return "?";
}

BigReal sum2d(const TwoDimSumSpec& spec, int target_digits) {
  const BigReal& x = spec.x;
  if (!(x > 0)) throw DomainError("two-dimensional sum needs x > 0");
  const BigReal p = pi();
  const BigReal rx = sqrt(x);
  const BigReal tol = ten_to_minus(target_digits + 2);

  switch (spec.variant) {
    case TwoDimVariant::odd_odd: {
      // With c = m/sqrt(x) and E = e^{pi c},
      //   sum_{k>=0} 1/(m^2 + x(2k+1)^2)^2
      //     = pi/(8 sqrt(x) m^3) (1 - 2/(E+1)) - pi^2/(16 x m^2) 4E/(E+1)^2.
      // Weighting by (-1)^n m, the leading pi/(8 sqrt(x) m^2) part sums to
      // pi G/(8 sqrt x) with G Catalan's constant.
      auto term = [&](long n) {
        const BigReal m = 2 * n + 1;
        const BigReal e = exp(-p * m / rx);  // 1/E, keeps everything bounded
        const BigReal a = -(p / (8 * rx * m * m)) * 2 * e / (1 + e);
        const BigReal b = -(p * p / (16 * x * m)) * 4 * e / ((1 + e) * (1 + e));
        return BigReal(a + b);
      };
      return p * catalan() / (8 * rx) + alternating_sum(term, tol, "odd-odd sum");
    }
    case TwoDimVariant::odd_even_alt: {
      // sum_{k in Z} (-1)^k/(m^2 + 4x k^2)^2 = 1/(16 x^2) [pi/(2 C^3 sinh pi C)
      //   + pi^2 cosh(pi C)/(2 C^2 sinh^2 pi C)], C = m/(2 sqrt x).
      auto term = [&](long n) {
        const BigReal m = 2 * n + 1;
        const BigReal c = m / (2 * rx);
        const BigReal e = exp(-p * c);
        const BigReal inv_sinh = 2 * e / (1 - e * e);               // 1/sinh(pi C)
        const BigReal coth_csch = 2 * e * (1 + e * e) / ((1 - e * e) * (1 - e * e));  // cosh/sinh^2
        const BigReal inner = p / (2 * c * c * c) * inv_sinh + p * p / (2 * c * c) * coth_csch;
        return BigReal(m / (16 * x * x) * inner);
      };
      return alternating_sum(term, tol, "odd-even alternating sum");
    }
    case TwoDimVariant::log_series: {
      auto term = [&](long n) {
        const BigReal m = 2 * n + 1;
        return BigReal(m * 2 * atanh(exp(-p * rx * m / 2)));
      };
      return p * p / (16 * rx) * alternating_sum(term, tol, "log series");
    }
  }
  throw DomainError("unknown two-dimensional sum");
}

long double sum2d_partial(const TwoDimSumSpec& spec, int n_max, int k_max) {
  const long double x = spec.x.convert_to<long double>();
  long double total = 0;
  for (int n = 0; n < n_max; ++n) {
    const long double m = 2.0L * n + 1;
    const long double sn = (n % 2 == 0) ? 1.0L : -1.0L;
    long double inner = 0;
    switch (spec.variant) {
      case TwoDimVariant::odd_odd:
        for (int k = 0; k < k_max; ++k) {
          const long double d = m * m + x * (2.0L * k + 1) * (2.0L * k + 1);
          inner += 1 / (d * d);
        }
        break;
      case TwoDimVariant::odd_even_alt:
        for (int k = -k_max + 1; k < k_max; ++k) {
          const long double d = m * m + x * 4.0L * k * k;
          inner += ((k % 2 == 0) ? 1.0L : -1.0L) / (d * d);
        }
        break;
      case TwoDimVariant::log_series: {
        const long double e = std::exp(-3.14159265358979323846264338327950288L * std::sqrt(x) * m / 2);
        inner = std::log((1 + e) / (1 - e)) * 3.14159265358979323846264338327950288L *
                3.14159265358979323846264338327950288L / (16 * std::sqrt(x) * m * m);
        break;
      }
    }
    total += sn * m * inner;
  }
  return total;
}

BigReal closed_form_sum(const BigReal& x) {
  if (!(x > 0)) throw DomainError("closed_form_sum needs x > 0");
  const BigReal alpha = singular_modulus(x);
  return pi() * pi() / (32 * sqrt(x)) * mahler_m(Complex(BigReal(4 * sqrt(alpha))));
}

}  // namespace latticelab
