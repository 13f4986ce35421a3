#include "latticelab/polynomial_roots.hpp"

namespace latticelab {

std::array<Complex, 2> quadratic_roots(const Complex& a, const Complex& b, const Complex& c) {
  if (norm(a) == 0) throw DomainError("quadratic with zero leading coefficient");
  const Complex disc = sqrt(b * b - Complex(4) * a * c);
  // Pick the sign that avoids cancellation in -b -+ disc.
  const BigReal dot = b.re * disc.re + b.im * disc.im;
  const Complex s = (dot >= 0) ? -(b + disc) : -(b - disc);
  if (norm(s) == 0) return {Complex(0), Complex(0)};  // b = disc = 0, so c = 0
  const Complex r1 = s / (Complex(2) * a);
  const Complex r2 = (Complex(2) * c) / s;
  return {r1, r2};
}

Complex polynomial_value(const std::array<Complex, 4>& coeffs, const Complex& x) {
  Complex v = coeffs[3];
  for (int i = 2; i >= 0; --i) v = v * x + coeffs[static_cast<std::size_t>(i)];
  return v;
}

std::array<Complex, 3> cubic_roots(const Complex& a, const Complex& b, const Complex& c, const Complex& d) {
  if (norm(a) == 0) throw DomainError("cubic with zero leading coefficient");
  // Monic x^3 + B x^2 + C x + D, then x = y - B/3: y^3 + p y + q.
  const Complex B = b / a;
  const Complex C = c / a;
  const Complex D = d / a;
  const Complex shift = B / Complex(3);
  const Complex p = C - B * B / Complex(3);
  const Complex q = Complex(2) * B * B * B / Complex(27) - B * C / Complex(3) + D;

  std::array<Complex, 3> y;
  if (norm(p) == 0) {
    const Complex r = cbrt(-q);
    const Complex w(BigReal(-0.5), sqrt(BigReal(3)) / 2);
    y = {r, r * w, r * w * w};
  } else {
    // u^3 = -q/2 +- sqrt(q^2/4 + p^3/27); take the larger |u^3| for stability.
    const Complex h = sqrt(q * q / Complex(4) + p * p * p / Complex(27));
    Complex u3 = -q / Complex(2) + h;
    const Complex alt = -q / Complex(2) - h;
    if (norm(alt) > norm(u3)) u3 = alt;
    const Complex u = cbrt(u3);
    const Complex w(BigReal(-1) / 2, sqrt(BigReal(3)) / 2);
    Complex uk = u;
    for (auto& yk : y) {
      yk = uk - p / (Complex(3) * uk);
      uk = uk * w;
    }
  }

  const std::array<Complex, 4> poly{D, C, B, Complex(1)};
  const std::array<Complex, 4> dpoly{C, Complex(2) * B, Complex(3), Complex(0)};
  std::array<Complex, 3> roots;
  for (std::size_t i = 0; i < 3; ++i) {
    Complex x = y[i] - shift;
    for (int it = 0; it < 8; ++it) {
      const Complex fx = polynomial_value(poly, x);
      const Complex dfx = polynomial_value(dpoly, x);
      if (norm(dfx) == 0 || norm(fx) == 0) break;
      const Complex step = fx / dfx;
      x -= step;
      if (abs(step) <= working_epsilon() * (1 + abs(x))) break;
    }
    roots[i] = x;
  }
  return roots;
}

}  // namespace latticelab
