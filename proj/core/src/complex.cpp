#include "latticelab/complex.hpp"

namespace latticelab {

Complex Complex::polar(const BigReal& modulus, const BigReal& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  BigReal r = re * o.re - im * o.im;
  BigReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (o.re == 0 && o.im == 0) throw DomainError("complex division by zero");
  if (abs(o.re) >= abs(o.im)) {
    BigReal ratio = o.im / o.re;
    BigReal den = o.re + o.im * ratio;
    BigReal r = (re + im * ratio) / den;
    BigReal i = (im - re * ratio) / den;
    re = std::move(r);
    im = std::move(i);
  } else {
    BigReal ratio = o.re / o.im;
    BigReal den = o.re * ratio + o.im;
    BigReal r = (re * ratio + im) / den;
    BigReal i = (im * ratio - re) / den;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return {BigReal(-a.re), BigReal(-a.im)}; }
bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

BigReal abs(const Complex& z) { return hypot(z.re, z.im); }
BigReal norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
BigReal arg(const Complex& z) { return atan2(z.im, z.re); }
Complex conj(const Complex& z) { return {z.re, BigReal(-z.im)}; }

Complex sqrt(const Complex& z) {
  if (z.im == 0) {
    if (z.re >= 0) return {BigReal(sqrt(z.re)), BigReal(0)};
    return {BigReal(0), BigReal(sqrt(-z.re))};
  }
  BigReal m = abs(z);
  BigReal r = sqrt((m + abs(z.re)) / 2);
  if (z.re >= 0) return {r, BigReal(z.im / (2 * r))};
  BigReal i = z.im >= 0 ? r : BigReal(-r);
  return {BigReal(abs(z.im) / (2 * r)), i};
}

Complex cbrt(const Complex& z) {
  if (z.re == 0 && z.im == 0) return {};
  if (z.im == 0 && z.re > 0) return {BigReal(cbrt(z.re)), BigReal(0)};
  return Complex::polar(cbrt(abs(z)), BigReal(arg(z) / 3));
}

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex log(const Complex& z) {
  if (z.re == 0 && z.im == 0) throw DomainError("log of zero");
  return {BigReal(log(abs(z))), arg(z)};
}

Complex pow(const Complex& base, long exponent) {
  if (exponent < 0) return Complex(1) / pow(base, -exponent);
  Complex result(1);
  Complex b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Complex pow(const Complex& base, const Complex& exponent) {
  if (exponent.im == 0 && exponent.re == floor(exponent.re) && abs(exponent.re) < 1000000) {
    return pow(base, exponent.re.convert_to<long>());
  }
  if (base.im == 0 && base.re > 0 && exponent.im == 0) {
    return {BigReal(pow(base.re, exponent.re)), BigReal(0)};
  }
  if (base.re == 0 && base.im == 0) return {};
  return exp(exponent * log(base));
}

std::string to_string(const Complex& z, int digits) {
  if (z.im == 0) return to_string(z.re, digits);
  std::string s = to_string(z.re, digits);
  s += z.im < 0 ? " - " : " + ";
  s += to_string(BigReal(abs(z.im)), digits) + "i";
  return s;
}

}  // namespace latticelab
