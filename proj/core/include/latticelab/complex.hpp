#pragma once

// Minimal complex arithmetic over BigReal. std::complex is unspecified for
// non-builtin value types, so the handful of operations the Mahler-measure
// and root-finding code needs are provided here.

#include "latticelab/bigreal.hpp"

#include <string>

namespace latticelab {

struct Complex {
  BigReal re;
  BigReal im;

  Complex() : re(0), im(0) {}
  Complex(BigReal r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  static Complex i() { return {BigReal(0), BigReal(1)}; }
  static Complex polar(const BigReal& modulus, const BigReal& angle);

  bool is_real() const { return im == 0; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
bool operator==(const Complex& a, const Complex& b);

BigReal abs(const Complex& z);
BigReal norm(const Complex& z);  // |z|^2
BigReal arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);   // principal branch
Complex cbrt(const Complex& z);   // principal branch
Complex exp(const Complex& z);
Complex log(const Complex& z);    // principal branch
Complex pow(const Complex& base, const Complex& exponent);  // principal branch
Complex pow(const Complex& base, long exponent);

std::string to_string(const Complex& z, int digits);

}  // namespace latticelab
