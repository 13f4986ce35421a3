#include "latticelab/bigreal.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace latticelab {

WorkingPrecision::WorkingPrecision(unsigned decimal_digits)
    : previous_(BigReal::default_precision()) {
  // Eta values at large arguments need far more exponent range than the default.
  mpfr_set_emin(mpfr_get_emin_min());
  mpfr_set_emax(mpfr_get_emax_max());
  BigReal::default_precision(decimal_digits);
}

WorkingPrecision::~WorkingPrecision() { BigReal::default_precision(previous_); }

unsigned working_digits() { return BigReal::default_precision(); }

BigReal pi() {
  BigReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

BigReal catalan() {
  BigReal r;
  mpfr_const_catalan(r.backend().data(), MPFR_RNDN);
  return r;
}

BigReal ln2() {
  BigReal r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

BigReal ten_to_minus(int digits) { return pow(BigReal(10), -digits); }

BigReal working_epsilon() { return ten_to_minus(static_cast<int>(working_digits())); }

BigReal to_real(const BigRational& r) {
  return BigReal(numerator(r)) / BigReal(denominator(r));
}

BigReal to_real(const BigInt& z) { return BigReal(z); }

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return BigRational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return BigRational(BigInt(text));
    // Decimal literal: exact conversion of the written digits.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(text.size() - dot - 1));
    if (digits == "-" || digits == "+" || digits.empty()) throw ParseError("bad literal '" + text + "'");
    return BigRational(BigInt(digits), scale);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse rational '" + text + "'");
  }
}

std::string to_string(const BigRational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const BigReal& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

double agreement_digits(const BigReal& a, const BigReal& b) {
  BigReal diff = abs(a - b);
  if (diff == 0) return static_cast<double>(working_digits());
  BigReal scale = abs(a);
  if (scale < 1) scale = 1;
  return -static_cast<double>(log10(diff / scale));
}

}  // namespace latticelab
