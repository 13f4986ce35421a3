#pragma once

// Arbitrary-precision scalar types and the working-precision contract shared
// by every numeric routine in latticelab.
//
// All numeric code runs at a working precision of P + G decimal digits, where
// P is the requested precision and G = 10 + P/10 is a fixed guard allowance.
// Results are expected to be good to about P digits. The working precision is
// process-wide (Boost 1.74 keeps the MPFR default precision in a plain static),
// so it must be set before worker threads start and left alone while they run.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace latticelab {

// Expression templates are off: they make `auto` locals and lambdas capture
// references to temporaries, and the arithmetic here is not allocation bound.
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative evaluation cannot reach its accuracy target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed user input (expressions, recipes, CLI arguments).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrecisionPolicy {
  unsigned digits = 40;
  std::optional<unsigned> guard;  // unset: 10 + digits/10

  unsigned guard_digits() const { return guard.value_or(10 + digits / 10); }
  unsigned working_digits() const { return digits + guard_digits(); }
};

/// RAII scope that sets the MPFR working precision (in decimal digits) for
/// newly created BigReal values and restores the previous one on exit.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned decimal_digits);
  explicit WorkingPrecision(const PrecisionPolicy& policy)
      : WorkingPrecision(policy.working_digits()) {}
  ~WorkingPrecision();

  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned previous_;
};

unsigned working_digits();

BigReal pi();
BigReal catalan();
BigReal ln2();

/// 10^{-digits} at the current working precision.
BigReal ten_to_minus(int digits);

/// Working epsilon: 10^{-working_digits()}.
BigReal working_epsilon();

BigReal to_real(const BigRational& r);
BigReal to_real(const BigInt& z);

/// Parses "p/q", "p" or a decimal literal into an exact rational.
BigRational parse_rational(const std::string& text);

std::string to_string(const BigRational& r);

/// Scientific-notation decimal string with `digits` significant digits.
std::string to_string(const BigReal& x, int digits);

/// Signed number of agreeing significant digits, -log10(|a-b| / max(1,|a|)).
double agreement_digits(const BigReal& a, const BigReal& b);

}  // namespace latticelab
