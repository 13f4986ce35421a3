#pragma once

// L(f,2) = sum a_n/n^2 = -int_0^1 f(q) log q dq/q for weight-2 eta-quotient
// cusp forms f = sum a_n q^n, evaluated as 4 pi^2 int_0^inf t f(e^{-2 pi t}) dt
// with every monomial computed through the numeric eta function.

#include "latticelab/eta_expression.hpp"

#include <string>
#include <vector>

namespace latticelab {

/// Raised when cancellation between monomials eats more digits than the guard
/// allows. Carries the working precision that would be needed.
class PrecisionShortfall : public ConvergenceError {
 public:
  PrecisionShortfall(const std::string& what, unsigned needed_digits)
      : ConvergenceError(what), needed_digits_(needed_digits) {}
  unsigned needed_digits() const { return needed_digits_; }

 private:
  unsigned needed_digits_;
};

struct CuspL2Result {
  BigReal value;
  BigReal magnitude;  // same integral with |monomial| summands
  double digits_lost = 0;
};

/// Throws PrecisionShortfall if log10(magnitude/|value|) exceeds the guard.
CuspL2Result cusp_L2_detailed(const series::EtaExpression& f, int target_digits);
BigReal cusp_L2(const series::EtaExpression& f, int target_digits);

/// Value of f at q = e^{-2 pi t} through eta_numeric.
BigReal eta_expression_numeric(const series::EtaExpression& f, const BigReal& t);

struct CuspPartialSum {
  BigReal value;        // sum_{n <= N} a_n / n^2
  BigReal tail_estimate;  // 4 (ln N + 2)/sqrt(N): Deligne's |a_n| <= d(n) sqrt(n) with d(n) ~ ln n
  std::size_t n_terms = 0;
};

/// Partial Dirichlet sum from the exact expansion; f must start at q^1.
CuspPartialSum cusp_partial_sum(const series::EtaExpression& f, std::size_t n_terms);

struct NamedCuspForm {
  std::string id;
  std::string expression;
  unsigned level = 0;
};

/// f30 = e3 e5 e6 e10 - e1 e2 e15 e30, f17 = e1 e4^2 e34^5/(e2 e17 e68^2) - e2^5 e17 e68^2/(e1 e4^2 e34).
std::vector<NamedCuspForm> cusp_form_catalog();
series::EtaExpression cusp_form(const std::string& id);

}  // namespace latticelab
