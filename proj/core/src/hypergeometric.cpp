#include "latticelab/hypergeometric.hpp"

#include <algorithm>
#include <functional>

namespace latticelab {
namespace {

bool nonpositive_integer(const BigRational& r) { return denominator(r) == 1 && r <= 0; }

// Upper bound on |t_{k+1}/t_k| for every k >= k0, where the ratio is
// |z| prod(k+a)/prod(k+b) / (k+1). Numerators are paired with denominators
// (the k! supplies a denominator 1). A paired factor (k+a)/(k+b) with a > b
// decreases toward 1, so its sup over k >= k0 is attained at k0; with a <= b
// it stays below 1. An unpaired denominator contributes 1/(k0+b).
BigReal ratio_bound(std::vector<BigRational> a, std::vector<BigRational> b, const BigReal& z_abs, long k0) {
  b.emplace_back(1);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  const BigRational k(k0);
  BigReal rho = z_abs;
  const std::size_t paired = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < paired; ++i) {
    if (a[i] > b[i]) rho *= to_real(k + a[i]) / to_real(k + b[i]);
  }
  for (std::size_t i = paired; i < b.size(); ++i) rho /= to_real(k + b[i]);
  for (std::size_t i = paired; i < a.size(); ++i) rho *= to_real(k + a[i]);
  return rho;
}

}  // namespace

HypergeomResult hypergeom_detailed(const std::vector<BigRational>& num, const std::vector<BigRational>& den,
                                   const Complex& z, int target_digits) {
  for (const auto& b : den) {
    if (nonpositive_integer(b)) throw DomainError("hypergeometric denominator parameter is a nonpositive integer");
  }
  const bool terminating = std::any_of(num.begin(), num.end(), nonpositive_integer);
  const BigReal z_abs = abs(z);
  if (!terminating) {
    if (num.size() > den.size() + 1 && z_abs != 0) {
      throw DomainError("hypergeometric series with p > q + 1 diverges for z != 0");
    }
    if (num.size() == den.size() + 1 && !(z_abs < 1)) {
      throw DomainError("hypergeometric series needs |z| < 1 when p = q + 1");
    }
  }

  // Smallest k from which every k + parameter is positive.
  long k_positive = 0;
  for (const auto* list : {&num, &den}) {
    for (const auto& r : *list) {
      if (r < 0) k_positive = std::max(k_positive, static_cast<long>(to_real(-r).convert_to<double>()) + 1);
    }
  }

  std::vector<BigReal> a;
  std::vector<BigReal> b;
  for (const auto& r : num) a.push_back(to_real(r));
  for (const auto& r : den) b.push_back(to_real(r));

  const BigReal tol = ten_to_minus(target_digits);
  HypergeomResult res;
  Complex term(1);
  Complex sum(1);
  res.terms = 1;
  for (long k = 0;; ++k) {
    BigReal factor = 1;
    for (const auto& x : a) factor *= x + k;
    for (const auto& x : b) factor /= x + k;
    factor /= k + 1;
    term *= Complex(factor) * z;
    if (factor == 0) {  // terminating series reached its last term
      res.tail_bound = 0;
      break;
    }
    sum += term;
    ++res.terms;
    if (k + 1 >= k_positive) {
      const BigReal rho = ratio_bound(num, den, z_abs, k + 1);
      if (rho < 1) {
        // |next term| <= |term| * rho, and the rest is geometric.
        const BigReal bound = abs(term) * rho / (1 - rho);
        if (bound <= tol * abs(sum)) {
          res.tail_bound = bound;
          break;
        }
      }
    }
    if (res.terms > 2'000'000) throw ConvergenceError("hypergeometric series did not converge in 2e6 terms");
  }
  res.value = sum;
  return res;
}

BigReal hypergeom_pFq(const std::vector<BigRational>& num, const std::vector<BigRational>& den, const BigReal& z) {
  return hypergeom_detailed(num, den, Complex(z), static_cast<int>(working_digits())).value.re;
}

Complex hypergeom_pFq(const std::vector<BigRational>& num, const std::vector<BigRational>& den, const Complex& z) {
  return hypergeom_detailed(num, den, z, static_cast<int>(working_digits())).value;
}

}  // namespace latticelab
