#pragma once

// Generalized hypergeometric series pFq(a; b; z) summed term by term with a
// geometric tail bound. Only |z| < 1 (or p <= q, or a terminating series) is
// accepted; |z| = 1 is rejected rather than continued.

#include "latticelab/bigreal.hpp"
#include "latticelab/complex.hpp"

#include <vector>

namespace latticelab {

struct HypergeomResult {
  Complex value;
  BigReal tail_bound;  // bound on |sum of omitted terms|
  std::size_t terms = 0;
};

/// Sums until the tail bound is below 10^{-target_digits} times |partial sum|.
HypergeomResult hypergeom_detailed(const std::vector<BigRational>& num, const std::vector<BigRational>& den,
                                   const Complex& z, int target_digits);

/// Target is the working precision.
BigReal hypergeom_pFq(const std::vector<BigRational>& num, const std::vector<BigRational>& den, const BigReal& z);
Complex hypergeom_pFq(const std::vector<BigRational>& num, const std::vector<BigRational>& den, const Complex& z);

}  // namespace latticelab
