#pragma once

// Weighted binary theta series
//     c * sum_{n,k} (-1)^{sn*n + sk*k} * w(n,k) * q^{(A*L1^2 + B*L2^2)/D}
// with linear index maps L1 = m1*n + s1, L2 = m2*k + s2 and a linear weight
// w = w0 + w1*L1 + w2*L2. Each index runs over n >= 0 or over all of Z.

#include "latticelab/eta_expression.hpp"
#include "latticelab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latticelab::series {

struct ThetaIndex {
  int multiplier = 1;  // L = multiplier * index + shift
  int shift = 0;
  bool full_lattice = false;  // index over Z rather than index >= 0
  int form = 1;               // quadratic coefficient multiplying L^2
  int sign = 0;               // contributes (-1)^{sign * index}
  int weight = 0;             // contributes weight * L to w
};

struct Theta2DFamily {
  BigInt coefficient{1};
  ThetaIndex first;
  std::optional<ThetaIndex> second;  // absent for one-dimensional series
  int divisor = 1;
  int weight_constant = 1;
  std::string label;
};

/// Smallest exponent (in 24ths) attained on the index ranges.
std::int64_t theta2d_lead24(const Theta2DFamily& fam);

/// Lattice-point enumeration of every term with exponent < bound24.
/// Throws DomainError if the form is not positive definite or its exponents
/// are not multiples of 1/24.
FormalQSeries expand_theta2d_to(const Theta2DFamily& fam, std::int64_t start24, std::int64_t bound24);

/// Expansion through n_terms coefficients from the family's own lead.
FormalQSeries expand_theta2d(const Theta2DFamily& fam, std::size_t n_terms);

/// Sum of families through n_terms coefficients from start24.
FormalQSeries expand_theta_combination(const std::vector<Theta2DFamily>& fams, std::int64_t start24,
                                       std::size_t n_terms);

/// Checks sum(fams) == target coefficientwise through n_terms coefficients
/// starting at the smaller of the two leading exponents.
CoefficientVerdict verify_theta_identity(const std::vector<Theta2DFamily>& fams, const EtaExpression& target,
                                         std::size_t n_terms);

/// Binary theta expansion of 3 e1 e2 e9 e18 as three families.
std::vector<Theta2DFamily> theta_families_degree18();
/// Binary theta expansion of 28 e4 e7^2 e28 as three families.
std::vector<Theta2DFamily> theta_families_degree28();

}  // namespace latticelab::series
