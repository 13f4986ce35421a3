#pragma once

// The alternating lattice sum
//     F(a,b,c,d) = (a+b+c+d)^2 sum (-1)^{n1+n2+n3+n4} /
//                  (a(6n1+1)^2 + b(6n2+1)^2 + c(6n3+1)^2 + d(6n4+1)^2)^2
// through its eta-product integral, and by summation over index cubes.

#include "latticelab/bigreal.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace latticelab {

struct LatticeSpec {
  std::array<BigRational, 4> entries;

  /// Throws DomainError unless every entry is positive.
  static LatticeSpec make(BigRational a, BigRational b, BigRational c, BigRational d);
  /// F(b,c) = F(1, b, c, bc).
  static LatticeSpec shorthand(BigRational b, BigRational c);

  BigRational sum() const;
  /// (a+b+c+d)^2.
  BigRational normalization() const { return sum() * sum(); }
  std::string str() const;
};

/// Accepts "F a b c d", "F b c", or the same without the leading F.
LatticeSpec parse_lattice_spec(const std::vector<std::string>& words);

/// (S^2/576) 4 pi^2 int_0^inf t prod eta(e^{-2 pi a_i t}) dt, S = a+b+c+d.
BigReal F_integral(const LatticeSpec& s, int target_digits);

/// Partial sum over the cube -R <= n_i <= R, in long double.
long double F_cubes(const LatticeSpec& s, int radius);

struct RelationTerm {
  BigReal coefficient;
  std::string label;
  std::function<BigReal()> evaluate;
};

struct RelationVerdict {
  bool pass = false;
  BigReal lhs;
  BigReal rhs;
  BigReal residual;  // lhs - rhs
  double digits = 0;
};

/// Evaluates both linear combinations; PASS iff
/// |lhs - rhs| < 10^{-target_digits} max(|lhs|, 1).
RelationVerdict relation_check(const std::vector<RelationTerm>& lhs, const std::vector<RelationTerm>& rhs,
                               int target_digits);

/// Same test on already evaluated sides.
RelationVerdict compare_values(const BigReal& lhs, const BigReal& rhs, int target_digits);

}  // namespace latticelab
