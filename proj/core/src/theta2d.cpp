#include "latticelab/theta2d.hpp"

#include <cmath>
#include <cstdlib>

namespace latticelab::series {
namespace {

struct IndexRange {
  std::int64_t lo;
  std::int64_t hi;
};

void check_index(const ThetaIndex& ix) {
  if (ix.multiplier == 0 || ix.form <= 0) {
    throw DomainError("theta family exponent form is not positive definite; enumeration would not terminate");
  }
}

// Indices whose |L| could keep form*L^2*24/D below bound24.
IndexRange index_range(const ThetaIndex& ix, int divisor, std::int64_t bound24) {
  if (bound24 <= 0) return {0, -1};
  const double lmax = std::sqrt(static_cast<double>(bound24) * divisor / (24.0 * ix.form)) + 2.0;
  const auto span = static_cast<std::int64_t>((lmax + std::abs(ix.shift)) / std::abs(ix.multiplier)) + 1;
  return {ix.full_lattice ? -span : 0, span};
}

std::int64_t min_square(const ThetaIndex& ix) {
  const std::int64_t m = ix.multiplier;
  const std::int64_t span = std::abs(ix.shift) / std::abs(m) + 2;
  std::int64_t best = -1;
  for (std::int64_t n = ix.full_lattice ? -span : 0; n <= span; ++n) {
    const std::int64_t l = m * n + ix.shift;
    if (best < 0 || l * l < best) best = l * l;
  }
  return best;
}

std::int64_t exponent24(std::int64_t quad, int divisor) {
  if ((24 * quad) % divisor != 0) {
    throw DomainError("theta family exponent is not a multiple of 1/24");
  }
  return 24 * quad / divisor;
}

}  // namespace

std::int64_t theta2d_lead24(const Theta2DFamily& fam) {
  check_index(fam.first);
  std::int64_t quad = fam.first.form * min_square(fam.first);
  if (fam.second) {
    check_index(*fam.second);
    quad += fam.second->form * min_square(*fam.second);
  }
  return exponent24(quad, fam.divisor);
}

FormalQSeries expand_theta2d_to(const Theta2DFamily& fam, std::int64_t start24, std::int64_t bound24) {
  if (fam.divisor <= 0) throw DomainError("theta family divisor must be positive");
  check_index(fam.first);
  if (fam.second) check_index(*fam.second);
  if (start24 > theta2d_lead24(fam)) throw DomainError("expansion start lies above the family's lead exponent");

  const auto count = static_cast<std::size_t>(std::max<std::int64_t>(0, (bound24 - start24 + 23) / 24));
  std::vector<BigInt> c(count, BigInt(0));

  const ThetaIndex& a = fam.first;
  const IndexRange ra = index_range(a, fam.divisor, bound24);
  const ThetaIndex unit{1, 0, false, 0, 0, 0};
  const ThetaIndex& b = fam.second ? *fam.second : unit;
  const IndexRange rb = fam.second ? index_range(b, fam.divisor, bound24) : IndexRange{0, 0};

  for (std::int64_t n = ra.lo; n <= ra.hi; ++n) {
    const std::int64_t l1 = a.multiplier * n + a.shift;
    const std::int64_t q1 = a.form * l1 * l1;
    if (24 * q1 >= bound24 * fam.divisor) continue;
    for (std::int64_t k = rb.lo; k <= rb.hi; ++k) {
      const std::int64_t l2 = fam.second ? b.multiplier * k + b.shift : 0;
      const std::int64_t quad = q1 + (fam.second ? b.form * l2 * l2 : 0);
      if (24 * quad >= bound24 * fam.divisor) continue;
      const std::int64_t e = exponent24(quad, fam.divisor);
      if ((e - start24) % 24 != 0) throw DomainError("theta family exponents leave the start's residue class");
      const std::int64_t w = fam.weight_constant + a.weight * l1 + (fam.second ? b.weight * l2 : 0);
      if (w == 0) continue;
      const std::int64_t parity = a.sign * n + (fam.second ? b.sign * k : 0);
      const std::int64_t signed_w = (parity % 2 == 0) ? w : -w;
      c[static_cast<std::size_t>((e - start24) / 24)] += signed_w;
    }
  }
  for (auto& x : c) x *= fam.coefficient;
  FormalQSeries s(start24, std::move(c));
  if (s.is_zero()) return FormalQSeries::zero(start24, count);
  return s;
}

FormalQSeries expand_theta2d(const Theta2DFamily& fam, std::size_t n_terms) {
  const std::int64_t lead = theta2d_lead24(fam);
  return expand_theta2d_to(fam, lead, lead + 24 * static_cast<std::int64_t>(n_terms));
}

FormalQSeries expand_theta_combination(const std::vector<Theta2DFamily>& fams, std::int64_t start24,
                                       std::size_t n_terms) {
  const std::int64_t bound = start24 + 24 * static_cast<std::int64_t>(n_terms);
  FormalQSeries acc = FormalQSeries::zero(start24, n_terms);
  for (const auto& f : fams) acc = series_add(acc, expand_theta2d_to(f, start24, bound));
  if (acc.is_zero()) return FormalQSeries::zero(start24, n_terms);
  return acc;
}

CoefficientVerdict verify_theta_identity(const std::vector<Theta2DFamily>& fams, const EtaExpression& target,
                                         std::size_t n_terms) {
  std::int64_t start = target.empty() ? 0 : target.min_lead24();
  for (const auto& f : fams) start = std::min(start, theta2d_lead24(f));
  const std::int64_t bound = start + 24 * static_cast<std::int64_t>(n_terms);
  const ScaledSeries lhs{expand_theta_combination(fams, start, n_terms), BigInt(1)};
  return compare_expansions(lhs, expand_expression_to(target, start, bound), start, n_terms);
}

std::vector<Theta2DFamily> theta_families_degree18() {
  // sum (-1)^n (2n+1) q^{((2n+1)^2 + c (2k+1)^2)/8}, n,k >= 0, c = 1 and 9
  const ThetaIndex odd_n{2, 1, false, 1, 1, 1};
  Theta2DFamily f1{BigInt(-1), odd_n, ThetaIndex{2, 1, false, 1, 0, 0}, 8, 0, "odd-odd x=1"};
  Theta2DFamily f2{BigInt(1), odd_n, ThetaIndex{2, 1, false, 9, 0, 0}, 8, 0, "odd-odd x=9"};
  // sum (-1)^{n+k} (2n+1) q^{((2n+1)^2 + 9 (2k)^2)/4}, n >= 0, k in Z
  Theta2DFamily f3{BigInt(1), odd_n, ThetaIndex{2, 0, true, 9, 1, 0}, 4, 0, "odd-even alternating x=9"};
  return {f1, f2, f3};
}

std::vector<Theta2DFamily> theta_families_degree28() {
  // -7 sum (-1)^{n+k} (2k+1) q^{((6n+1)^2 + 21 (2k+1)^2)/24}, n in Z, k >= 0
  Theta2DFamily g1{BigInt(-7), ThetaIndex{6, 1, true, 1, 1, 0}, ThetaIndex{2, 1, false, 21, 1, 1}, 24, 0,
                   "alternating, weight 2k+1"};
  // - sum (6n+1) q^{((6n+1)^2 + 21 (2k+1)^2)/24}
  Theta2DFamily g2{BigInt(-1), ThetaIndex{6, 1, true, 1, 0, 1}, ThetaIndex{2, 1, false, 21, 0, 0}, 24, 0,
                   "weight 6n+1"};
  // 8 sum (-1)^{n+k} (3n+1) q^{(4 (3n+1)^2 + 7 (6k+1)^2)/12}, n, k in Z
  Theta2DFamily g3{BigInt(8), ThetaIndex{3, 1, true, 4, 1, 1}, ThetaIndex{6, 1, true, 7, 1, 0}, 12, 0,
                   "alternating, weight 3n+1"};
  return {g1, g2, g3};
}

}  // namespace latticelab::series
