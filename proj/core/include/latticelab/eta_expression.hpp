#pragma once

// Linear combinations of eta quotients  sum_i c_i prod_j eta(q^j)^{e_ij},
// with exact expansion, coefficient-level identity checks, Sturm bounds and
// lacunarity profiles.

#include "latticelab/series.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latticelab::series {

struct EtaFactor {
  unsigned scale = 1;  // j in eta(q^j)
  int power = 1;       // e, negative for quotients

  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

struct EtaMonomial {
  BigRational coefficient{1};
  std::vector<EtaFactor> factors;

  /// sum_j j*e, the leading exponent in 24ths.
  std::int64_t lead24() const;
  /// sum_j e / 2.
  BigRational weight() const;
};

class EtaExpression {
 public:
  EtaExpression() = default;
  explicit EtaExpression(std::vector<EtaMonomial> terms);

  const std::vector<EtaMonomial>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::int64_t min_lead24() const;

  EtaExpression operator-() const;
  friend EtaExpression operator+(const EtaExpression& a, const EtaExpression& b);
  friend EtaExpression operator-(const EtaExpression& a, const EtaExpression& b);

  /// Least common multiple of all eta scales.
  unsigned scale_lcm() const;

  std::string str() const;

 private:
  std::vector<EtaMonomial> terms_;
};

/// Builds a single-term expression c * prod eta(q^j)^e.
EtaExpression eta_monomial(BigRational coefficient, std::vector<EtaFactor> factors);

/// Parses expressions such as "e2*e6*e10*e30 - e1*e12*e15*e20",
/// "3 e1 e2 e9 e18", "e1^5/(e2^2 e7)", "1/2*e1^3" or "eta(q^4)^2".
EtaExpression parse_eta_expression(std::string_view text);

/// Exact expansion as numerator / denominator with an integer numerator
/// series; the denominator clears the rational term coefficients.
struct ScaledSeries {
  FormalQSeries numerator;
  BigInt denominator{1};

  BigRational coefficient_at(std::int64_t e24) const;
};

/// Expands one monomial so that it is valid up to (excluding) bound24.
/// Returns std::nullopt if the monomial starts at or beyond the bound.
std::optional<FormalQSeries> expand_monomial_to(const EtaMonomial& m, std::int64_t bound24);

/// Exact expansion of the whole combination through n_terms coefficients,
/// counted from the smallest leading exponent among the monomials.
ScaledSeries expand_expression(const EtaExpression& x, std::size_t n_terms);

/// Expansion valid up to (excluding) the absolute exponent bound24.
ScaledSeries expand_expression_to(const EtaExpression& x, std::int64_t start24, std::int64_t bound24);

struct CoefficientMismatch {
  BigRational exponent;
  BigRational lhs;
  BigRational rhs;
};

struct CoefficientVerdict {
  bool pass = false;
  std::size_t checked = 0;
  BigRational start_exponent;
  std::optional<CoefficientMismatch> first_mismatch;
};

/// Compares lhs and rhs coefficient by coefficient through n_terms,
/// starting at the smallest leading exponent on either side.
CoefficientVerdict verify_coefficient_identity(const EtaExpression& lhs, const EtaExpression& rhs,
                                               std::size_t n_terms);

/// Compares two already expanded series over [start24, start24 + 24 n).
CoefficientVerdict compare_expansions(const ScaledSeries& lhs, const ScaledSeries& rhs,
                                      std::int64_t start24, std::size_t n_terms);

/// Index of Gamma_0(level) in SL_2(Z): level * prod_{p | level} (1 + 1/p).
std::uint64_t gamma0_index(std::uint64_t level);

/// floor(weight/12 * [SL2(Z):Gamma_0(level)]) + 1.
std::uint64_t sturm_bound(std::uint64_t level, unsigned weight);

struct DensityProfile {
  std::size_t n_terms = 0;
  std::size_t window = 0;
  std::vector<std::size_t> nonzero_counts;
  std::vector<double> densities;
};

/// Fraction of nonzero coefficients per window over the first n_terms
/// coefficients of x (window must divide n_terms).
DensityProfile lacunarity_scan(const EtaExpression& x, std::size_t n_terms, std::size_t window);

nlohmann::json to_json(const DensityProfile& p);
std::string to_csv(const DensityProfile& p);

}  // namespace latticelab::series
