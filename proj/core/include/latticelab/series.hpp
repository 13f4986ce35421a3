#pragma once

// Exact truncated q-expansions with exponents in twenty-fourths.
//
// A FormalQSeries stores coefficients c[0..order) of
//     q^{L/24} (c[0] + c[1] q + c[2] q^2 + ...)
// valid through (but excluding) the exponent L/24 + order. Every operation
// tracks that validity bound: results never claim coefficients that the
// inputs did not determine.

#include "latticelab/bigreal.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace latticelab::series {

class FormalQSeries {
 public:
  /// The empty series (order 0) at exponent 0.
  FormalQSeries() = default;

  /// Normalizes so that coeffs[0] != 0 unless every coefficient vanishes.
  FormalQSeries(std::int64_t lead24, std::vector<BigInt> coeffs);

  /// All-zero series of the given order anchored at lead24.
  static FormalQSeries zero(std::int64_t lead24, std::size_t order);
  /// The constant 1 with `order` valid coefficients.
  static FormalQSeries one(std::size_t order);

  std::int64_t lead24() const { return lead24_; }
  BigRational lead_exponent() const { return BigRational(lead24_, 24); }
  std::size_t order() const { return coeffs_.size(); }
  /// First exponent (in 24ths) that is no longer determined.
  std::int64_t bound24() const { return lead24_ + 24 * static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Coefficient of q^{e24/24}; zero for exponents below the lead or off the
  /// lead's residue class. Throws DomainError past the validity bound.
  BigInt coefficient_at(std::int64_t e24) const;

  /// Keeps only exponents below bound24 (in 24ths).
  FormalQSeries truncated_to_bound(std::int64_t bound24) const;
  FormalQSeries truncated(std::size_t order) const;
  FormalQSeries scaled(const BigInt& factor) const;

  /// Re-anchors the series at a lower exponent (same residue class), padding
  /// with leading zeros. Used to compare coefficient arrays index by index.
  std::vector<BigInt> coefficients_from(std::int64_t start24, std::size_t count) const;

  friend bool operator==(const FormalQSeries&, const FormalQSeries&) = default;

 private:
  void normalize();

  std::int64_t lead24_ = 0;
  std::vector<BigInt> coeffs_;
};

FormalQSeries series_add(const FormalQSeries& a, const FormalQSeries& b);
FormalQSeries series_sub(const FormalQSeries& a, const FormalQSeries& b);
FormalQSeries series_neg(const FormalQSeries& a);

/// Cauchy product truncated to the shorter valid range; lead exponents add.
FormalQSeries series_mul(const FormalQSeries& a, const FormalQSeries& b);

/// Quotient a/b, at most n_terms coefficients. Requires b.coeffs[0] = ±1 so
/// the result stays in the integer ring; otherwise throws DomainError.
FormalQSeries series_div(const FormalQSeries& a, const FormalQSeries& b, std::size_t n_terms);

/// Non-negative integer power by repeated squaring.
FormalQSeries series_pow(const FormalQSeries& a, unsigned exponent);

inline FormalQSeries operator+(const FormalQSeries& a, const FormalQSeries& b) { return series_add(a, b); }
inline FormalQSeries operator-(const FormalQSeries& a, const FormalQSeries& b) { return series_sub(a, b); }
inline FormalQSeries operator-(const FormalQSeries& a) { return series_neg(a); }
inline FormalQSeries operator*(const FormalQSeries& a, const FormalQSeries& b) { return series_mul(a, b); }

/// eta(q^j) = q^{j/24} prod_{n>=1} (1 - q^{jn}) through n_terms coefficients,
/// generated from the pentagonal number theorem.
FormalQSeries eta_series(unsigned scale, std::size_t n_terms);

/// phi(q) = sum_{n in Z} q^{n^2}.
FormalQSeries theta_series_phi(std::size_t n_terms);
/// psi(q) = sum_{n >= 0} q^{n(n+1)/2}.
FormalQSeries theta_series_psi(std::size_t n_terms);

/// The same series with q replaced by q^scale.
FormalQSeries substitute_power(const FormalQSeries& a, unsigned scale);

nlohmann::json to_json(const FormalQSeries& s);
FormalQSeries series_from_json(const nlohmann::json& j);

}  // namespace latticelab::series
