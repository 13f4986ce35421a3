#include "latticelab/series.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latticelab::series {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::vector<std::size_t> nonzero_indices(const std::vector<BigInt>& c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) idx.push_back(i);
  }
  return idx;
}

void check_same_class(const FormalQSeries& a, const FormalQSeries& b) {
  if ((a.lead24() - b.lead24()) % 24 != 0) {
    throw DomainError("series exponents differ by a non-integer (" + to_string(a.lead_exponent()) +
                      " vs " + to_string(b.lead_exponent()) + ")");
  }
}

}  // namespace

FormalQSeries::FormalQSeries(std::int64_t lead24, std::vector<BigInt> coeffs)
    : lead24_(lead24), coeffs_(std::move(coeffs)) {
  normalize();
}

void FormalQSeries::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first == coeffs_.size() || first == 0) return;  // zero series keeps its anchor
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  lead24_ += 24 * static_cast<std::int64_t>(first);
}

FormalQSeries FormalQSeries::zero(std::int64_t lead24, std::size_t order) {
  FormalQSeries s;
  s.lead24_ = lead24;
  s.coeffs_.assign(order, BigInt(0));
  return s;
}

FormalQSeries FormalQSeries::one(std::size_t order) {
  std::vector<BigInt> c(order, BigInt(0));
  if (order > 0) c[0] = 1;
  return FormalQSeries(0, std::move(c));
}

bool FormalQSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c.is_zero(); });
}

BigInt FormalQSeries::coefficient_at(std::int64_t e24) const {
  if (e24 >= bound24()) {
    throw DomainError("coefficient at exponent " + to_string(BigRational(e24, 24)) +
                      " lies beyond the truncation bound");
  }
  if (e24 < lead24_ || (e24 - lead24_) % 24 != 0) return BigInt(0);
  return coeffs_[static_cast<std::size_t>((e24 - lead24_) / 24)];
}

FormalQSeries FormalQSeries::truncated_to_bound(std::int64_t bound) const {
  const std::int64_t keep = std::max<std::int64_t>(0, ceil_div(bound - lead24_, 24));
  if (static_cast<std::size_t>(keep) >= coeffs_.size()) return *this;
  return truncated(static_cast<std::size_t>(keep));
}

FormalQSeries FormalQSeries::truncated(std::size_t order) const {
  FormalQSeries s = *this;
  if (order < s.coeffs_.size()) s.coeffs_.resize(order);
  return s;
}

FormalQSeries FormalQSeries::scaled(const BigInt& factor) const {
  if (factor.is_zero()) return zero(lead24_, coeffs_.size());
  FormalQSeries s = *this;
  for (auto& c : s.coeffs_) c *= factor;
  return s;
}

std::vector<BigInt> FormalQSeries::coefficients_from(std::int64_t start24, std::size_t count) const {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(coefficient_at(start24 + 24 * static_cast<std::int64_t>(k)));
  }
  return out;
}

FormalQSeries series_add(const FormalQSeries& a, const FormalQSeries& b) {
  const std::int64_t bound = std::min(a.bound24(), b.bound24());
  if (a.is_zero()) return b.truncated_to_bound(bound);
  if (b.is_zero()) return a.truncated_to_bound(bound);
  check_same_class(a, b);
  const std::int64_t lead = std::min(a.lead24(), b.lead24());
  const std::int64_t count = std::max<std::int64_t>(0, (bound - lead) / 24);
  std::vector<BigInt> c(static_cast<std::size_t>(count), BigInt(0));
  for (const FormalQSeries* s : {&a, &b}) {
    const std::int64_t offset = (s->lead24() - lead) / 24;
    for (std::size_t i = 0; i < s->order(); ++i) {
      const std::int64_t k = offset + static_cast<std::int64_t>(i);
      if (k >= count) break;
      c[static_cast<std::size_t>(k)] += s->coeffs()[i];
    }
  }
  return FormalQSeries(lead, std::move(c));
}

FormalQSeries series_neg(const FormalQSeries& a) { return a.scaled(BigInt(-1)); }

FormalQSeries series_sub(const FormalQSeries& a, const FormalQSeries& b) {
  return series_add(a, series_neg(b));
}

FormalQSeries series_mul(const FormalQSeries& a, const FormalQSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const std::int64_t lead = a.lead24() + b.lead24();
  std::vector<BigInt> c(order, BigInt(0));
  const auto nz_a = nonzero_indices(a.coeffs());
  const auto nz_b = nonzero_indices(b.coeffs());
  // Drive the outer loop with the sparser factor; eta factors are very sparse.
  const bool a_outer = nz_a.size() <= nz_b.size();
  const auto& outer_idx = a_outer ? nz_a : nz_b;
  const auto& inner_idx = a_outer ? nz_b : nz_a;
  const auto& outer = a_outer ? a.coeffs() : b.coeffs();
  const auto& inner = a_outer ? b.coeffs() : a.coeffs();
  for (std::size_t i : outer_idx) {
    const BigInt& x = outer[i];
    const bool unit = (x == 1 || x == -1);
    for (std::size_t j : inner_idx) {
      if (i + j >= order) break;
      if (!unit) {
        c[i + j] += x * inner[j];
      } else if (x == 1) {
        c[i + j] += inner[j];
      } else {
        c[i + j] -= inner[j];
      }
    }
  }
  if (order == 0) return FormalQSeries::zero(lead, 0);
  return FormalQSeries(lead, std::move(c));
}

FormalQSeries series_div(const FormalQSeries& a, const FormalQSeries& b, std::size_t n_terms) {
  if (b.is_zero()) throw DomainError("division by a series that vanishes within its truncation");
  const BigInt& b0 = b.coeffs()[0];
  if (b0 != 1 && b0 != -1) {
    throw DomainError("divisor has leading coefficient " + b0.str() +
                      "; only unit leading coefficients keep integer coefficients");
  }
  const std::size_t order = std::min({n_terms, a.order(), b.order()});
  const std::int64_t lead = a.lead24() - b.lead24();
  std::vector<BigInt> r(order, BigInt(0));
  const auto nz_b = nonzero_indices(b.coeffs());
  for (std::size_t k = 0; k < order; ++k) {
    BigInt acc = a.coeffs()[k];
    for (std::size_t i : nz_b) {
      if (i == 0) continue;
      if (i > k) break;
      acc -= b.coeffs()[i] * r[k - i];
    }
    r[k] = (b0 == 1) ? acc : BigInt(-acc);
  }
  if (order == 0) return FormalQSeries::zero(lead, 0);
  return FormalQSeries(lead, std::move(r));
}

FormalQSeries series_pow(const FormalQSeries& a, unsigned exponent) {
  FormalQSeries result = FormalQSeries::one(a.order());
  FormalQSeries base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = series_mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = series_mul(base, base);
  }
  return result;
}

FormalQSeries eta_series(unsigned scale, std::size_t n_terms) {
  if (scale == 0) throw DomainError("eta scale must be a positive integer");
  if (n_terms == 0) throw DomainError("eta_series needs n_terms >= 1");
  std::vector<BigInt> c(n_terms, BigInt(0));
  const auto limit = static_cast<std::int64_t>(n_terms);
  // prod (1 - x^n) = sum_s (-1)^s x^{s(3s-1)/2}, s over all integers, x = q^scale.
  for (std::int64_t s = 0;; ++s) {
    bool placed = false;
    for (std::int64_t sign : {1, -1}) {
      if (s == 0 && sign == -1) continue;
      const std::int64_t t = sign * s;
      const std::int64_t e = static_cast<std::int64_t>(scale) * (t * (3 * t - 1) / 2);
      if (e < limit) {
        c[static_cast<std::size_t>(e)] += (s % 2 == 0) ? 1 : -1;
        placed = true;
      }
    }
    if (!placed) break;
  }
  return FormalQSeries(static_cast<std::int64_t>(scale), std::move(c));
}

FormalQSeries theta_series_phi(std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("theta_series_phi needs n_terms >= 1");
  std::vector<BigInt> c(n_terms, BigInt(0));
  c[0] = 1;
  for (std::size_t n = 1; n * n < n_terms; ++n) c[n * n] += 2;
  return FormalQSeries(0, std::move(c));
}

FormalQSeries theta_series_psi(std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("theta_series_psi needs n_terms >= 1");
  std::vector<BigInt> c(n_terms, BigInt(0));
  for (std::size_t n = 0; n * (n + 1) / 2 < n_terms; ++n) c[n * (n + 1) / 2] += 1;
  return FormalQSeries(0, std::move(c));
}

FormalQSeries substitute_power(const FormalQSeries& a, unsigned scale) {
  if (scale == 0) throw DomainError("substitution scale must be positive");
  if (a.order() == 0) return FormalQSeries::zero(a.lead24() * scale, 0);
  std::vector<BigInt> c((a.order() - 1) * scale + 1, BigInt(0));
  for (std::size_t i = 0; i < a.order(); ++i) c[i * scale] = a.coeffs()[i];
  // Exponents between the last stored term and the next are known zeros.
  c.resize(a.order() * scale, BigInt(0));
  return FormalQSeries(a.lead24() * static_cast<std::int64_t>(scale), std::move(c));
}

nlohmann::json to_json(const FormalQSeries& s) {
  const BigRational lead = s.lead_exponent();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return {{"lead_num", std::stoll(numerator(lead).str())},
          {"lead_den", std::stoll(denominator(lead).str())},
          {"coeffs", std::move(coeffs)}};
}

FormalQSeries series_from_json(const nlohmann::json& j) {
  const auto num = j.at("lead_num").get<std::int64_t>();
  const auto den = j.at("lead_den").get<std::int64_t>();
  if (den <= 0 || (24 * num) % den != 0) throw ParseError("lead exponent must be a multiple of 1/24");
  std::vector<BigInt> c;
  for (const auto& x : j.at("coeffs")) c.emplace_back(x.get<std::string>());
  FormalQSeries s(24 * num / den, c);
  if (s.is_zero()) return FormalQSeries::zero(24 * num / den, c.size());
  return s;
}

}  // namespace latticelab::series
