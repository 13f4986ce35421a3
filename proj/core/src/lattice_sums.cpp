#include "latticelab/lattice_sums.hpp"

#include "latticelab/quadrature.hpp"
#include "latticelab/theta_numeric.hpp"

#include <cmath>
#include <map>

namespace latticelab {

LatticeSpec LatticeSpec::make(BigRational a, BigRational b, BigRational c, BigRational d) {
  LatticeSpec s{{std::move(a), std::move(b), std::move(c), std::move(d)}};
  for (const auto& e : s.entries) {
    if (!(e > 0)) throw DomainError("lattice sum entries must be positive, got " + to_string(e));
  }
  return s;
}

LatticeSpec LatticeSpec::shorthand(BigRational b, BigRational c) {
  BigRational bc = b * c;
  return make(BigRational(1), std::move(b), std::move(c), std::move(bc));
}

BigRational LatticeSpec::sum() const { return entries[0] + entries[1] + entries[2] + entries[3]; }

std::string LatticeSpec::str() const {
  return "F(" + to_string(entries[0]) + "," + to_string(entries[1]) + "," + to_string(entries[2]) + "," +
         to_string(entries[3]) + ")";
}

LatticeSpec parse_lattice_spec(const std::vector<std::string>& words) {
  std::vector<std::string> w = words;
  if (!w.empty() && (w.front() == "F" || w.front() == "f")) w.erase(w.begin());
  if (w.size() == 2) return LatticeSpec::shorthand(parse_rational(w[0]), parse_rational(w[1]));
  if (w.size() == 4) {
    return LatticeSpec::make(parse_rational(w[0]), parse_rational(w[1]), parse_rational(w[2]),
                             parse_rational(w[3]));
  }
  throw ParseError("expected 'F a b c d' or 'F b c'");
}

BigReal F_integral(const LatticeSpec& s, int target_digits) {
  // Repeated entries share one eta evaluation per node.
  std::map<BigRational, int> mult;
  for (const auto& e : s.entries) ++mult[e];
  std::vector<std::pair<BigReal, int>> factors;
  for (const auto& [e, k] : mult) factors.emplace_back(to_real(e), k);

  auto integrand = [&factors](const BigReal& t) {
    BigReal e = 0;
    for (const auto& [scale, k] : factors) e += k * log_eta_numeric(scale * t);
    return BigReal(t * exp(e));
  };
  QuadratureOptions opts;
  opts.target_digits = target_digits;
  const auto res = integrate_exp_sinh(Integrand(integrand), BigReal(0), opts);
  require_converged(res, s.str() + " integral");
  const BigReal pi2 = pi() * pi();
  return to_real(s.normalization()) / 576 * 4 * pi2 * res.value;
}

long double F_cubes(const LatticeSpec& s, int radius) {
  if (radius < 0) throw DomainError("cube radius must be >= 0");
  const std::size_t n = 2 * static_cast<std::size_t>(radius) + 1;
  // v[i][k] = entry_i (6m+1)^2 with m = k - radius, sign (-1)^m.
  std::array<std::vector<long double>, 4> v;
  std::vector<long double> sign(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long m = static_cast<long>(k) - radius;
    sign[k] = (m % 2 == 0) ? 1.0L : -1.0L;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const long double e = to_real(s.entries[i]).convert_to<long double>();
    v[i].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const long double m = static_cast<long double>(static_cast<long>(k) - radius);
      v[i][k] = e * (6 * m + 1) * (6 * m + 1);
    }
  }
  long double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long double s12 = v[0][i] + v[1][j];
      const long double g12 = sign[i] * sign[j];
      long double inner = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const long double s123 = s12 + v[2][k];
        long double row = 0;
        for (std::size_t l = 0; l < n; ++l) {
          const long double q = s123 + v[3][l];
          row += sign[l] / (q * q);
        }
        inner += sign[k] * row;
      }
      total += g12 * inner;
    }
  }
  const long double norm = to_real(s.normalization()).convert_to<long double>();
  return norm * total;
}

RelationVerdict compare_values(const BigReal& lhs, const BigReal& rhs, int target_digits) {
  RelationVerdict v;
  v.lhs = lhs;
  v.rhs = rhs;
  v.residual = lhs - rhs;
  v.digits = agreement_digits(lhs, rhs);
  BigReal scale = abs(lhs);
  if (scale < 1) scale = 1;
  v.pass = abs(v.residual) < ten_to_minus(target_digits) * scale;
  return v;
}

RelationVerdict relation_check(const std::vector<RelationTerm>& lhs, const std::vector<RelationTerm>& rhs,
                               int target_digits) {
  auto eval = [](const std::vector<RelationTerm>& side) {
    BigReal s = 0;
    for (const auto& t : side) s += t.coefficient * t.evaluate();
    return s;
  };
  return compare_values(eval(lhs), eval(rhs), target_digits);
}

}  // namespace latticelab
