#include "latticelab/eta_expression.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace latticelab::series {
namespace {

std::int64_t ceil_div_pos(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::vector<EtaFactor> canonical_factors(const std::vector<EtaFactor>& factors) {
  std::map<unsigned, int> powers;
  for (const auto& f : factors) {
    if (f.scale == 0) throw DomainError("eta scale must be a positive integer");
    powers[f.scale] += f.power;
  }
  std::vector<EtaFactor> out;
  for (const auto& [scale, power] : powers) {
    if (power != 0) out.push_back({scale, power});
  }
  return out;
}

class EtaParser {
 public:
  explicit EtaParser(std::string_view text) : text_(text) {}

  EtaExpression parse() {
    std::vector<EtaMonomial> terms;
    skip_space();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(parse_term(sign));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return EtaExpression(std::move(terms));
  }

 private:
  EtaMonomial parse_term(int sign) {
    EtaMonomial m;
    m.coefficient = sign;
    bool divide = false;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c == '+' || c == '-') break;
      if (c == '*') {
        if (!any) fail("dangling '*'");
        ++pos_;
        divide = false;
        continue;
      }
      if (c == '/') {
        if (!any) fail("dangling '/'");
        ++pos_;
        divide = true;
        continue;
      }
      parse_factor(m, divide);
      divide = false;
      any = true;
    }
    if (!any) fail("empty term");
    m.factors = canonical_factors(m.factors);
    return m;
  }

  void parse_factor(EtaMonomial& m, bool divide) {
    const char c = peek();
    if (c == '(') {
      // group of factors, e.g. the denominator in e1^5/(e2^2 e7)
      ++pos_;
      EtaMonomial group;
      bool any = false;
      while (true) {
        skip_space();
        if (at_end()) fail("unclosed '('");
        if (match(")")) break;
        if (match("*")) continue;
        if (peek() == '/') fail("'/' inside a parenthesized group");
        parse_factor(group, false);
        any = true;
      }
      if (!any) fail("empty '()'");
      const int power = parse_power();
      if (power < 0) fail("negative power on a group");
      for (int r = 0; r < power; ++r) {
        for (auto f : group.factors) {
          if (divide) f.power = -f.power;
          m.factors.push_back(f);
        }
        if (divide) {
          if (group.coefficient == 0) fail("division by zero");
          m.coefficient /= group.coefficient;
        } else {
          m.coefficient *= group.coefficient;
        }
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt value(read_digits());
      const int power = parse_power();
      if (power < 0) fail("negative power on a number");
      BigRational v = boost::multiprecision::pow(BigInt(value), static_cast<unsigned>(power));
      if (divide) {
        if (v == 0) fail("division by zero");
        m.coefficient /= v;
      } else {
        m.coefficient *= v;
      }
      return;
    }
    if (c == 'e') {
      ++pos_;
      unsigned scale = 0;
      if (match("ta(")) {
        skip_space();
        if (!match("q")) fail("expected q in eta(q^j)");
        scale = 1;
        skip_space();
        if (match("^")) scale = parse_unsigned();
        skip_space();
        if (!match(")")) fail("expected ')'");
      } else {
        scale = parse_unsigned();
      }
      int power = parse_power();
      if (divide) power = -power;
      m.factors.push_back({scale, power});
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  int parse_power() {
    skip_space();
    if (!match("^")) return 1;
    skip_space();
    bool paren = match("(");
    skip_space();
    int sign = 1;
    if (match("-")) sign = -1;
    const auto v = static_cast<int>(parse_unsigned());
    skip_space();
    if (paren && !match(")")) fail("expected ')'");
    return sign * v;
  }

  unsigned parse_unsigned() {
    skip_space();
    const std::string d = read_digits();
    const unsigned long v = std::stoul(d);
    if (v == 0 || v > std::numeric_limits<unsigned>::max() / 64) fail("integer out of range");
    return static_cast<unsigned>(v);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool match(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("eta expression: " + what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::int64_t EtaMonomial::lead24() const {
  std::int64_t s = 0;
  for (const auto& f : factors) s += static_cast<std::int64_t>(f.scale) * f.power;
  return s;
}

BigRational EtaMonomial::weight() const {
  std::int64_t s = 0;
  for (const auto& f : factors) s += f.power;
  return BigRational(s, 2);
}

EtaExpression::EtaExpression(std::vector<EtaMonomial> terms) : terms_(std::move(terms)) {
  for (auto& t : terms_) t.factors = canonical_factors(t.factors);
}

std::int64_t EtaExpression::min_lead24() const {
  if (terms_.empty()) return 0;
  std::int64_t m = terms_.front().lead24();
  for (const auto& t : terms_) m = std::min(m, t.lead24());
  return m;
}

EtaExpression EtaExpression::operator-() const {
  EtaExpression out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

EtaExpression operator+(const EtaExpression& a, const EtaExpression& b) {
  std::vector<EtaMonomial> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return EtaExpression(std::move(terms));
}

EtaExpression operator-(const EtaExpression& a, const EtaExpression& b) { return a + (-b); }

unsigned EtaExpression::scale_lcm() const {
  unsigned l = 1;
  for (const auto& t : terms_) {
    for (const auto& f : t.factors) l = std::lcm(l, f.scale);
  }
  return l;
}

std::string EtaExpression::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coefficient;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    bool need_star = false;
    if (c != 1 || t.factors.empty()) {
      os << to_string(c);
      need_star = true;
    }
    for (const auto& f : t.factors) {
      if (need_star) os << "*";
      os << "e" << f.scale;
      if (f.power != 1) os << "^" << (f.power < 0 ? "(" + std::to_string(f.power) + ")" : std::to_string(f.power));
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

EtaExpression eta_monomial(BigRational coefficient, std::vector<EtaFactor> factors) {
  return EtaExpression({EtaMonomial{std::move(coefficient), std::move(factors)}});
}

EtaExpression parse_eta_expression(std::string_view text) { return EtaParser(text).parse(); }

BigRational ScaledSeries::coefficient_at(std::int64_t e24) const {
  return BigRational(numerator.coefficient_at(e24), denominator);
}

std::optional<FormalQSeries> expand_monomial_to(const EtaMonomial& m, std::int64_t bound24) {
  const std::int64_t lead = m.lead24();
  if (lead >= bound24) return std::nullopt;
  const auto count = static_cast<std::size_t>(ceil_div_pos(bound24 - lead, 24));
  FormalQSeries num = FormalQSeries::one(count);
  FormalQSeries den = FormalQSeries::one(count);
  for (const auto& f : m.factors) {
    const FormalQSeries e = eta_series(f.scale, count);
    if (f.power > 0) {
      num = series_mul(num, series_pow(e, static_cast<unsigned>(f.power)));
    } else {
      den = series_mul(den, series_pow(e, static_cast<unsigned>(-f.power)));
    }
  }
  return series_div(num, den, count);
}

ScaledSeries expand_expression_to(const EtaExpression& x, std::int64_t start24, std::int64_t bound24) {
  BigInt denom = 1;
  for (const auto& t : x.terms()) denom = boost::multiprecision::lcm(denom, denominator(t.coefficient));
  const auto count = static_cast<std::size_t>(std::max<std::int64_t>(0, ceil_div_pos(bound24 - start24, 24)));
  FormalQSeries acc = FormalQSeries::zero(start24, count);
  for (const auto& t : x.terms()) {
    if ((t.lead24() - start24) % 24 != 0) {
      throw DomainError("monomials of '" + x.str() + "' do not share an exponent class modulo 1");
    }
    auto s = expand_monomial_to(t, bound24);
    if (!s) continue;
    const BigRational scaled = t.coefficient * denom;
    acc = series_add(acc, s->scaled(numerator(scaled)));
  }
  if (acc.is_zero()) acc = FormalQSeries::zero(start24, count);
  return {std::move(acc), denom};
}

ScaledSeries expand_expression(const EtaExpression& x, std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("expand_expression needs n_terms >= 1");
  const std::int64_t start = x.min_lead24();
  return expand_expression_to(x, start, start + 24 * static_cast<std::int64_t>(n_terms));
}

CoefficientVerdict compare_expansions(const ScaledSeries& lhs, const ScaledSeries& rhs, std::int64_t start24,
                                      std::size_t n_terms) {
  CoefficientVerdict v;
  v.start_exponent = BigRational(start24, 24);
  for (std::size_t k = 0; k < n_terms; ++k) {
    const std::int64_t e = start24 + 24 * static_cast<std::int64_t>(k);
    const BigInt l = lhs.numerator.coefficient_at(e) * rhs.denominator;
    const BigInt r = rhs.numerator.coefficient_at(e) * lhs.denominator;
    ++v.checked;
    if (l != r) {
      v.first_mismatch = CoefficientMismatch{BigRational(e, 24), lhs.coefficient_at(e), rhs.coefficient_at(e)};
      v.pass = false;
      return v;
    }
  }
  v.pass = true;
  return v;
}

CoefficientVerdict verify_coefficient_identity(const EtaExpression& lhs, const EtaExpression& rhs,
                                               std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("verify_coefficient_identity needs n_terms >= 1");
  std::int64_t start = 0;
  if (!lhs.empty() && !rhs.empty()) {
    start = std::min(lhs.min_lead24(), rhs.min_lead24());
  } else if (!lhs.empty()) {
    start = lhs.min_lead24();
  } else if (!rhs.empty()) {
    start = rhs.min_lead24();
  }
  const std::int64_t bound = start + 24 * static_cast<std::int64_t>(n_terms);
  return compare_expansions(expand_expression_to(lhs, start, bound), expand_expression_to(rhs, start, bound), start,
                            n_terms);
}

std::uint64_t gamma0_index(std::uint64_t level) {
  if (level == 0) throw DomainError("level must be positive");
  std::uint64_t index = 1;
  std::uint64_t n = level;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint64_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    index *= (pk / p) * (p + 1);
  }
  if (n > 1) index *= n + 1;
  return index;
}

std::uint64_t sturm_bound(std::uint64_t level, unsigned weight) {
  if (weight == 0 || weight % 2 != 0) throw DomainError("weight must be a positive even integer");
  return weight * gamma0_index(level) / 12 + 1;
}

DensityProfile lacunarity_scan(const EtaExpression& x, std::size_t n_terms, std::size_t window) {
  if (window == 0 || n_terms == 0 || n_terms % window != 0) {
    throw DomainError("window must be positive and divide n_terms");
  }
  DensityProfile p;
  p.n_terms = n_terms;
  p.window = window;
  const std::size_t windows = n_terms / window;
  p.nonzero_counts.assign(windows, 0);
  if (!x.empty()) {
    const ScaledSeries s = expand_expression(x, n_terms);
    const std::int64_t start = x.min_lead24();
    for (std::size_t k = 0; k < n_terms; ++k) {
      if (!s.numerator.coefficient_at(start + 24 * static_cast<std::int64_t>(k)).is_zero()) {
        ++p.nonzero_counts[k / window];
      }
    }
  }
  for (std::size_t c : p.nonzero_counts) p.densities.push_back(static_cast<double>(c) / static_cast<double>(window));
  return p;
}

nlohmann::json to_json(const DensityProfile& p) {
  return {{"n_terms", p.n_terms}, {"window", p.window}, {"nonzero_counts", p.nonzero_counts},
          {"densities", p.densities}};
}

std::string to_csv(const DensityProfile& p) {
  std::ostringstream os;
  os << "window_start,window_end,nonzero,density\n";
  for (std::size_t i = 0; i < p.densities.size(); ++i) {
    os << i * p.window << "," << (i + 1) * p.window << "," << p.nonzero_counts[i] << "," << p.densities[i] << "\n";
  }
  return os.str();
}

}  // namespace latticelab::series
