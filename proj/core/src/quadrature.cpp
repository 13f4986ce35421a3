#include "latticelab/quadrature.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace latticelab {
namespace {

bool finite(const BigReal& x) { return mpfr_number_p(x.backend().data()) != 0; }

void check_finite(const BigReal& v, const BigReal& x) {
  if (!finite(v)) {
    throw ConvergenceError("integrand is not finite at x = " + to_string(x, 20));
  }
}

// One half-line of nodes t = j*h for j = first, first + stride, ...
// `node` returns the weighted integrand value.
template <class Node>
BigReal sweep(Node&& node, const BigReal& h, long first, long stride, long last, const BigReal& negligible,
              std::size_t& evals) {
  BigReal sum = 0;
  int small_run = 0;
  for (long j = first; j <= last; j += stride) {
    const BigReal t = h * j;
    BigReal v = node(t);
    ++evals;
    sum += v;
    // Only the double-exponentially decaying tails are truncated early.
    if (t >= 1 && abs(v) <= negligible) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  return sum;
}

struct Rule {
  // Weighted integrand at t >= 0 (right) and at -t (left).
  std::function<BigReal(const BigReal&)> right;
  std::function<BigReal(const BigReal&)> left;
  BigReal t_max_right;
  BigReal t_max_left;
};

QuadratureResult run_levels(const Rule& rule, const QuadratureOptions& opts) {
  QuadratureResult res;
  const BigReal tol = ten_to_minus(opts.target_digits);
  const BigReal tiny = working_epsilon() * ten_to_minus(5);

  BigReal h = 1;
  const double t_right = rule.t_max_right.convert_to<double>();
  const double t_left = rule.t_max_left.convert_to<double>();
  auto last_index = [](double t_max, int level) { return static_cast<long>(std::ldexp(t_max, level)); };

  BigReal raw = rule.right(BigReal(0));  // sum of weighted values, t = 0 counted once
  res.evaluations = 1;
  BigReal scale = abs(raw);
  auto negligible = [&] { return tiny * std::max<BigReal>(scale, BigReal(1e-300)); };

  BigReal r = sweep(rule.right, h, 1, 1, last_index(t_right, 0), negligible(), res.evaluations);
  BigReal l = sweep(rule.left, h, 1, 1, last_index(t_left, 0), negligible(), res.evaluations);
  raw += r + l;
  BigReal previous = h * raw;

  for (int level = 1; level <= opts.max_level; ++level) {
    h /= 2;
    scale = abs(previous);
    BigReal add = sweep(rule.right, h, 1, 2, last_index(t_right, level), negligible(), res.evaluations);
    add += sweep(rule.left, h, 1, 2, last_index(t_left, level), negligible(), res.evaluations);
    raw += add;
    BigReal current = h * raw;
    res.error = abs(current - previous);
    res.value = current;
    res.level = level;
    previous = current;
    BigReal bound = tol * std::max(abs(current), opts.scale);
    if (bound < tiny) bound = tiny;
    if (level >= opts.min_level && res.error <= bound) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

}  // namespace

QuadratureResult integrate_tanh_sinh(const EndpointIntegrand& f, const BigReal& a, const BigReal& b,
                                     const QuadratureOptions& opts) {
  if (!(a < b)) throw DomainError("tanh-sinh interval must satisfy a < b");
  const BigReal half = (b - a) / 2;
  const BigReal pi2 = pi() / 2;
  // delta(t) = 2/(exp(2u)+1), u = pi/2 sinh t: distance of the node from the
  // nearer endpoint divided by the half width.
  auto weight_and_delta = [&](const BigReal& t, BigReal& delta) {
    const BigReal u = pi2 * sinh(t);
    const BigReal e = exp(-2 * u);
    delta = 2 * e / (1 + e);
    // dx/dt / half = pi/2 cosh t / cosh^2 u = pi/2 cosh t * 4e/(1+e)^2
    return pi2 * cosh(t) * 4 * e / ((1 + e) * (1 + e));
  };
  Rule rule;
  rule.right = [&](const BigReal& t) {
    BigReal delta;
    const BigReal w = weight_and_delta(t, delta);
    const BigReal from_b = half * delta;
    const BigReal from_a = 2 * half - from_b;
    const BigReal x = b - from_b;
    if (from_b == 0) return BigReal(0);
    BigReal v = f(x, from_a, from_b);
    check_finite(v, x);
    return BigReal(half * w * v);
  };
  rule.left = [&](const BigReal& t) {
    BigReal delta;
    const BigReal w = weight_and_delta(t, delta);
    const BigReal from_a = half * delta;
    const BigReal from_b = 2 * half - from_a;
    const BigReal x = a + from_a;
    if (from_a == 0) return BigReal(0);
    BigReal v = f(x, from_a, from_b);
    check_finite(v, x);
    return BigReal(half * w * v);
  };
  // Nodes closer than 10^{-3 d} to an endpoint carry no weight at d digits.
  const BigReal reach = 3 * working_digits() * log(BigReal(10)) / pi2;
  rule.t_max_right = asinh(reach);
  rule.t_max_left = rule.t_max_right;
  return run_levels(rule, opts);
}

QuadratureResult integrate_tanh_sinh(const Integrand& f, const BigReal& a, const BigReal& b,
                                     const QuadratureOptions& opts) {
  return integrate_tanh_sinh([&f](const BigReal& x, const BigReal&, const BigReal&) { return f(x); }, a, b, opts);
}

QuadratureResult integrate_exp_sinh(const EndpointIntegrand& f, const BigReal& a, const QuadratureOptions& opts) {
  const BigReal pi2 = pi() / 2;
  auto node = [&](const BigReal& t) {
    const BigReal e = exp(pi2 * sinh(t));
    const BigReal x = a + e;
    BigReal v = f(x, e, BigReal(0));
    check_finite(v, x);
    return BigReal(pi2 * cosh(t) * e * v);
  };
  Rule rule;
  rule.right = node;
  rule.left = [&](const BigReal& t) { return node(-t); };
  // Left: x - a down to 10^{-3 d}; right: x up to 10^{12}, beyond which only
  // exponentially decaying integrands are admissible and have died out.
  rule.t_max_left = asinh(3 * working_digits() * log(BigReal(10)) / pi2);
  rule.t_max_right = asinh(12 * log(BigReal(10)) / pi2);
  return run_levels(rule, opts);
}

QuadratureResult integrate_exp_sinh(const Integrand& f, const BigReal& a, const QuadratureOptions& opts) {
  return integrate_exp_sinh([&f](const BigReal& x, const BigReal&, const BigReal&) { return f(x); }, a, opts);
}

QuadratureResult integrate_piecewise(const EndpointIntegrand& f, const std::vector<BigReal>& breakpoints,
                                     const QuadratureOptions& opts) {
  if (breakpoints.size() < 2) throw DomainError("piecewise quadrature needs at least two breakpoints");
  QuadratureResult total;
  total.value = 0;
  total.error = 0;
  total.converged = true;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) continue;  // repeated breakpoint
    QuadratureResult piece = integrate_tanh_sinh(f, breakpoints[i], breakpoints[i + 1], opts);
    total.value += piece.value;
    total.error += piece.error;
    total.level = std::max(total.level, piece.level);
    total.evaluations += piece.evaluations;
    total.converged = total.converged && piece.converged;
  }
  return total;
}

const QuadratureResult& require_converged(const QuadratureResult& r, const std::string& what) {
  if (!r.converged) {
    throw ConvergenceError(what + ": quadrature stopped at level " + std::to_string(r.level) +
                           " with error estimate " + to_string(r.error, 3));
  }
  return r;
}

}  // namespace latticelab
