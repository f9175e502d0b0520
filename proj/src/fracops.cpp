#include "fracvim/fracops.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fracvim/specfun.hpp"

namespace fracvim::fracops {
namespace {

constexpr int kPanels = 20000;

void check_term(const TimePowerTerm& term) {
  if (!std::isfinite(term.coeff))
    throw std::domain_error("time power term: coefficient must be finite");
  if (!(term.exponent >= 0.0))
    throw std::domain_error("time power term: exponent must be nonnegative");
}

void check_quadrature_args(FracOrder order, double t) {
  if (!(order.alpha > 0.0) || !(order.alpha < 1.0))
    throw std::domain_error("quadrature oracle: order must lie in (0, 1)");
  if (!(t > 0.0)) throw std::domain_error("quadrature oracle: t must be positive");
  if (order.alpha >= 0.95)
    std::fprintf(stderr,
                 "warning: quadrature accuracy degrades for order %.3f >= 0.95 "
                 "(singular endpoint)\n",
                 order.alpha);
}

double derivative(const std::function<double(double)>& f, double tau, double h) {
  // One-sided at the left edge: tau - h may cross 0 where f can be undefined
  // (fractional powers).
  if (tau - h < 0.0) return (f(tau + h) - f(tau)) / h;
  return (f(tau + h) - f(tau - h)) / (2.0 * h);
}

}  // namespace

FracOrder::FracOrder(double a) : alpha(a) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::domain_error("fractional order must lie in [0, 1)");
}

TimePowerTerm power_rule_derivative(FracOrder order, const TimePowerTerm& term) {
  check_term(term);
  if (order.alpha == 0.0) return term;
  const double lambda = term.exponent;
  const double ratio = specfun::gamma_ratio(1.0 + lambda, 1.0 + lambda - order.alpha);
  return {term.coeff * ratio, lambda - order.alpha};
}

TimePowerTerm jt_power_rule(FracOrder order, const TimePowerTerm& term) {
  check_term(term);
  const double lambda = term.exponent;
  const double step = 1.0 - order.alpha;
  if (order.alpha == 0.0) return {term.coeff / (lambda + 1.0), lambda + 1.0};
  const double ratio = specfun::gamma_ratio(1.0 + lambda, 1.0 + lambda + step);
  return {term.coeff * ratio, lambda + step};
}

TimePowerTerm jt_power_rule_n(FracOrder order, const TimePowerTerm& term, int n) {
  check_term(term);
  if (n < 1) throw std::invalid_argument("jt_power_rule_n: n must be >= 1");
  const double lambda = term.exponent;
  const double shift = n * (1.0 - order.alpha);
  const double ratio = specfun::gamma_ratio(1.0 + lambda, 1.0 + lambda + shift);
  return {term.coeff * ratio, lambda + shift};
}

double caputo_numeric(const std::function<double(double)>& f, FracOrder order, double t) {
  check_quadrature_args(order, t);
  const double alpha = order.alpha;
  const double h = 1e-6 * std::max(1.0, t);

  // Substitution tau = t(1 - u^r) with r = 2/(1-alpha) turns the
  // (t-tau)^(-alpha) endpoint singularity into the smooth integrand
  // u * f'(t(1 - u^r)) on [0, 1].
  const double r = 2.0 / (1.0 - alpha);
  auto integrand = [&](double u) {
    const double tau = t * (1.0 - std::pow(u, r));
    return u * derivative(f, tau, h);
  };

  double acc = 0.5 * integrand(1.0);  // integrand(0) vanishes with its u factor
  for (int i = 1; i < kPanels; ++i) acc += integrand(static_cast<double>(i) / kPanels);
  acc /= kPanels;

  return std::pow(t, 1.0 - alpha) * r * acc / specfun::gamma(1.0 - alpha);
}

double rl_integral_numeric(const std::function<double(double)>& f, FracOrder order, double t) {
  check_quadrature_args(order, t);
  const double alpha = order.alpha;

  // Same graded substitution with r = 2/alpha for the (t-tau)^(alpha-1)
  // singularity.
  const double r = 2.0 / alpha;
  auto integrand = [&](double u) {
    const double tau = t * (1.0 - std::pow(u, r));
    return u * f(tau);
  };

  double acc = 0.5 * integrand(1.0);
  for (int i = 1; i < kPanels; ++i) acc += integrand(static_cast<double>(i) / kPanels);
  acc /= kPanels;

  return std::pow(t, alpha) * r * acc / specfun::gamma(alpha);
}

}  // namespace fracvim::fracops
