#pragma once

#include <functional>

namespace fracvim::fracops {

// Fractional order alpha in [0, 1); alpha = 0 is the classical limit.
struct FracOrder {
  double alpha;

  explicit FracOrder(double a);
};

// A single coeff * t^exponent term.
struct TimePowerTerm {
  double coeff;
  double exponent;
};

// D^alpha t^lambda = Gamma(1+lambda)/Gamma(1+lambda-alpha) * t^(lambda-alpha).
// Identity when alpha = 0.
TimePowerTerm power_rule_derivative(FracOrder order, const TimePowerTerm& term);

// J^(1-alpha) t^lambda = Gamma(1+lambda)/Gamma(2+lambda-alpha) * t^(1+lambda-alpha).
// Plain antiderivative when alpha = 0.
TimePowerTerm jt_power_rule(FracOrder order, const TimePowerTerm& term);

// n-fold J^(1-alpha) in closed form:
// Gamma(1+lambda)/Gamma(1+lambda+n(1-alpha)) * t^(lambda+n(1-alpha)), n >= 1.
TimePowerTerm jt_power_rule_n(FracOrder order, const TimePowerTerm& term, int n);

// Quadrature oracle for the Caputo derivative
// (1/Gamma(1-alpha)) * integral_0^t f'(tau) (t-tau)^(-alpha) dtau, 0 < alpha < 1.
// Validation-grade accuracy (~1e-6 relative on smooth integrands).
double caputo_numeric(const std::function<double(double)>& f, FracOrder order, double t);

// Quadrature oracle for the Riemann-Liouville integral
// (1/Gamma(alpha)) * integral_0^t (t-tau)^(alpha-1) f(tau) dtau, 0 < alpha < 1.
double rl_integral_numeric(const std::function<double(double)>& f, FracOrder order, double t);

}  // namespace fracvim::fracops
