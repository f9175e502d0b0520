#pragma once

#include <stdexcept>
#include <string>

namespace fracvim::specfun {

// Thrown when a series evaluation hits its safeguard before the stopping rule.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Parameters (nu, mu) of the two-parameter Mittag-Leffler function E_{nu,mu}.
struct MLParams {
  double nu;
  double mu;

  explicit MLParams(double nu_in, double mu_in = 1.0);
};

// Gamma(x) for 0 < x < 171, relative error <= 1e-13.
double gamma(double x);

// ln Gamma(x) for x > 0, relative error <= 1e-12.
double log_gamma(double x);

// Gamma(a)/Gamma(b) for a, b > 0, routed through log_gamma when either
// argument would overflow gamma.
double gamma_ratio(double a, double b);

// E_{nu,mu}(z) = sum_k z^k / Gamma(nu*k + mu) for |z| <= 100.
double mittag_leffler(const MLParams& params, double z);

}  // namespace fracvim::specfun
