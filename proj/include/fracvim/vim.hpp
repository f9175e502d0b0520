#pragma once

#include <optional>
#include <vector>

#include "fracvim/fracops.hpp"
#include "fracvim/spatial.hpp"

namespace fracvim::vim {

// Source q(x,t) = sum_k q_k(x) * t^k / k!, finitely many entries, one per k.
class SourceSeries {
 public:
  struct Entry {
    int k;
    spatial::SpatialFunction qk;
  };

  SourceSeries() = default;
  explicit SourceSeries(std::vector<Entry> entries);

  // Separable source g(x) * h(t) given the Taylor coefficients h^(k)(0),
  // k = 0..len-1; the truncation order is recorded for output metadata.
  static SourceSeries separable(const spatial::SpatialFunction& g,
                                const std::vector<double>& h_taylor);

  const std::vector<Entry>& entries() const { return entries_; }
  std::optional<int> truncation_order() const { return truncation_order_; }

 private:
  std::vector<Entry> entries_;
  std::optional<int> truncation_order_;
};

// Full problem instance: d c/dt = D^alpha[(A c)] + q, c(x,0) = f(x).
struct ProblemSpec {
  fracops::FracOrder order;
  spatial::LinearOperator op;
  spatial::SpatialFunction initial;
  SourceSeries source;
};

// One g(x) * t^exponent term of a series expansion.
struct SeriesTerm {
  spatial::SpatialFunction spatial;
  double exponent;
};

// The expanded correction e_{n+1}: one f-part term plus one per source entry.
using Correction = std::vector<SeriesTerm>;

// Truncated series c = base + corrections, each correction as returned by
// correction_term.
class SolutionSeries {
 public:
  explicit SolutionSeries(spatial::SpatialFunction base);
  SolutionSeries(spatial::SpatialFunction base, std::vector<Correction> corrections);

  const spatial::SpatialFunction& base() const { return base_; }
  const std::vector<Correction>& corrections() const { return corrections_; }

 private:
  spatial::SpatialFunction base_;
  std::vector<Correction> corrections_;
};

// e_{n+1} = (A^{n+1} f)(x) t^{(n+1)(1-a)} / Gamma(1+(n+1)(1-a))
//         + sum_k (A^n q_k)(x) t^{(k+1)+n(1-a)} / Gamma(2+k+n(1-a)), n >= 0.
Correction correction_term(const ProblemSpec& problem, int n);

// c_{n+1} = f + sum_{j=0..n} e_{j+1}, n >= 0.
SolutionSeries truncated_solution(const ProblemSpec& problem, int n);

// base(x) + sum_j spatial_j(x) * t^exponent_j, with 0^0 = 1 so t=0 gives f(x).
double evaluate_solution(const SolutionSeries& solution, double x, double t);

// Exact solution of the sinusoidal case study:
// E_{1-a}(-t^{1-a}) cos x + t^2 E_{1-a,3}(-t^{1-a}) sin x.
double exact_sinusoidal(fracops::FracOrder order, double x, double t);

// Classical (alpha = 0) closed form e^{-t} cos x + (e^{-t} + t - 1) sin x.
double classical_solution(double x, double t);

// Symbolic residual dc/dt - D^alpha[(A c)] - q of the n-correction truncation
// c_n, n >= 1, grouped by exponent. Equals -D^alpha[(A e_n)].
std::vector<SeriesTerm> residual(const ProblemSpec& problem, int n);

// True when the problem is exactly the case study (A = d^2/dx^2, f = cos x,
// q = t sin x), for which the exact reference solution is known.
bool is_sinusoidal_case(const ProblemSpec& problem);

}  // namespace fracvim::vim
