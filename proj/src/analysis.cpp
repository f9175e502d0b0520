#include "fracvim/analysis.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "fracvim/specfun.hpp"

namespace fracvim::analysis {
namespace {

constexpr int kSearchCap = 200;
constexpr int kTailCap = 4000;

vim::ProblemSpec sinusoidal_problem(fracops::FracOrder order) {
  return {order, spatial::LinearOperator::second_derivative(),
          spatial::SpatialFunction::cosine(1.0),
          vim::SourceSeries({{1, spatial::SpatialFunction::sine(1.0)}})};
}

std::pair<int, double> search_min_terms(fracops::FracOrder order, double tau, double x,
                                        double t) {
  if (!(order.alpha > 0.0))
    throw std::domain_error("min_terms: order must lie strictly inside (0, 1)");
  if (!(tau > 0.0)) throw std::domain_error("min_terms: tau must be positive");
  const vim::ProblemSpec problem = sinusoidal_problem(order);
  const double threshold = std::exp(-tau);
  for (int n = 1; n <= kSearchCap; ++n) {
    const double error = relative_error(problem, n, x, t);
    if (error <= threshold) return {n, error};
  }
  throw CapExceeded("min_terms: tolerance not reached within 200 corrections");
}

}  // namespace

double relative_error(const vim::ProblemSpec& problem, int n, double x, double t) {
  if (n < 0) throw std::invalid_argument("relative_error: n must be nonnegative");
  if (!(t > 0.0)) throw std::domain_error("relative_error: t must be positive");
  if (!vim::is_sinusoidal_case(problem))
    throw std::invalid_argument("relative_error: no exact reference solution for this problem");

  const double exact = vim::exact_sinusoidal(problem.order, x, t);
  if (std::fabs(exact) < 1e-14)
    throw std::domain_error("relative_error: exact solution vanishes at the evaluation point");

  double sum = 0.0;
  double comp = 0.0;
  int small_streak = 0;
  for (int j = n; j < n + kTailCap; ++j) {
    double value = 0.0;
    for (const auto& term : vim::correction_term(problem, j))
      value += spatial::evaluate(term.spatial, x) * std::pow(t, term.exponent);
    if (!std::isfinite(value))
      throw specfun::NoConvergence("relative_error: correction series overflow");

    const double next = sum + value;
    if (std::fabs(sum) >= std::fabs(value))
      comp += (sum - next) + value;
    else
      comp += (value - next) + sum;
    sum = next;

    if (std::fabs(value) <= 1e-16 * std::fabs(sum + comp) || std::fabs(value) < 1e-320) {
      if (++small_streak >= 2) return std::fabs(sum + comp) / std::fabs(exact);
    } else {
      small_streak = 0;
    }
  }
  throw specfun::NoConvergence("relative_error: correction tail did not converge");
}

int min_terms(fracops::FracOrder order, double tau, double x, double t) {
  return search_min_terms(order, tau, x, t).first;
}

TableGrid table_sweep(const std::vector<double>& alphas, const std::vector<double>& taus,
                      double x, double t, int threads) {
  if (alphas.empty() || taus.empty())
    throw std::invalid_argument("table_sweep: parameter lists must be nonempty");

  TableGrid grid{alphas, taus, {}};
  const std::size_t total = alphas.size() * taus.size();
  grid.cells.assign(total, std::nullopt);

  auto run_cell = [&](std::size_t index) {
    const double alpha = alphas[index % alphas.size()];
    const double tau = taus[index / alphas.size()];
    try {
      const auto [n, error] = search_min_terms(fracops::FracOrder(alpha), tau, x, t);
      grid.cells[index] = ErrorRecord{alpha, tau, n, error};
    } catch (const std::exception&) {
      // failed cells stay empty; the sweep keeps going
    }
  };

  int want = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (want < 1) want = 1;
  if (static_cast<std::size_t>(want) > total) want = static_cast<int>(total);

  if (want == 1) {
    for (std::size_t i = 0; i < total; ++i) run_cell(i);
    return grid;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(want);
  for (int w = 0; w < want; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < total;) run_cell(i);
    });
  for (auto& worker : pool) worker.join();
  return grid;
}

LinearFit linear_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("linear_fit: need at least 3 points");
  const double count = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [px, py] : points) {
    mean_x += px;
    mean_y += py;
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [px, py] : points) {
    const double dx = px - mean_x;
    const double dy = py - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: all abscissae coincide");

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  double r_squared = syy == 0.0 ? 1.0 : (slope * sxy) / syy;
  r_squared = std::min(1.0, std::max(0.0, r_squared));
  return {slope, intercept, r_squared};
}

LinearFit convergence_rate(const std::vector<std::pair<int, double>>& errors) {
  std::vector<std::pair<double, double>> points;
  points.reserve(errors.size());
  for (const auto& [n, error] : errors)
    if (error > 0.0) points.emplace_back(static_cast<double>(n), std::log(error));
  return linear_fit(points);
}

}  // namespace fracvim::analysis
