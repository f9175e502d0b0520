#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fracvim/vim.hpp"

namespace fracvim::analysis {

// Thrown when the minimal-term search exceeds its cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ErrorRecord {
  double alpha;
  double tau;
  int n;
  double error;
};

// Relative error E_n = |c - c_n| / |c| at (x, t), with c the exact reference
// and c_n the n-correction truncation. Computed as the magnitude of the
// correction tail sum_{j>=n} e_{j+1}(x,t), which is |c - c_n| by telescoping
// but stays accurate far below the cancellation floor of direct subtraction.
double relative_error(const vim::ProblemSpec& problem, int n, double x, double t);

// Smallest n with E_n(x, t) <= e^{-tau}; ascends from n = 1, cap 200.
int min_terms(fracops::FracOrder order, double tau, double x, double t);

// Row-major (tau x alpha) grid; failed cells are empty.
struct TableGrid {
  std::vector<double> alphas;
  std::vector<double> taus;
  std::vector<std::optional<ErrorRecord>> cells;

  const std::optional<ErrorRecord>& cell(std::size_t tau_index, std::size_t alpha_index) const {
    return cells[tau_index * alphas.size() + alpha_index];
  }
};

// min_terms over the full (alpha, tau) grid; cells run independently
// (threads = 0 picks the hardware count) and per-cell failures do not abort
// the sweep.
TableGrid table_sweep(const std::vector<double>& alphas, const std::vector<double>& taus,
                      double x, double t, int threads = 0);

struct LinearFit {
  double slope;
  double intercept;
  double r_squared;
};

// Least-squares fit of y against x; needs >= 3 points.
LinearFit linear_fit(const std::vector<std::pair<double, double>>& points);

// Fit of ln E_n against n over points with E_n > 0.
LinearFit convergence_rate(const std::vector<std::pair<int, double>>& errors);

}  // namespace fracvim::analysis
