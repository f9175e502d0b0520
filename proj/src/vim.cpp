#include "fracvim/vim.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <map>
#include <stdexcept>
#include <utility>

#include "fracvim/specfun.hpp"

namespace fracvim::vim {
namespace {

// 1/Gamma(arg), routed through log space once the argument is large; the
// correction search can push arguments past gamma's overflow guard.
double inv_gamma(double arg) {
  if (arg > 100.0) return std::exp(-specfun::log_gamma(arg));
  return 1.0 / specfun::gamma(arg);
}

// Exponent in the exact form unit + frac*(1-alpha). Working with the integer
// pair instead of the evaluated double keeps the telescoping cancellations of
// the residual inside a single exponent class.
struct ExpKey {
  int unit;
  int frac;

  friend auto operator<=>(const ExpKey&, const ExpKey&) = default;
};

double key_exponent(const ExpKey& key, double s) { return key.unit + key.frac * s; }

double factorial(int k) {
  double acc = 1.0;
  for (int i = 2; i <= k; ++i) acc *= i;
  return acc;
}

}  // namespace

SourceSeries::SourceSeries(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& entry : entries_)
    if (entry.k < 0) throw std::invalid_argument("source series: k must be nonnegative");
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.k < b.k; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].k == entries_[i - 1].k)
      throw std::invalid_argument("source series: duplicate entry for one k");
  std::erase_if(entries_, [](const Entry& e) { return e.qk.is_zero(); });
}

SourceSeries SourceSeries::separable(const spatial::SpatialFunction& g,
                                     const std::vector<double>& h_taylor) {
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < h_taylor.size(); ++k) {
    spatial::SpatialFunction qk = h_taylor[k] * g;
    if (!qk.is_zero()) entries.push_back({static_cast<int>(k), std::move(qk)});
  }
  SourceSeries out(std::move(entries));
  if (!h_taylor.empty()) out.truncation_order_ = static_cast<int>(h_taylor.size()) - 1;
  return out;
}

SolutionSeries::SolutionSeries(spatial::SpatialFunction base) : base_(std::move(base)) {}

SolutionSeries::SolutionSeries(spatial::SpatialFunction base, std::vector<Correction> corrections)
    : base_(std::move(base)), corrections_(std::move(corrections)) {}

Correction correction_term(const ProblemSpec& problem, int n) {
  if (n < 0) throw std::invalid_argument("correction_term: n must be nonnegative");
  const double s = 1.0 - problem.order.alpha;
  Correction out;
  out.reserve(1 + problem.source.entries().size());

  const double f_exponent = (n + 1) * s;
  out.push_back({inv_gamma(1.0 + f_exponent) *
                     spatial::apply_operator_n(problem.op, problem.initial, n + 1),
                 f_exponent});

  for (const auto& entry : problem.source.entries()) {
    const double q_exponent = (entry.k + 1) + n * s;
    out.push_back({inv_gamma(1.0 + q_exponent) *
                       spatial::apply_operator_n(problem.op, entry.qk, n),
                   q_exponent});
  }
  return out;
}

SolutionSeries truncated_solution(const ProblemSpec& problem, int n) {
  if (n < 0) throw std::invalid_argument("truncated_solution: n must be nonnegative");
  std::vector<Correction> corrections;
  corrections.reserve(n + 1);
  for (int j = 0; j <= n; ++j) corrections.push_back(correction_term(problem, j));
  return SolutionSeries(problem.initial, std::move(corrections));
}

double evaluate_solution(const SolutionSeries& solution, double x, double t) {
  if (!(t >= 0.0)) throw std::domain_error("evaluate_solution: t must be nonnegative");
  double acc = spatial::evaluate(solution.base(), x);
  for (const auto& correction : solution.corrections())
    for (const auto& term : correction)
      acc += spatial::evaluate(term.spatial, x) * std::pow(t, term.exponent);
  return acc;
}

double exact_sinusoidal(fracops::FracOrder order, double x, double t) {
  if (!(t >= 0.0)) throw std::domain_error("exact_sinusoidal: t must be nonnegative");
  const double nu = 1.0 - order.alpha;
  const double z = -std::pow(t, nu);
  const double cos_part = specfun::mittag_leffler(specfun::MLParams(nu, 1.0), z);
  const double sin_part = t * t * specfun::mittag_leffler(specfun::MLParams(nu, 3.0), z);
  return cos_part * std::cos(x) + sin_part * std::sin(x);
}

double classical_solution(double x, double t) {
  if (!(t >= 0.0)) throw std::domain_error("classical_solution: t must be nonnegative");
  const double decay = std::exp(-t);
  return decay * std::cos(x) + (decay + t - 1.0) * std::sin(x);
}

std::vector<SeriesTerm> residual(const ProblemSpec& problem, int n) {
  if (n < 1) throw std::invalid_argument("residual: n must be >= 1");
  const double alpha = problem.order.alpha;
  const double s = 1.0 - alpha;
  const auto& source = problem.source.entries();

  // c_n as keyed terms, reusing correction_term so coefficients match the
  // evaluation path exactly.
  std::vector<std::pair<ExpKey, spatial::SpatialFunction>> series;
  series.emplace_back(ExpKey{0, 0}, problem.initial);
  for (int j = 0; j < n; ++j) {
    Correction correction = correction_term(problem, j);
    series.emplace_back(ExpKey{0, j + 1}, std::move(correction[0].spatial));
    for (std::size_t i = 0; i < source.size(); ++i)
      series.emplace_back(ExpKey{source[i].k + 1, j}, std::move(correction[i + 1].spatial));
  }

  std::map<ExpKey, spatial::SpatialFunction> acc;

  // dc/dt
  for (const auto& [key, g] : series) {
    const double lambda = key_exponent(key, s);
    if (lambda == 0.0) continue;
    acc[ExpKey{key.unit - 1, key.frac}] += lambda * g;
  }

  // -D^alpha[(A c)], power rule term-wise
  for (const auto& [key, g] : series) {
    spatial::SpatialFunction ag = spatial::apply_operator(problem.op, g);
    if (ag.is_zero()) continue;
    const double lambda = key_exponent(key, s);
    const double ratio = specfun::gamma_ratio(1.0 + lambda, 1.0 + lambda - alpha);
    acc[ExpKey{key.unit - 1, key.frac + 1}] += (-ratio) * ag;
  }

  // -q
  for (const auto& entry : source)
    acc[ExpKey{entry.k, 0}] += (-1.0 / factorial(entry.k)) * entry.qk;

  std::vector<SeriesTerm> out;
  for (auto& [key, g] : acc) {
    if (g.is_zero()) continue;
    out.push_back({std::move(g), key_exponent(key, s)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SeriesTerm& a, const SeriesTerm& b) { return a.exponent < b.exponent; });
  return out;
}

bool is_sinusoidal_case(const ProblemSpec& problem) {
  const bool op_ok = problem.op.terms().size() == 1 && problem.op.terms()[0].order == 2 &&
                     problem.op.terms()[0].coeff == 1.0;
  const bool initial_ok = problem.initial == spatial::SpatialFunction::cosine(1.0);
  const bool source_ok = problem.source.entries().size() == 1 &&
                         problem.source.entries()[0].k == 1 &&
                         problem.source.entries()[0].qk == spatial::SpatialFunction::sine(1.0);
  return op_ok && initial_ok && source_ok;
}

}  // namespace fracvim::vim
