#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "fracvim/analysis.hpp"

using namespace fracvim;
using fracvim::fracops::FracOrder;
using fracvim::spatial::LinearOperator;
using fracvim::spatial::SpatialFunction;

namespace {

vim::ProblemSpec sinusoidal(double alpha) {
  return vim::ProblemSpec{
      FracOrder(alpha), LinearOperator::second_derivative(),
      SpatialFunction::cosine(1.0),
      vim::SourceSeries({{1, SpatialFunction::sine(1.0)}})};
}

const double kPi = std::numbers::pi;

}  // namespace

TEST_SUITE("analysis.relative_error") {
  TEST_CASE("matches direct subtraction where that is still well-posed") {
    struct Range { double alpha; int n_max; };
    for (const Range r : {Range{0.2, 4}, Range{0.5, 6}, Range{0.8, 8}}) {
      const vim::ProblemSpec p = sinusoidal(r.alpha);
      for (double x : {kPi, 2.0}) {
        for (int n = 1; n <= r.n_max; ++n) {
          const double exact = vim::exact_sinusoidal(p.order, x, 0.1);
          const double approx = vim::evaluate_solution(
              vim::truncated_solution(p, n - 1), x, 0.1);
          const double naive = std::fabs(exact - approx) / std::fabs(exact);
          const double tail = analysis::relative_error(p, n, x, 0.1);
          CHECK(tail == doctest::Approx(naive).epsilon(1e-4));
        }
      }
    }
  }

  TEST_CASE("n = 0 gives an order-one error") {
    const double e0 = analysis::relative_error(sinusoidal(0.5), 0, kPi, 0.1);
    CHECK(e0 > 0.1);
    CHECK(e0 < 1.0);
  }

  TEST_CASE("case-study decay levels") {
    CHECK(analysis::relative_error(sinusoidal(0.5), 12, kPi, 0.1) <=
          std::exp(-20.0));
    CHECK(analysis::relative_error(sinusoidal(0.2), 13, kPi, 0.1) <=
          std::exp(-40.0));
    double prev = analysis::relative_error(sinusoidal(0.2), 2, kPi, 0.1);
    for (int n = 3; n <= 15; ++n) {
      const double e = analysis::relative_error(sinusoidal(0.2), n, kPi, 0.1);
      CHECK(e < prev);
      prev = e;
    }
  }

  TEST_CASE("degenerate evaluation point is rejected") {
    CHECK_THROWS_AS(
        analysis::relative_error(sinusoidal(0.5), 3, kPi / 2.0, 1e-8),
        std::domain_error);
  }

  TEST_CASE("argument validation") {
    vim::ProblemSpec other = sinusoidal(0.5);
    other.initial = SpatialFunction::cosine(2.0);
    CHECK_THROWS_AS(analysis::relative_error(other, 3, kPi, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(analysis::relative_error(sinusoidal(0.5), -1, kPi, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(analysis::relative_error(sinusoidal(0.5), 3, kPi, 0.0),
                    std::domain_error);
  }
}

TEST_SUITE("analysis.min_terms") {
  TEST_CASE("anchor cells of the convergence study") {
    CHECK(analysis::min_terms(FracOrder(0.1), 5.0, kPi, 0.1) == 2);
    CHECK(analysis::min_terms(FracOrder(0.5), 20.0, kPi, 0.1) == 11);
    CHECK(analysis::min_terms(FracOrder(0.9), 35.0, kPi, 0.1) == 93);
  }

  TEST_CASE("result is consistent with its defining threshold") {
    struct Cell { double alpha; double tau; };
    for (const Cell c : {Cell{0.3, 10.0}, Cell{0.5, 20.0}, Cell{0.7, 25.0}}) {
      const int n = analysis::min_terms(FracOrder(c.alpha), c.tau, kPi, 0.1);
      const vim::ProblemSpec p = sinusoidal(c.alpha);
      const double bound = std::exp(-c.tau);
      CHECK(analysis::relative_error(p, n, kPi, 0.1) <= bound);
      if (n > 1)
        CHECK(analysis::relative_error(p, n - 1, kPi, 0.1) > bound);
    }
  }

  TEST_CASE("monotone in the tolerance and in the order") {
    int prev = 0;
    for (double tau : {5.0, 10.0, 15.0, 20.0}) {
      const int n = analysis::min_terms(FracOrder(0.4), tau, kPi, 0.1);
      CHECK(n >= prev);
      prev = n;
    }
    prev = 0;
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const int n = analysis::min_terms(FracOrder(alpha), 15.0, kPi, 0.1);
      CHECK(n >= prev);
      prev = n;
    }
  }

  TEST_CASE("search cap") {
    CHECK_THROWS_AS(analysis::min_terms(FracOrder(0.9), 120.0, kPi, 0.1),
                    analysis::CapExceeded);
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(analysis::min_terms(FracOrder(0.0), 10.0, kPi, 0.1),
                    std::domain_error);
    CHECK_THROWS_AS(analysis::min_terms(FracOrder(0.5), 0.0, kPi, 0.1),
                    std::domain_error);
    CHECK_THROWS_AS(analysis::min_terms(FracOrder(0.5), -5.0, kPi, 0.1),
                    std::domain_error);
  }
}

TEST_SUITE("analysis.table_sweep") {
  TEST_CASE("cells agree with individual searches") {
    const std::vector<double> alphas = {0.3, 0.6};
    const std::vector<double> taus = {5.0, 10.0};
    const analysis::TableGrid grid = analysis::table_sweep(alphas, taus, kPi, 0.1);
    REQUIRE(grid.cells.size() == 4);
    for (std::size_t ti = 0; ti < taus.size(); ++ti) {
      for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        const auto& cell = grid.cell(ti, ai);
        REQUIRE(cell.has_value());
        CHECK(cell->alpha == alphas[ai]);
        CHECK(cell->tau == taus[ti]);
        CHECK(cell->n ==
              analysis::min_terms(FracOrder(alphas[ai]), taus[ti], kPi, 0.1));
        CHECK(cell->error <= std::exp(-taus[ti]));
      }
    }
  }

  TEST_CASE("failed cells stay empty without aborting the sweep") {
    const analysis::TableGrid grid =
        analysis::table_sweep({0.9}, {10.0, 120.0}, kPi, 0.1);
    REQUIRE(grid.cells.size() == 2);
    CHECK(grid.cell(0, 0).has_value());
    CHECK_FALSE(grid.cell(1, 0).has_value());
  }

  TEST_CASE("thread count does not change results") {
    const std::vector<double> alphas = {0.2, 0.5, 0.8};
    const std::vector<double> taus = {5.0, 15.0, 25.0};
    const analysis::TableGrid one = analysis::table_sweep(alphas, taus, kPi, 0.1, 1);
    const analysis::TableGrid four = analysis::table_sweep(alphas, taus, kPi, 0.1, 4);
    REQUIRE(one.cells.size() == four.cells.size());
    for (std::size_t i = 0; i < one.cells.size(); ++i) {
      REQUIRE(one.cells[i].has_value());
      REQUIRE(four.cells[i].has_value());
      CHECK(one.cells[i]->n == four.cells[i]->n);
      CHECK(one.cells[i]->error == four.cells[i]->error);
    }
  }
}

TEST_SUITE("analysis.fits") {
  TEST_CASE("recovers an exact line") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 6; ++i) pts.emplace_back(i, 3.0 - 2.0 * i);
    const analysis::LinearFit fit = analysis::linear_fit(pts);
    CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(analysis::linear_fit({{0.0, 1.0}, {1.0, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        analysis::linear_fit({{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}}),
        std::invalid_argument);
  }

  TEST_CASE("convergence rate of a synthetic geometric decay") {
    std::vector<std::pair<int, double>> errors;
    for (int n = 1; n <= 8; ++n) errors.emplace_back(n, std::exp(-2.0 * n));
    const analysis::LinearFit fit = analysis::convergence_rate(errors);
    CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(fit.r_squared >= 1.0 - 1e-12);
  }

  TEST_CASE("zero errors are filtered before taking logs") {
    const analysis::LinearFit fit = analysis::convergence_rate(
        {{1, std::exp(-2.0)}, {2, std::exp(-4.0)}, {3, std::exp(-6.0)}, {4, 0.0}});
    CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK_THROWS_AS(analysis::convergence_rate({{1, 0.0}, {2, 0.0}, {3, 0.0}}),
                    std::invalid_argument);
  }

  TEST_CASE("case-study error curves are log-linear with decreasing slopes") {
    double prev_magnitude = 1e9;
    for (double alpha : {0.2, 0.4, 0.6, 0.8}) {
      const vim::ProblemSpec p = sinusoidal(alpha);
      std::vector<std::pair<int, double>> errors;
      for (int n = 1; n <= 15; ++n)
        errors.emplace_back(n, analysis::relative_error(p, n, kPi, 0.1));
      const analysis::LinearFit fit = analysis::convergence_rate(errors);
      CHECK(fit.slope < 0.0);
      CHECK(fit.r_squared >= 0.99);
      CHECK(std::fabs(fit.slope) < prev_magnitude);
      prev_magnitude = std::fabs(fit.slope);
    }
  }
}
