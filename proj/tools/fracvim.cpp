#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracvim/analysis.hpp"
#include "fracvim/io.hpp"
#include "fracvim/specfun.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// 0 success, 1 validation error, 2 computation error, 3 I/O error.
enum ExitCode { kOk = 0, kValidation = 1, kComputation = 2, kIo = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("cannot read '" + path + "'");
  return buffer.str();
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    std::cout.flush();
    if (!std::cout) throw std::ios_base::failure("cannot write to standard output");
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + out_path + "'");
  out << payload;
  out.flush();
  if (!out) throw std::ios_base::failure("cannot write '" + out_path + "'");
}

int thread_budget() {
  const char* env = std::getenv("FRACVIM_THREADS");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || value < 1) return 0;
  return static_cast<int>(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated series solutions of a time-fractional diffusion equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  double alpha = 0.0;
  double t = 0.1;
  double x_point = std::numbers::pi;
  int n = 0;
  int n_max = 15;
  std::vector<double> alphas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> taus{5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 35.0};

  CLI::App* solve = app.add_subcommand("solve", "Sample a truncated solution over the x grid");
  solve->add_option("config", config_path, "problem config (JSON)")->required();
  solve->add_option("--alpha", alpha, "override the fractional order");
  solve->add_option("--n", n, "number of corrections (default: eval.n_terms)");
  solve->add_option("--t", t, "override the evaluation time");
  solve->add_option("--out", out_path, "output CSV path (default: stdout)");

  CLI::App* curve = app.add_subcommand("error-curve", "Relative error against correction count");
  curve->add_option("config", config_path, "problem config (JSON)")->required();
  curve->add_option("--alpha", alpha, "override the fractional order");
  curve->add_option("--t", t, "override the evaluation time");
  curve->add_option("--x-point", x_point, "evaluation abscissa (default: pi)");
  curve->add_option("--n-max", n_max, "largest correction count")->check(CLI::PositiveNumber);
  curve->add_option("--out", out_path, "output CSV path (default: stdout)");

  CLI::App* table = app.add_subcommand("table", "Minimal corrections for accuracy e^-tau");
  table->add_option("--alphas", alphas, "fractional orders (column per value)");
  table->add_option("--taus", taus, "tolerance exponents (row per value)");
  table->add_option("--t", t, "evaluation time");
  table->add_option("--x-point", x_point, "evaluation abscissa (default: pi)");
  table->add_option("--out", out_path, "output CSV path (default: stdout)");

  CLI::App* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    std::ostringstream payload;

    if (version->parsed()) {
      payload << "fracvim " << kVersion << "\n";
      write_output(payload.str(), "");
      return kOk;
    }

    if (table->parsed()) {
      fracvim::io::write_table_csv(alphas, taus, x_point, t, thread_budget(), payload);
      write_output(payload.str(), out_path);
      return kOk;
    }

    fracvim::io::ProblemConfig config = fracvim::io::parse_config(read_file(config_path));
    if (solve->count("--alpha") || curve->count("--alpha")) config.alpha = alpha;
    if (solve->count("--t") || curve->count("--t")) config.eval.t = t;

    if (solve->parsed()) {
      const int corrections = solve->count("--n") ? n : config.eval.n_terms;
      fracvim::io::write_solve_csv(config, corrections, payload);
    } else {
      fracvim::io::write_error_curve_csv(config, n_max, x_point, payload);
    }
    write_output(payload.str(), out_path);
    return kOk;
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const fracvim::io::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidation;
  } catch (const std::exception& e) {
    // domain errors, non-convergence, search-cap overruns
    std::fprintf(stderr, "error: %s\n", e.what());
    return kComputation;
  }
}
