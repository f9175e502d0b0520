#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracvim/vim.hpp"

namespace fracvim::io {

// Config parse/validation failure, message names the offending field path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct AtomConfig {
  std::string kind;
  double param = 0.0;
  double coeff = 1.0;

  bool operator==(const AtomConfig&) const = default;
};

struct OperatorTermConfig {
  int order = 0;
  double coeff = 1.0;

  bool operator==(const OperatorTermConfig&) const = default;
};

struct SourceEntryConfig {
  int k = 0;
  std::vector<AtomConfig> atoms;

  bool operator==(const SourceEntryConfig&) const = default;
};

struct EvalConfig {
  double x_min = 0.0;
  double x_max = 1.0;
  int x_steps = 2;
  double t = 0.1;
  int n_terms = 1;

  bool operator==(const EvalConfig&) const = default;
};

struct ProblemConfig {
  double alpha = 0.0;
  std::vector<OperatorTermConfig> op;
  std::vector<AtomConfig> initial;
  std::vector<SourceEntryConfig> source;
  EvalConfig eval;

  bool operator==(const ProblemConfig&) const = default;
};

// Parses and fully validates a JSON config document; unknown fields rejected.
ProblemConfig parse_config(const std::string& text);

// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const ProblemConfig& config);

vim::ProblemSpec make_problem(const ProblemConfig& config);

// Shortest round-trip decimal representation (17 significant digits when
// needed).
std::string format_double(double v);

// CSV emitters behind the CLI commands. All output uses '.' decimals, comma
// delimiters, LF line endings, and a header row.
void write_solve_csv(const ProblemConfig& config, int n, std::ostream& out);
void write_error_curve_csv(const ProblemConfig& config, int n_max, double x, std::ostream& out);
void write_table_csv(const std::vector<double>& alphas, const std::vector<double>& taus,
                     double x, double t, int threads, std::ostream& out);

}  // namespace fracvim::io
