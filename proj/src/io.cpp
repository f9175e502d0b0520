#include "fracvim/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "fracvim/analysis.hpp"

namespace fracvim::io {
namespace {

using nlohmann::json;

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const json& get_field(const json& obj, const std::string& path, const char* name) {
  if (!obj.is_object()) throw ConfigError(path + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ConfigError(path + "." + name + ": missing field");
  return *it;
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    bool found = false;
    for (const char* name : known) found = found || key == name;
    if (!found) throw ConfigError(path + "." + key + ": unknown field");
  }
}

double get_number(const json& obj, const std::string& path, const char* name) {
  const json& field = get_field(obj, path, name);
  if (!field.is_number()) throw ConfigError(path + "." + name + ": expected a number");
  return field.get<double>();
}

int get_integer(const json& obj, const std::string& path, const char* name) {
  const json& field = get_field(obj, path, name);
  if (!field.is_number_integer()) throw ConfigError(path + "." + name + ": expected an integer");
  return field.get<int>();
}

AtomConfig parse_atom(const json& node, const std::string& path) {
  if (!node.is_object()) throw ConfigError(path + ": expected an object");
  reject_unknown(node, path, {"kind", "param", "coeff"});
  AtomConfig atom;
  const json& kind = get_field(node, path, "kind");
  if (!kind.is_string()) throw ConfigError(path + ".kind: expected a string");
  atom.kind = kind.get<std::string>();
  atom.param = get_number(node, path, "param");
  atom.coeff = get_number(node, path, "coeff");
  return atom;
}

spatial::AtomKind atom_kind(const std::string& kind, const std::string& path) {
  if (kind == "sine") return spatial::AtomKind::sine;
  if (kind == "cosine") return spatial::AtomKind::cosine;
  if (kind == "exponential") return spatial::AtomKind::exponential;
  if (kind == "monomial") return spatial::AtomKind::monomial;
  throw ConfigError(path + ".kind: unknown atom kind '" + kind + "'");
}

void validate_atoms(const std::vector<AtomConfig>& atoms, const std::string& path) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string atom_path = index_path(path, i);
    const spatial::AtomKind kind = atom_kind(atoms[i].kind, atom_path);
    if (!std::isfinite(atoms[i].param))
      throw ConfigError(atom_path + ".param: must be finite");
    if (!std::isfinite(atoms[i].coeff))
      throw ConfigError(atom_path + ".coeff: must be finite");
    if (kind == spatial::AtomKind::monomial &&
        (atoms[i].param < 0.0 || atoms[i].param != std::floor(atoms[i].param)))
      throw ConfigError(atom_path + ".param: monomial power must be a nonnegative integer");
  }
}

spatial::SpatialFunction build_function(const std::vector<AtomConfig>& atoms) {
  std::vector<spatial::SpatialAtom> out;
  out.reserve(atoms.size());
  for (const auto& atom : atoms)
    out.push_back({atom_kind(atom.kind, ""), atom.param, atom.coeff});
  return spatial::SpatialFunction(std::move(out));
}

void validate_config(const ProblemConfig& config) {
  if (!std::isfinite(config.alpha) || config.alpha < 0.0 || config.alpha >= 1.0)
    throw ConfigError("alpha: must lie in [0, 1)");

  for (std::size_t i = 0; i < config.op.size(); ++i) {
    const std::string path = index_path("operator", i);
    if (config.op[i].order < 0)
      throw ConfigError(path + ".order: derivative order must be nonnegative");
    if (!std::isfinite(config.op[i].coeff)) throw ConfigError(path + ".coeff: must be finite");
    for (std::size_t j = 0; j < i; ++j)
      if (config.op[j].order == config.op[i].order)
        throw ConfigError(path + ".order: duplicate derivative order");
  }

  validate_atoms(config.initial, "initial");

  for (std::size_t i = 0; i < config.source.size(); ++i) {
    const std::string path = index_path("source", i);
    if (config.source[i].k < 0) throw ConfigError(path + ".k: must be nonnegative");
    for (std::size_t j = 0; j < i; ++j)
      if (config.source[j].k == config.source[i].k)
        throw ConfigError(path + ".k: duplicate source entry");
    validate_atoms(config.source[i].atoms, path + ".atoms");
  }

  if (!std::isfinite(config.eval.x_min)) throw ConfigError("eval.x_min: must be finite");
  if (!std::isfinite(config.eval.x_max)) throw ConfigError("eval.x_max: must be finite");
  if (config.eval.x_min > config.eval.x_max)
    throw ConfigError("eval.x_min: must not exceed eval.x_max");
  if (config.eval.x_steps < 1) throw ConfigError("eval.x_steps: must be positive");
  if (!std::isfinite(config.eval.t) || config.eval.t < 0.0)
    throw ConfigError("eval.t: must be a nonnegative number");
  if (config.eval.n_terms < 0) throw ConfigError("eval.n_terms: must be nonnegative");
}

}  // namespace

ProblemConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(doc, "config", {"alpha", "operator", "initial", "source", "eval"});

  ProblemConfig config;
  config.alpha = get_number(doc, "config", "alpha");

  const json& op = get_field(doc, "config", "operator");
  if (!op.is_array()) throw ConfigError("operator: expected an array");
  for (std::size_t i = 0; i < op.size(); ++i) {
    const std::string path = index_path("operator", i);
    if (!op[i].is_object()) throw ConfigError(path + ": expected an object");
    reject_unknown(op[i], path, {"order", "coeff"});
    config.op.push_back({get_integer(op[i], path, "order"), get_number(op[i], path, "coeff")});
  }

  const json& initial = get_field(doc, "config", "initial");
  if (!initial.is_array()) throw ConfigError("initial: expected an array");
  for (std::size_t i = 0; i < initial.size(); ++i)
    config.initial.push_back(parse_atom(initial[i], index_path("initial", i)));

  const json& source = get_field(doc, "config", "source");
  if (!source.is_array()) throw ConfigError("source: expected an array");
  for (std::size_t i = 0; i < source.size(); ++i) {
    const std::string path = index_path("source", i);
    if (!source[i].is_object()) throw ConfigError(path + ": expected an object");
    reject_unknown(source[i], path, {"k", "atoms"});
    SourceEntryConfig entry;
    entry.k = get_integer(source[i], path, "k");
    const json& atoms = get_field(source[i], path, "atoms");
    if (!atoms.is_array()) throw ConfigError(path + ".atoms: expected an array");
    for (std::size_t j = 0; j < atoms.size(); ++j)
      entry.atoms.push_back(parse_atom(atoms[j], index_path(path + ".atoms", j)));
    config.source.push_back(std::move(entry));
  }

  const json& eval = get_field(doc, "config", "eval");
  if (!eval.is_object()) throw ConfigError("eval: expected an object");
  reject_unknown(eval, "eval", {"x_min", "x_max", "x_steps", "t", "n_terms"});
  config.eval.x_min = get_number(eval, "eval", "x_min");
  config.eval.x_max = get_number(eval, "eval", "x_max");
  config.eval.x_steps = get_integer(eval, "eval", "x_steps");
  config.eval.t = get_number(eval, "eval", "t");
  config.eval.n_terms = get_integer(eval, "eval", "n_terms");

  validate_config(config);
  return config;
}

std::string serialize_config(const ProblemConfig& config) {
  json doc;
  doc["alpha"] = config.alpha;
  doc["operator"] = json::array();
  for (const auto& term : config.op)
    doc["operator"].push_back({{"order", term.order}, {"coeff", term.coeff}});
  doc["initial"] = json::array();
  for (const auto& atom : config.initial)
    doc["initial"].push_back(
        {{"kind", atom.kind}, {"param", atom.param}, {"coeff", atom.coeff}});
  doc["source"] = json::array();
  for (const auto& entry : config.source) {
    json atoms = json::array();
    for (const auto& atom : entry.atoms)
      atoms.push_back({{"kind", atom.kind}, {"param", atom.param}, {"coeff", atom.coeff}});
    doc["source"].push_back({{"k", entry.k}, {"atoms", std::move(atoms)}});
  }
  doc["eval"] = {{"x_min", config.eval.x_min},
                 {"x_max", config.eval.x_max},
                 {"x_steps", config.eval.x_steps},
                 {"t", config.eval.t},
                 {"n_terms", config.eval.n_terms}};
  return doc.dump(2) + "\n";
}

vim::ProblemSpec make_problem(const ProblemConfig& config) {
  validate_config(config);
  std::vector<spatial::OperatorTerm> op_terms;
  op_terms.reserve(config.op.size());
  for (const auto& term : config.op) op_terms.push_back({term.order, term.coeff});

  std::vector<vim::SourceSeries::Entry> entries;
  entries.reserve(config.source.size());
  for (const auto& entry : config.source)
    entries.push_back({entry.k, build_function(entry.atoms)});

  return {fracops::FracOrder(config.alpha), spatial::LinearOperator(std::move(op_terms)),
          build_function(config.initial), vim::SourceSeries(std::move(entries))};
}

std::string format_double(double v) {
  char buffer[32];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, end);
}

void write_solve_csv(const ProblemConfig& config, int n, std::ostream& out) {
  if (config.eval.x_steps < 2)
    throw ConfigError("eval.x_steps: need at least 2 grid points for a solve");
  if (n < 0) throw ConfigError("n: must be nonnegative");
  const vim::ProblemSpec problem = make_problem(config);
  const bool have_exact = vim::is_sinusoidal_case(problem);
  const vim::SolutionSeries solution = n == 0
                                           ? vim::SolutionSeries(problem.initial)
                                           : vim::truncated_solution(problem, n - 1);

  out << (have_exact ? "x,c_n,c_exact\n" : "x,c_n\n");
  const double span = config.eval.x_max - config.eval.x_min;
  for (int i = 0; i < config.eval.x_steps; ++i) {
    const double x = config.eval.x_min + span * i / (config.eval.x_steps - 1);
    out << format_double(x) << ','
        << format_double(vim::evaluate_solution(solution, x, config.eval.t));
    if (have_exact) {
      const double exact = problem.order.alpha == 0.0
                               ? vim::classical_solution(x, config.eval.t)
                               : vim::exact_sinusoidal(problem.order, x, config.eval.t);
      out << ',' << format_double(exact);
    }
    out << '\n';
  }
}

void write_error_curve_csv(const ProblemConfig& config, int n_max, double x, std::ostream& out) {
  if (n_max < 1) throw ConfigError("n-max: must be at least 1");
  const vim::ProblemSpec problem = make_problem(config);
  if (!vim::is_sinusoidal_case(problem))
    throw ConfigError("error curve: problem has no exact reference solution");

  out << "n,E_n,ln_E_n\n";
  for (int n = 1; n <= n_max; ++n) {
    const double error = analysis::relative_error(problem, n, x, config.eval.t);
    out << n << ',' << format_double(error) << ',' << format_double(std::log(error)) << '\n';
  }
}

void write_table_csv(const std::vector<double>& alphas, const std::vector<double>& taus,
                     double x, double t, int threads, std::ostream& out) {
  const analysis::TableGrid grid = analysis::table_sweep(alphas, taus, x, t, threads);

  out << "tau";
  for (double alpha : alphas) out << ',' << format_double(alpha);
  out << '\n';
  for (std::size_t ti = 0; ti < taus.size(); ++ti) {
    out << format_double(taus[ti]);
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
      const auto& cell = grid.cell(ti, ai);
      if (cell)
        out << ',' << cell->n;
      else
        out << ",NA";
    }
    out << '\n';
  }
}

}  // namespace fracvim::io
