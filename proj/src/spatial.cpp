#include "fracvim/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace fracvim::spatial {
namespace {

constexpr double kDropThreshold = 1e-300;

void check_atom(const SpatialAtom& atom) {
  if (!std::isfinite(atom.coeff))
    throw std::invalid_argument("spatial atom: coefficient must be finite");
  if (!std::isfinite(atom.param))
    throw std::invalid_argument("spatial atom: parameter must be finite");
  if (atom.kind == AtomKind::monomial &&
      (atom.param < 0.0 || atom.param != std::floor(atom.param)))
    throw std::invalid_argument("spatial atom: monomial power must be a nonnegative integer");
}

std::vector<SpatialAtom> canonicalize(std::vector<SpatialAtom> atoms) {
  for (const auto& atom : atoms) check_atom(atom);
  std::sort(atoms.begin(), atoms.end(), [](const SpatialAtom& a, const SpatialAtom& b) {
    return std::tie(a.kind, a.param) < std::tie(b.kind, b.param);
  });
  std::vector<SpatialAtom> merged;
  for (const auto& atom : atoms) {
    if (!merged.empty() && merged.back().kind == atom.kind && merged.back().param == atom.param)
      merged.back().coeff += atom.coeff;
    else
      merged.push_back(atom);
  }
  std::erase_if(merged,
                [](const SpatialAtom& a) { return std::fabs(a.coeff) < kDropThreshold; });
  return merged;
}

SpatialAtom derivative_of(const SpatialAtom& atom) {
  switch (atom.kind) {
    case AtomKind::sine:
      return {AtomKind::cosine, atom.param, atom.coeff * atom.param};
    case AtomKind::cosine:
      return {AtomKind::sine, atom.param, -atom.coeff * atom.param};
    case AtomKind::exponential:
      return {AtomKind::exponential, atom.param, atom.coeff * atom.param};
    case AtomKind::monomial:
      if (atom.param == 0.0) return {AtomKind::monomial, 0.0, 0.0};
      return {AtomKind::monomial, atom.param - 1.0, atom.coeff * atom.param};
  }
  throw std::logic_error("spatial atom: unknown kind");
}

}  // namespace

bool operator==(const SpatialAtom& a, const SpatialAtom& b) {
  return a.kind == b.kind && a.param == b.param && a.coeff == b.coeff;
}

SpatialFunction::SpatialFunction(std::vector<SpatialAtom> atoms)
    : atoms_(canonicalize(std::move(atoms))) {}

SpatialFunction SpatialFunction::sine(double k, double coeff) {
  return SpatialFunction({{AtomKind::sine, k, coeff}});
}

SpatialFunction SpatialFunction::cosine(double k, double coeff) {
  return SpatialFunction({{AtomKind::cosine, k, coeff}});
}

SpatialFunction SpatialFunction::exponential(double k, double coeff) {
  return SpatialFunction({{AtomKind::exponential, k, coeff}});
}

SpatialFunction SpatialFunction::monomial(int m, double coeff) {
  if (m < 0) throw std::invalid_argument("spatial atom: monomial power must be a nonnegative integer");
  return SpatialFunction({{AtomKind::monomial, static_cast<double>(m), coeff}});
}

SpatialFunction& SpatialFunction::operator+=(const SpatialFunction& other) {
  std::vector<SpatialAtom> all = atoms_;
  all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
  atoms_ = canonicalize(std::move(all));
  return *this;
}

SpatialFunction& SpatialFunction::operator*=(double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("spatial scale: factor must be finite");
  for (auto& atom : atoms_) atom.coeff *= s;
  std::erase_if(atoms_,
                [](const SpatialAtom& a) { return std::fabs(a.coeff) < kDropThreshold; });
  return *this;
}

SpatialFunction operator+(SpatialFunction a, const SpatialFunction& b) {
  a += b;
  return a;
}

SpatialFunction operator*(double s, SpatialFunction f) {
  f *= s;
  return f;
}

bool operator==(const SpatialFunction& a, const SpatialFunction& b) {
  return a.atoms() == b.atoms();
}

LinearOperator::LinearOperator(std::vector<OperatorTerm> terms) : terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (term.order < 0)
      throw std::invalid_argument("linear operator: derivative order must be nonnegative");
    if (!std::isfinite(term.coeff))
      throw std::invalid_argument("linear operator: coefficient must be finite");
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const OperatorTerm& a, const OperatorTerm& b) { return a.order < b.order; });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].order == terms_[i - 1].order)
      throw std::invalid_argument("linear operator: duplicate derivative order");
}

LinearOperator LinearOperator::second_derivative(double coeff) {
  return LinearOperator({{2, coeff}});
}

SpatialFunction differentiate(const SpatialFunction& g) {
  std::vector<SpatialAtom> out;
  out.reserve(g.atoms().size());
  for (const auto& atom : g.atoms()) out.push_back(derivative_of(atom));
  return SpatialFunction(std::move(out));
}

SpatialFunction apply_operator(const LinearOperator& op, const SpatialFunction& g) {
  SpatialFunction result;
  SpatialFunction current = g;
  int current_order = 0;
  for (const auto& term : op.terms()) {
    while (current_order < term.order) {
      current = differentiate(current);
      ++current_order;
    }
    result += term.coeff * current;
  }
  return result;
}

SpatialFunction apply_operator_n(const LinearOperator& op, const SpatialFunction& g, int n) {
  if (n < 0) throw std::invalid_argument("apply_operator_n: n must be nonnegative");
  SpatialFunction result = g;
  for (int i = 0; i < n; ++i) result = apply_operator(op, result);
  return result;
}

double evaluate(const SpatialFunction& g, double x) {
  double acc = 0.0;
  for (const auto& atom : g.atoms()) {
    switch (atom.kind) {
      case AtomKind::sine:
        acc += atom.coeff * std::sin(atom.param * x);
        break;
      case AtomKind::cosine:
        acc += atom.coeff * std::cos(atom.param * x);
        break;
      case AtomKind::exponential:
        acc += atom.coeff * std::exp(atom.param * x);
        break;
      case AtomKind::monomial:
        acc += atom.coeff * std::pow(x, atom.param);
        break;
    }
  }
  return acc;
}

}  // namespace fracvim::spatial
