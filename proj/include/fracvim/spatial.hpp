#pragma once

#include <vector>

namespace fracvim::spatial {

enum class AtomKind { sine, cosine, exponential, monomial };

// coeff * sin(k x), coeff * cos(k x), coeff * e^(k x), or coeff * x^m.
// param holds the wavenumber k, or the power m for monomials (nonnegative
// integer).
struct SpatialAtom {
  AtomKind kind;
  double param;
  double coeff;
};

bool operator==(const SpatialAtom& a, const SpatialAtom& b);

// Finite linear combination of atoms, kept canonical: atoms sorted by
// (kind, param), at most one atom per key, negligible coefficients dropped.
class SpatialFunction {
 public:
  SpatialFunction() = default;
  explicit SpatialFunction(std::vector<SpatialAtom> atoms);

  static SpatialFunction sine(double k, double coeff = 1.0);
  static SpatialFunction cosine(double k, double coeff = 1.0);
  static SpatialFunction exponential(double k, double coeff = 1.0);
  static SpatialFunction monomial(int m, double coeff = 1.0);

  const std::vector<SpatialAtom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }

  SpatialFunction& operator+=(const SpatialFunction& other);
  SpatialFunction& operator*=(double s);

 private:
  std::vector<SpatialAtom> atoms_;
};

SpatialFunction operator+(SpatialFunction a, const SpatialFunction& b);
SpatialFunction operator*(double s, SpatialFunction f);
bool operator==(const SpatialFunction& a, const SpatialFunction& b);

// coeff * d^order/dx^order, order >= 0.
struct OperatorTerm {
  int order;
  double coeff;
};

// Finite sum of scaled derivative powers; at most one term per order.
class LinearOperator {
 public:
  LinearOperator() = default;
  explicit LinearOperator(std::vector<OperatorTerm> terms);

  static LinearOperator second_derivative(double coeff = 1.0);

  const std::vector<OperatorTerm>& terms() const { return terms_; }

 private:
  std::vector<OperatorTerm> terms_;
};

SpatialFunction differentiate(const SpatialFunction& g);
SpatialFunction apply_operator(const LinearOperator& op, const SpatialFunction& g);
SpatialFunction apply_operator_n(const LinearOperator& op, const SpatialFunction& g, int n);
double evaluate(const SpatialFunction& g, double x);

}  // namespace fracvim::spatial
