#pragma once

#include <Eigen/Core>

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chiralkit/rational.hpp"

namespace chiralkit {

struct Monomial {
  int ex = 0, ey = 0, ez = 0;
  int degree() const { return ex + ey + ez; }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic, x > y > z, largest term first. This fixes the
// canonical serialization order of every polynomial.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.ex != b.ex) return a.ex > b.ex;
    if (a.ey != b.ey) return a.ey > b.ey;
    return a.ez > b.ez;
  }
};

// Sparse polynomial in x, y, z over exact rationals. Stored terms never
// carry a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c) { add_term({0, 0, 0}, c); }
  explicit Polynomial(long c) { add_term({0, 0, 0}, rat(c)); }

  static Polynomial variable(int axis);  // 0 -> x, 1 -> y, 2 -> z
  static Polynomial monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is -1.
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  int min_degree() const;

  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  bool operator==(const Polynomial&) const = default;

  Polynomial derivative(int axis) const;
  // Keeps monomials of total degree <= k.
  Polynomial truncate(int k) const;
  // Substitutes 0 for the given coordinate.
  Polynomial substitute_zero(int axis) const;
  // Homogeneous part of the given total degree.
  Polynomial homogeneous_part(int degree) const;

  Rational evaluate_exact(const Rational& x, const Rational& y, const Rational& z) const;
  double evaluate(const Eigen::Vector3d& p) const;  // exact evaluation, then rounded

  double max_coefficient_magnitude() const;
  std::string to_string() const;

 private:
  TermMap terms_;
};

// Compiled double-precision evaluator for hot loops (quadrature, meshing).
class PolyEval {
 public:
  PolyEval() = default;
  explicit PolyEval(const Polynomial& p);
  double operator()(const Eigen::Vector3d& p) const;
  Eigen::Vector3d gradient(const Eigen::Vector3d& p) const;

 private:
  struct Term {
    int ex, ey, ez;
    double c;
  };
  std::vector<Term> terms_;
  std::vector<Term> grad_[3];
  int max_degree_ = 0;
};

// Inline polynomial grammar: `^` powers, `*` optional, rational literals
// `p/q`, parentheses, whitespace-insensitive. Throws ParseError.
Polynomial parse_polynomial(std::string_view src);

Polynomial laplacian(const Polynomial& p);

// Exact polynomial solution f of the Poisson equation laplacian(f) = q.
Polynomial poisson_solve(const Polynomial& q);

}  // namespace chiralkit
