#pragma once

#include <Eigen/Core>

#include <array>
#include <vector>

#include "chiralkit/polynomial.hpp"

namespace chiralkit {

// Degree-k differential form on R^3 with polynomial components.
// Component bases: degree 0 -> {1}; degree 1 -> {dx, dy, dz};
// degree 2 -> {dy^dz, dz^dx, dx^dy}; degree 3 -> {dx^dy^dz}.
class DifferentialForm {
 public:
  explicit DifferentialForm(int degree);
  static DifferentialForm scalar(Polynomial f);
  static DifferentialForm one_form(Polynomial cx, Polynomial cy, Polynomial cz);
  static DifferentialForm two_form(Polynomial cyz, Polynomial czx, Polynomial cxy);
  static DifferentialForm three_form(Polynomial f);

  int degree() const { return degree_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  const Polynomial& component(int i) const { return components_.at(i); }
  Polynomial& component(int i) { return components_.at(i); }
  bool is_zero() const;

  DifferentialForm operator-() const;
  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(const Rational& c, const DifferentialForm& a);
  friend DifferentialForm operator*(const Polynomial& f, const DifferentialForm& a);

  bool operator==(const DifferentialForm&) const = default;

 private:
  int degree_;
  std::vector<Polynomial> components_;
};

// Polynomial vector field c0terms dx + ... (coefficients of @x, @y, @z).
struct PolyVectorField {
  Polynomial cx, cy, cz;
  bool operator==(const PolyVectorField&) const = default;
};

// Exterior product. Throws std::invalid_argument if the degrees sum past 3.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// Exterior derivative. Calling it on a 3-form is a contract violation.
DifferentialForm ext_d(const DifferentialForm& a);

// Interior product iota_X a; degree drops by one. Degree-0 input is a
// contract violation.
DifferentialForm interior_product(const PolyVectorField& X, const DifferentialForm& a);

// Euclidean Hodge star; an exact involution on every degree.
DifferentialForm hodge_euclid(const DifferentialForm& a);

// Homotopy operator H for the Poincare lemma, centered at the origin:
// d(H(b)) = b exactly for closed b of degree 1..3. Throws NotClosedError.
DifferentialForm poincare_homotopy(const DifferentialForm& b);

// Drops every monomial of total degree > k from every component.
DifferentialForm truncate_jet(const DifferentialForm& a, int k);

// Exact-rational evaluation, then conversion to floating point.
Eigen::Vector3d evaluate(const DifferentialForm& a, const Eigen::Vector3d& p);  // degrees 1, 2
double evaluate_scalar(const DifferentialForm& a, const Eigen::Vector3d& p);    // degrees 0, 3
Eigen::Vector3d evaluate(const PolyVectorField& X, const Eigen::Vector3d& p);

Polynomial divergence(const PolyVectorField& X);
PolyVectorField gradient(const Polynomial& f);
DifferentialForm differential(const Polynomial& f);  // df as a 1-form

// Index-lowering/raising in the Euclidean metric.
DifferentialForm flat(const PolyVectorField& X);
PolyVectorField sharp(const DifferentialForm& a);

PolyVectorField euler_field();  // x @x + y @y + z @z

// Compiled double-precision evaluator for a form's components.
class FormEval {
 public:
  explicit FormEval(const DifferentialForm& a);
  explicit FormEval(const PolyVectorField& X);
  Eigen::Vector3d operator()(const Eigen::Vector3d& p) const;
  Eigen::Matrix3d jacobian(const Eigen::Vector3d& p) const;

 private:
  std::array<PolyEval, 3> comps_;
};

}  // namespace chiralkit
