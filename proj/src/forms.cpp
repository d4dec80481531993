#include "chiralkit/forms.hpp"

#include <stdexcept>

#include "chiralkit/errors.hpp"

namespace chiralkit {

DifferentialForm::DifferentialForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 3) throw std::invalid_argument("form degree must be in 0..3");
  components_.resize(degree == 0 || degree == 3 ? 1 : 3);
}

DifferentialForm DifferentialForm::scalar(Polynomial f) {
  DifferentialForm a(0);
  a.components_[0] = std::move(f);
  return a;
}

DifferentialForm DifferentialForm::one_form(Polynomial cx, Polynomial cy, Polynomial cz) {
  DifferentialForm a(1);
  a.components_[0] = std::move(cx);
  a.components_[1] = std::move(cy);
  a.components_[2] = std::move(cz);
  return a;
}

DifferentialForm DifferentialForm::two_form(Polynomial cyz, Polynomial czx, Polynomial cxy) {
  DifferentialForm a(2);
  a.components_[0] = std::move(cyz);
  a.components_[1] = std::move(czx);
  a.components_[2] = std::move(cxy);
  return a;
}

DifferentialForm DifferentialForm::three_form(Polynomial f) {
  DifferentialForm a(3);
  a.components_[0] = std::move(f);
  return a;
}

bool DifferentialForm::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r(degree_);
  for (int i = 0; i < component_count(); ++i) r.components_[i] = -components_[i];
  return r;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("adding forms of different degree");
  for (int i = 0; i < component_count(); ++i) components_[i] += o.components_[i];
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("subtracting forms of different degree");
  for (int i = 0; i < component_count(); ++i) components_[i] -= o.components_[i];
  return *this;
}

DifferentialForm operator*(const Rational& c, const DifferentialForm& a) {
  DifferentialForm r(a.degree_);
  for (int i = 0; i < a.component_count(); ++i) r.components_[i] = c * a.components_[i];
  return r;
}

DifferentialForm operator*(const Polynomial& f, const DifferentialForm& a) {
  DifferentialForm r(a.degree_);
  for (int i = 0; i < a.component_count(); ++i) r.components_[i] = f * a.components_[i];
  return r;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  int p = a.degree(), q = b.degree();
  if (p + q > 3) throw std::invalid_argument("wedge degree overflow: " + std::to_string(p) + " + " +
                                             std::to_string(q));
  if (p == 0) return a.component(0) * b;
  if (q == 0) return b.component(0) * a;
  if (p == 1 && q == 1) {
    // (a1 dx + a2 dy + a3 dz) ^ (b1 dx + b2 dy + b3 dz): cross-product rule.
    return DifferentialForm::two_form(
        a.component(1) * b.component(2) - a.component(2) * b.component(1),
        a.component(2) * b.component(0) - a.component(0) * b.component(2),
        a.component(0) * b.component(1) - a.component(1) * b.component(0));
  }
  if (p == 1 && q == 2) {
    return DifferentialForm::three_form(a.component(0) * b.component(0) +
                                        a.component(1) * b.component(1) +
                                        a.component(2) * b.component(2));
  }
  // p == 2, q == 1: even sign, commute.
  return wedge(b, a);
}

DifferentialForm ext_d(const DifferentialForm& a) {
  switch (a.degree()) {
    case 0: {
      const Polynomial& f = a.component(0);
      return DifferentialForm::one_form(f.derivative(0), f.derivative(1), f.derivative(2));
    }
    case 1:
      // Curl of the component vector.
      return DifferentialForm::two_form(
          a.component(2).derivative(1) - a.component(1).derivative(2),
          a.component(0).derivative(2) - a.component(2).derivative(0),
          a.component(1).derivative(0) - a.component(0).derivative(1));
    case 2:
      // Divergence of the component vector.
      return DifferentialForm::three_form(a.component(0).derivative(0) +
                                          a.component(1).derivative(1) +
                                          a.component(2).derivative(2));
    default:
      throw std::invalid_argument("ext_d on a 3-form is a contract violation");
  }
}

DifferentialForm interior_product(const PolyVectorField& X, const DifferentialForm& a) {
  switch (a.degree()) {
    case 1:
      return DifferentialForm::scalar(X.cx * a.component(0) + X.cy * a.component(1) +
                                      X.cz * a.component(2));
    case 2:
      // iota_X(dy^dz) = X2 dz - X3 dy, cyclically.
      return DifferentialForm::one_form(
          a.component(1) * X.cz - a.component(2) * X.cy,
          a.component(2) * X.cx - a.component(0) * X.cz,
          a.component(0) * X.cy - a.component(1) * X.cx);
    case 3:
      return DifferentialForm::two_form(a.component(0) * X.cx, a.component(0) * X.cy,
                                        a.component(0) * X.cz);
    default:
      throw std::invalid_argument("interior product of a 0-form is a contract violation");
  }
}

DifferentialForm hodge_euclid(const DifferentialForm& a) {
  // In these component bases the star is the identity on components.
  switch (a.degree()) {
    case 0:
      return DifferentialForm::three_form(a.component(0));
    case 1:
      return DifferentialForm::two_form(a.component(0), a.component(1), a.component(2));
    case 2:
      return DifferentialForm::one_form(a.component(0), a.component(1), a.component(2));
    default:
      return DifferentialForm::scalar(a.component(0));
  }
}

DifferentialForm poincare_homotopy(const DifferentialForm& b) {
  int k = b.degree();
  if (k == 0) throw std::invalid_argument("poincare_homotopy requires degree >= 1");
  if (k != 3 && !ext_d(b).is_zero()) throw NotClosedError("poincare_homotopy: db != 0");
  PolyVectorField E = euler_field();
  DifferentialForm out(k - 1);
  // H(b) = sum over component monomials: iota_E(monomial part) / (m + k),
  // m the monomial total degree.
  for (int ci = 0; ci < b.component_count(); ++ci) {
    for (const auto& [mono, coeff] : b.component(ci).terms()) {
      DifferentialForm piece(k);
      piece.component(ci) = Polynomial::monomial(mono, coeff);
      out += (rat(1) / rat(mono.degree() + k)) * interior_product(E, piece);
    }
  }
  return out;
}

DifferentialForm truncate_jet(const DifferentialForm& a, int k) {
  if (k < 0) throw std::invalid_argument("truncate_jet: k must be >= 0");
  DifferentialForm r(a.degree());
  for (int i = 0; i < a.component_count(); ++i) r.component(i) = a.component(i).truncate(k);
  return r;
}

Eigen::Vector3d evaluate(const DifferentialForm& a, const Eigen::Vector3d& p) {
  if (a.degree() != 1 && a.degree() != 2)
    throw std::invalid_argument("vector evaluate needs a 3-component form");
  return {a.component(0).evaluate(p), a.component(1).evaluate(p), a.component(2).evaluate(p)};
}

double evaluate_scalar(const DifferentialForm& a, const Eigen::Vector3d& p) {
  if (a.degree() != 0 && a.degree() != 3)
    throw std::invalid_argument("scalar evaluate needs a 1-component form");
  return a.component(0).evaluate(p);
}

Eigen::Vector3d evaluate(const PolyVectorField& X, const Eigen::Vector3d& p) {
  return {X.cx.evaluate(p), X.cy.evaluate(p), X.cz.evaluate(p)};
}

Polynomial divergence(const PolyVectorField& X) {
  return X.cx.derivative(0) + X.cy.derivative(1) + X.cz.derivative(2);
}

PolyVectorField gradient(const Polynomial& f) {
  return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

DifferentialForm differential(const Polynomial& f) {
  return DifferentialForm::one_form(f.derivative(0), f.derivative(1), f.derivative(2));
}

DifferentialForm flat(const PolyVectorField& X) {
  return DifferentialForm::one_form(X.cx, X.cy, X.cz);
}

PolyVectorField sharp(const DifferentialForm& a) {
  if (a.degree() != 1) throw std::invalid_argument("sharp expects a 1-form");
  return {a.component(0), a.component(1), a.component(2)};
}

PolyVectorField euler_field() {
  return {Polynomial::variable(0), Polynomial::variable(1), Polynomial::variable(2)};
}

FormEval::FormEval(const DifferentialForm& a) {
  if (a.component_count() != 3)
    throw std::invalid_argument("FormEval expects a 3-component form");
  for (int i = 0; i < 3; ++i) comps_[i] = PolyEval(a.component(i));
}

FormEval::FormEval(const PolyVectorField& X)
    : comps_{PolyEval(X.cx), PolyEval(X.cy), PolyEval(X.cz)} {}

Eigen::Vector3d FormEval::operator()(const Eigen::Vector3d& p) const {
  return {comps_[0](p), comps_[1](p), comps_[2](p)};
}

Eigen::Matrix3d FormEval::jacobian(const Eigen::Vector3d& p) const {
  Eigen::Matrix3d J;
  for (int i = 0; i < 3; ++i) J.row(i) = comps_[i].gradient(p).transpose();
  return J;
}

}  // namespace chiralkit
