#include "chiralkit/germ.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "chiralkit/errors.hpp"

namespace chiralkit {

Eigen::Matrix3d to_eigen(const Mat3Q& m) {
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = rat_to_double(m[i][j]);
  return r;
}

namespace {

int rational_rank3(Mat3Q m) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int row = rank; row < 3; ++row)
      if (sgn(m[row][col]) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int row = rank + 1; row < 3; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      Rational f = m[row][col] / m[rank][col];
      for (int j = col; j < 3; ++j) m[row][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Sign-variation count with zero coefficients skipped; exact positive-root
// count for a real-rooted cubic (Descartes).
int sign_variations(const std::array<Rational, 4>& coeffs) {
  int vars = 0, last = 0;
  for (const Rational& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++vars;
    last = s;
  }
  return vars;
}

// Kernel basis vector for a rank-2 rational symmetric matrix, when the
// kernel happens to lie along a coordinate axis.
std::optional<Eigen::Vector3i> axis_kernel_of(const Mat3Q& H) {
  for (int axis = 0; axis < 3; ++axis) {
    bool in_kernel = true;
    for (int i = 0; i < 3; ++i)
      if (sgn(H[i][axis]) != 0) in_kernel = false;
    if (in_kernel) {
      Eigen::Vector3i e = Eigen::Vector3i::Zero();
      e[axis] = 1;
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace

HessianData hessian_at_origin(const Polynomial& phi) {
  if (sgn(phi.coefficient({1, 0, 0})) != 0 || sgn(phi.coefficient({0, 1, 0})) != 0 ||
      sgn(phi.coefficient({0, 0, 1})) != 0)
    throw NonCriticalOriginError("hessian_at_origin: grad(phi)(0) != 0");

  HessianData h;
  h.matrix[0][0] = rat(2) * phi.coefficient({2, 0, 0});
  h.matrix[1][1] = rat(2) * phi.coefficient({0, 2, 0});
  h.matrix[2][2] = rat(2) * phi.coefficient({0, 0, 2});
  h.matrix[0][1] = h.matrix[1][0] = phi.coefficient({1, 1, 0});
  h.matrix[0][2] = h.matrix[2][0] = phi.coefficient({1, 0, 1});
  h.matrix[1][2] = h.matrix[2][1] = phi.coefficient({0, 1, 1});

  h.trace = h.matrix[0][0] + h.matrix[1][1] + h.matrix[2][2];
  h.rank = rational_rank3(h.matrix);
  h.corank = 3 - h.rank;

  const Mat3Q& m = h.matrix;
  Rational c2 = h.trace;
  Rational c1 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  Rational c0 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // Characteristic polynomial l^3 - c2 l^2 + c1 l - c0 is real-rooted.
  h.positive = sign_variations({rat(1), -c2, c1, -c0});
  h.negative = sign_variations({rat(-1), -c2, -c1, -c0});
  if (h.corank == 0) h.morse_index = h.negative;
  if (h.corank == 1) h.axis_kernel = axis_kernel_of(h.matrix);
  return h;
}

SampledField sampled(const PolyVectorField& X) {
  auto eval = std::make_shared<FormEval>(X);
  return {[eval](const Eigen::Vector3d& p) { return (*eval)(p); },
          [eval](const Eigen::Vector3d& p) { return eval->jacobian(p); }};
}

namespace {

double degree_quadrature(const SampledField& X, const Eigen::Vector3d& center, double radius,
                         int rows, double zero_tol) {
  const double pi = std::numbers::pi;
  int cols = 2 * rows;
  double dtheta = pi / rows, dphi = 2 * pi / cols;
  double sum = 0.0;
  for (int i = 0; i < rows; ++i) {
    double theta = (i + 0.5) * dtheta;
    double st = std::sin(theta), ct = std::cos(theta);
    for (int j = 0; j < cols; ++j) {
      double phi = (j + 0.5) * dphi;
      double sp = std::sin(phi), cp = std::cos(phi);
      Eigen::Vector3d n(st * cp, st * sp, ct);
      Eigen::Vector3d p = center + radius * n;
      Eigen::Vector3d v = X.value(p);
      double norm = v.norm();
      if (norm <= zero_tol)
        throw ZeroOnSphereError("numeric_index: field vanishes on the sphere (|X| = " +
                                std::to_string(norm) + ")");
      Eigen::Matrix3d J = X.jacobian(p);
      Eigen::Vector3d dp_t = radius * Eigen::Vector3d(ct * cp, ct * sp, -st);
      Eigen::Vector3d dp_p = radius * Eigen::Vector3d(-st * sp, st * cp, 0.0);
      Eigen::Vector3d Xt = J * dp_t, Xp = J * dp_p;
      Eigen::Vector3d u = v / norm;
      Eigen::Vector3d ut = (Xt - u * u.dot(Xt)) / norm;
      Eigen::Vector3d up = (Xp - u * u.dot(Xp)) / norm;
      sum += u.dot(ut.cross(up));
    }
  }
  return sum * dtheta * dphi / (4 * pi);
}

}  // namespace

DegreeResult numeric_index(const SampledField& X, const Eigen::Vector3d& center, double radius,
                           int initial_rows, double zero_tol) {
  for (int rows = initial_rows; rows <= 1600; rows *= 2) {
    double raw = degree_quadrature(X, center, radius, rows, zero_tol);
    double nearest = std::round(raw);
    double residual = std::abs(raw - nearest);
    if (residual < 0.05) return {static_cast<int>(nearest), residual, rows};
  }
  throw NonIntegralDegreeError(
      "numeric_index: quadrature did not settle near an integer; refine the grid or shrink the "
      "radius");
}

DegreeResult numeric_index(const PolyVectorField& X, const Eigen::Vector3d& center, double radius,
                           int initial_rows) {
  double scale = std::max({1.0, X.cx.max_coefficient_magnitude(),
                           X.cy.max_coefficient_magnitude(), X.cz.max_coefficient_magnitude()});
  return numeric_index(sampled(X), center, radius, initial_rows, 1e-9 * scale);
}

std::string to_string(BeltramiObstruction o) {
  switch (o) {
    case BeltramiObstruction::none_found: return "none-found";
    case BeltramiObstruction::corank2: return "corank2";
    case BeltramiObstruction::nonzero_trace: return "nonzero-trace";
    case BeltramiObstruction::spherical_level_sets: return "spherical-level-sets";
  }
  return "?";
}

std::string to_string(ChiralityVerdict v) {
  switch (v) {
    case ChiralityVerdict::chiral: return "chiral";
    case ChiralityVerdict::achiral_spherical: return "achiral-spherical";
    case ChiralityVerdict::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Sphere-like level sets are recognized for the catalog shapes only:
// definite Hessians, and corank-1 germs of the form s(c x_i^{2m} + definite
// quadratic in the other two coordinates).
bool spherical_level_sets(const Polynomial& phi, const HessianData& h) {
  if (h.corank == 0) return *h.morse_index == 0 || *h.morse_index == 3;
  if (h.corank != 1 || !h.axis_kernel) return false;
  if (h.positive != 2 && h.negative != 2) return false;
  int s = h.positive == 2 ? 1 : -1;
  int axis = 0;
  for (int i = 0; i < 3; ++i)
    if ((*h.axis_kernel)[i] == 1) axis = i;
  Polynomial rest = phi - phi.truncate(2);
  if (rest.is_zero()) return false;
  for (const auto& [m, c] : rest.terms()) {
    int e = axis == 0 ? m.ex : (axis == 1 ? m.ey : m.ez);
    if (e != m.degree() || e < 4 || e % 2 != 0) return false;
    if (sgn(c) != s) return false;
  }
  return true;
}

}  // namespace

BeltramiObstruction beltrami_obstruction(const Polynomial& phi) {
  HessianData h = hessian_at_origin(phi);
  if (h.corank == 2) return BeltramiObstruction::corank2;
  if (spherical_level_sets(phi, h)) return BeltramiObstruction::spherical_level_sets;
  if (sgn(h.trace) != 0) return BeltramiObstruction::nonzero_trace;
  return BeltramiObstruction::none_found;
}

const std::vector<GermCatalogEntry>& germ_catalog() {
  static const std::vector<GermCatalogEntry> catalog = [] {
    std::vector<GermCatalogEntry> c;
    c.push_back({"Morse0", parse_polynomial("x^2 + y^2 + z^2"), 1,
                 "Morse index 0; spherical level sets, achiral"});
    c.push_back({"Morse1", parse_polynomial("x^2/2 + y^2/2 - z^2"), -1,
                 "harmonic normal form of the Morse index 1 zero"});
    c.push_back({"Morse2", parse_polynomial("z^2 - x^2/2 - y^2/2"), 1,
                 "harmonic normal form of the Morse index 2 zero"});
    c.push_back({"Morse3", parse_polynomial("-x^2 - y^2 - z^2"), -1,
                 "Morse index 3; spherical level sets, achiral"});
    c.push_back({"A2", parse_polynomial("x^3/3 - x*y^2/2 - x*z^2/2 + y^2/2 - z^2/2"), 0,
                 "fold (A_2); harmonic representative, realized in curl eigenfields"});
    c.push_back({"A3sphere", parse_polynomial("x^4 + y^2 + z^2"), 1,
                 "A_3 with definite rest; sphere-like level sets, not chiral"});
    c.push_back({"D4minus", parse_polynomial("x^2*y - y^3/3 + z^2/2"), -2,
                 "corank 2, never Beltrami; chiral via an explicit cubic perturbation"});
    // grad(phi) of T444 with a = 1 has further zeros at distance ~0.43
    // (e.g. x = y = z = -1/4); the index sphere must stay inside them.
    c.push_back({"T444", parse_polynomial("x^4 + y^4 + z^4 + x*y*z"), -3,
                 "T_{4,4,4} normal form with unfolding parameter 1", 0.25});
    c.push_back({"U12", parse_polynomial("x^2*y - y^3 + z^4 + x*y*z^2"), -2,
                 "index -2 germ of the class realizable with spherical harmonics; a harmonic "
                 "representative is not part of the catalog",
                 0.25});
    return c;
  }();
  return catalog;
}

const GermCatalogEntry* find_germ(const std::string& name) {
  for (const auto& e : germ_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Json catalog_to_json() {
  Json arr = Json::array();
  for (const auto& e : germ_catalog()) {
    Json j;
    j["name"] = e.name;
    j["phi"] = polynomial_to_json(e.phi);
    j["phi_text"] = e.phi.to_string();
    if (e.expected_index)
      j["expected_index"] = *e.expected_index;
    else
      j["expected_index"] = nullptr;
    j["notes"] = e.notes;
    j["index_radius"] = e.index_radius;
    arr.push_back(j);
  }
  return arr;
}

std::vector<GermCatalogEntry> catalog_from_json(const Json& j) {
  std::vector<GermCatalogEntry> out;
  for (const auto& e : j) {
    GermCatalogEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.phi = polynomial_from_json(e.at("phi"));
    if (!e.at("expected_index").is_null()) entry.expected_index = e["expected_index"].get<int>();
    entry.notes = e.value("notes", "");
    entry.index_radius = e.value("index_radius", 0.75);
    out.push_back(std::move(entry));
  }
  return out;
}

SingularityReport analyze_germ(const Polynomial& phi, double index_radius) {
  SingularityReport r;
  r.hessian = hessian_at_origin(phi);
  r.harmonic = laplacian(phi).is_zero();
  r.obstruction = beltrami_obstruction(phi);

  if (r.hessian.corank == 0) {
    int m = *r.hessian.morse_index;
    r.chirality = (m == 1 || m == 2) ? ChiralityVerdict::chiral : ChiralityVerdict::achiral_spherical;
  } else if (r.obstruction == BeltramiObstruction::spherical_level_sets) {
    r.chirality = ChiralityVerdict::achiral_spherical;
  } else if (r.harmonic) {
    r.chirality = ChiralityVerdict::chiral;
  } else {
    r.chirality = ChiralityVerdict::undetermined;
  }

  DegreeResult deg = numeric_index(gradient(phi), Eigen::Vector3d::Zero(), index_radius);
  r.index = deg.index;
  r.index_residual = deg.residual;
  if (r.hessian.corank == 0 && *r.index != ((*r.hessian.morse_index % 2 == 0) ? 1 : -1))
    throw std::logic_error("analyze_germ: Morse index / degree mismatch");
  return r;
}

Json report_to_json(const SingularityReport& r) {
  Json j;
  j["location"] = {r.location.x(), r.location.y(), r.location.z()};
  Json hess = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 3; ++k) row.push_back(rat_to_string(r.hessian.matrix[i][k]));
    hess.push_back(row);
  }
  j["hessian"] = hess;
  j["hessian_trace"] = rat_to_string(r.hessian.trace);
  j["corank"] = r.hessian.corank;
  if (r.hessian.morse_index)
    j["morse_index"] = *r.hessian.morse_index;
  else
    j["morse_index"] = "not-Morse";
  if (r.index)
    j["numeric_index"] = *r.index;
  else
    j["numeric_index"] = nullptr;
  j["index_residual"] = r.index_residual;
  j["harmonic"] = r.harmonic;
  j["chirality_verdict"] = to_string(r.chirality);
  j["beltrami_obstruction"] = to_string(r.obstruction);
  return j;
}

}  // namespace chiralkit
