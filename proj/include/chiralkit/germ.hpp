#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chiralkit/form_json.hpp"
#include "chiralkit/forms.hpp"

namespace chiralkit {

using Mat3Q = std::array<std::array<Rational, 3>, 3>;

Eigen::Matrix3d to_eigen(const Mat3Q& m);

// Exact second-derivative data of a germ at the origin.
struct HessianData {
  Mat3Q matrix;
  Rational trace;
  int rank = 0;
  int corank = 3;
  int positive = 0;  // eigenvalue sign counts, exact over the rationals
  int negative = 0;
  std::optional<int> morse_index;       // set iff corank == 0
  std::optional<Eigen::Vector3i> axis_kernel;  // set iff corank == 1 and the
                                               // kernel is a coordinate axis
};

// Throws NonCriticalOriginError if grad(phi)(0) != 0.
HessianData hessian_at_origin(const Polynomial& phi);

// Point-sampled vector field with derivative; the common currency between
// polynomial fields and the closed-form families.
struct SampledField {
  std::function<Eigen::Vector3d(const Eigen::Vector3d&)> value;
  std::function<Eigen::Matrix3d(const Eigen::Vector3d&)> jacobian;
};

SampledField sampled(const PolyVectorField& X);

struct DegreeResult {
  int index = 0;
  double residual = 0.0;
  int grid_rows = 0;  // latitude resolution that produced the result
};

// Degree of X/|X| over the sphere: midpoint-rule quadrature on a
// latitude-longitude grid, doubled until the raw value sits near an integer.
// Throws ZeroOnSphereError / NonIntegralDegreeError.
DegreeResult numeric_index(const SampledField& X, const Eigen::Vector3d& center, double radius,
                           int initial_rows = 200, double zero_tol = 1e-9);
DegreeResult numeric_index(const PolyVectorField& X, const Eigen::Vector3d& center, double radius,
                           int initial_rows = 200);

enum class BeltramiObstruction { none_found, corank2, nonzero_trace, spherical_level_sets };
std::string to_string(BeltramiObstruction o);

// Necessary-condition screen for Beltrami realizability of a gradient germ.
BeltramiObstruction beltrami_obstruction(const Polynomial& phi);

enum class ChiralityVerdict { chiral, achiral_spherical, undetermined };
std::string to_string(ChiralityVerdict v);

struct GermCatalogEntry {
  std::string name;
  Polynomial phi;
  std::optional<int> expected_index;
  std::string notes;
  // Sphere radius that isolates the origin from any other zeros of grad(phi).
  double index_radius = 0.75;
};

const std::vector<GermCatalogEntry>& germ_catalog();
const GermCatalogEntry* find_germ(const std::string& name);
Json catalog_to_json();
std::vector<GermCatalogEntry> catalog_from_json(const Json& j);

struct SingularityReport {
  Eigen::Vector3d location = Eigen::Vector3d::Zero();
  HessianData hessian;
  std::optional<int> index;
  double index_residual = 0.0;
  bool harmonic = false;  // laplacian(phi) == 0 exactly
  ChiralityVerdict chirality = ChiralityVerdict::undetermined;
  BeltramiObstruction obstruction = BeltramiObstruction::none_found;
};

SingularityReport analyze_germ(const Polynomial& phi, double index_radius = 0.75);
Json report_to_json(const SingularityReport& r);

}  // namespace chiralkit
