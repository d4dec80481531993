#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chiralkit/form_json.hpp"
#include "chiralkit/forms.hpp"

namespace chiralkit {

// Triangulated surface, possibly with boundary. Faces index into vertices;
// the edge set is derived on demand.
struct TriMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<double> vertex_scalar;  // optional per-vertex data

  std::size_t edge_count() const;
  bool valid() const;  // all face indices in range
};

// V - E + F.
int euler_characteristic(const TriMesh& m);

// Subdivided icosahedron projected to the unit sphere; level L has
// 10*4^L + 2 vertices (level 4 -> 2562, level 5 -> 10242).
TriMesh icosphere(int level);

void write_obj(const TriMesh& m, const std::string& path);

// Marching-tetrahedra extraction of {phi = c} within the ball of the given
// radius, on a resolution^3 grid over the bounding cube. The mesh is clipped
// at the sphere so the result is compact with boundary.
// Throws NonRegularValueError when |grad phi| <= 1e-8 at an extracted vertex.
TriMesh level_set_mesh(const Polynomial& phi, double c, double ball_radius, int resolution);

struct DividingSetReport {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double radius = 0.0;
  int component_count = 0;
  int crossing_edges = 0;
  int subdivision_level = 0;
  bool overtwisted = false;  // Giroux on the sphere: disconnected dividing set
  double min_abs_scalar = 0.0;
  std::vector<double> scalar_samples;
};

// Tangency locus of the Euclidean-dual normal of eta on a sphere: scalar is
// <N, outward radial>; components are counted on the crossing-edge graph
// with face adjacency. Throws ZeroOnSphereError.
DividingSetReport dividing_set(const std::function<Eigen::Vector3d(const Eigen::Vector3d&)>& normal,
                               const Eigen::Vector3d& center, double radius, int subdivision = 5);
DividingSetReport dividing_set(const DifferentialForm& eta, const Eigen::Vector3d& center,
                               double radius, int subdivision = 5);

// Planar vector field: two polynomial components in x, y.
struct PlanarVectorField {
  Polynomial cx, cy;
};

// Builds a singular contact form on S x [-1,1] from a surface field X and a
// transversal field Y: u_z = div(X - zY), beta_z = beta + z(du_z - gamma),
// eta = beta_z + u_z dz. Throws TransversalityFailureError.
DifferentialForm surface_contact_construct(const PlanarVectorField& X, const PlanarVectorField& Y);

struct ReebTangencyReport {
  double max_normal_component = 0.0;  // max |<R, dz>| / |R| over the surface
  Eigen::Vector3d worst_point = Eigen::Vector3d::Zero();
  bool pass = false;
  int samples = 0;
};

// Checks that a Reeb-like direction of eta is tangent to the z = 0 surface
// (singular points skipped).
ReebTangencyReport reeb_tangency_check(const DifferentialForm& eta, double halfwidth = 1.0,
                                       int grid = 41);
ReebTangencyReport reeb_tangency_check(
    const std::function<Eigen::Vector3d(const Eigen::Vector3d&)>& reeb_direction,
    double halfwidth = 1.0, int grid = 41);

Json dividing_report_to_json(const DividingSetReport& r);

}  // namespace chiralkit
