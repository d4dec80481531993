#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chiralkit/errors.hpp"
#include "chiralkit/germ.hpp"
#include "degree_oracle.hpp"
#include "test_util.hpp"

using namespace chiralkit;
using namespace chiralkit::testutil;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
}

TEST_CASE("hessian_at_origin: exact matrices, corank, trace") {
  HessianData h = hessian_at_origin(P("x^2/2 + y^2/2 - z^2"));
  CHECK(h.matrix[0][0] == rat(1));
  CHECK(h.matrix[1][1] == rat(1));
  CHECK(h.matrix[2][2] == rat(-2));
  CHECK(h.matrix[0][1] == rat(0));
  CHECK(h.corank == 0);
  CHECK(h.morse_index == 1);
  CHECK(sgn(h.trace) == 0);

  HessianData d4 = hessian_at_origin(P("x^2*y - y^3/3 + z^2/2"));
  CHECK(d4.matrix[0][0] == rat(0));
  CHECK(d4.matrix[1][1] == rat(0));
  CHECK(d4.matrix[2][2] == rat(1));
  CHECK(d4.corank == 2);
  CHECK(d4.trace == rat(1));
  CHECK_FALSE(d4.morse_index.has_value());

  HessianData cubic = hessian_at_origin(P("x^3"));
  CHECK(cubic.corank == 3);
  CHECK(sgn(cubic.trace) == 0);

  CHECK_THROWS_AS(hessian_at_origin(P("x + x^2")), NonCriticalOriginError);
}

TEST_CASE("numeric_index: Morse patterns and the paper's degenerate germs") {
  // All eight Morse sign patterns: index = (-1)^{morse index}.
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        Polynomial phi;
        phi.add_term({2, 0, 0}, rat(sx));
        phi.add_term({0, 2, 0}, rat(sy));
        phi.add_term({0, 0, 2}, rat(sz));
        int morse = (sx < 0) + (sy < 0) + (sz < 0);
        DegreeResult r = numeric_index(gradient(phi), Eigen::Vector3d::Zero(), 1.0);
        CHECK(r.index == (morse % 2 == 0 ? 1 : -1));
        CHECK(r.residual < 0.01);
        CHECK(r.grid_rows == 200);
      }

  DegreeResult morse1 = numeric_index(gradient(P("x^2/2 + y^2/2 - z^2")), {0, 0, 0}, 1.0);
  CHECK(morse1.index == -1);

  DegreeResult d4 = numeric_index(gradient(P("x^2*y - y^3/3 + z^2/2")), {0, 0, 0}, 1.0);
  CHECK(d4.index == -2);
  CHECK(d4.residual < 0.05);

  // a = 1 puts extra zeros of the gradient at distance ~0.43; stay inside.
  DegreeResult t444 = numeric_index(gradient(P("x^4 + y^4 + z^4 + x*y*z")), {0, 0, 0}, 0.25);
  CHECK(t444.index == -3);
  CHECK(t444.residual < 0.05);
}

TEST_CASE("numeric_index agrees with the signed-preimage oracle") {
  SampledField d4 = sampled(gradient(P("x^2*y - y^3/3 + z^2/2")));
  CHECK(oracle::degree_oracle(d4, {0, 0, 0}, 1.0) == -2);

  SampledField t444 = sampled(gradient(P("x^4 + y^4 + z^4 + x*y*z")));
  CHECK(oracle::degree_oracle(t444, {0, 0, 0}, 0.25) == -3);
}

TEST_CASE("numeric_index is radius-invariant on homogeneous-leading germs") {
  for (const char* src : {"x^2/2 + y^2/2 - z^2", "x^2*y - y^3/3 + z^2/2"}) {
    PolyVectorField X = gradient(P(src));
    DegreeResult base = numeric_index(X, Eigen::Vector3d::Zero(), 1.0);
    for (double radius : {0.5, 2.0}) {
      DegreeResult r = numeric_index(X, Eigen::Vector3d::Zero(), radius);
      CHECK(r.index == base.index);
      CHECK(r.residual < 0.05);
    }
  }
}

TEST_CASE("numeric_index: Poincare-Hopf over an enclosing sphere") {
  // psi = |p-a|^2 |p+a|^2 has zeros of its gradient at +-a (index +1 each)
  // and a saddle between them (index -1); the enclosing degree is the sum.
  Polynomial f = P("(x - 1/2)^2 + y^2 + z^2");
  Polynomial g = P("(x + 1/2)^2 + y^2 + z^2");
  PolyVectorField X = gradient(f * g);

  CHECK(numeric_index(X, {0.5, 0, 0}, 0.2).index == 1);
  CHECK(numeric_index(X, {-0.5, 0, 0}, 0.2).index == 1);
  CHECK(numeric_index(X, {0.0, 0, 0}, 0.2).index == -1);
  CHECK(numeric_index(X, {0.0, 0, 0}, 2.0).index == 1);
}

TEST_CASE("numeric_index error paths") {
  // Gradient of ((r^2-1)^2) vanishes on the whole unit sphere.
  Polynomial shell = P("(x^2 + y^2 + z^2 - 1)^2");
  CHECK_THROWS_AS(numeric_index(gradient(shell), Eigen::Vector3d::Zero(), 1.0),
                  ZeroOnSphereError);
}

TEST_CASE("beltrami_obstruction verdicts") {
  CHECK(beltrami_obstruction(P("x^2*y - y^3/3 + z^2/2")) == BeltramiObstruction::corank2);
  CHECK(beltrami_obstruction(P("x^4 + y^2 + z^2")) ==
        BeltramiObstruction::spherical_level_sets);
  CHECK(beltrami_obstruction(P("-x^4 - y^2 - z^2")) ==
        BeltramiObstruction::spherical_level_sets);
  CHECK(beltrami_obstruction(P("x^6 + y^2 + z^2")) ==
        BeltramiObstruction::spherical_level_sets);
  CHECK(beltrami_obstruction(P("x^2 + y^2 + z^2")) ==
        BeltramiObstruction::spherical_level_sets);
  CHECK(beltrami_obstruction(P("x^2/2 + y^2/2 - z^2")) == BeltramiObstruction::none_found);
  CHECK(beltrami_obstruction(P("x^2 + y^2 - z^2")) == BeltramiObstruction::nonzero_trace);
  // Harmonic representative of the fold: no obstruction found.
  CHECK(beltrami_obstruction(P("x^3/3 - x*y^2/2 - x*z^2/2 + y^2/2 - z^2/2")) ==
        BeltramiObstruction::none_found);
}

TEST_CASE("laplacian: examples, linearity, finite-difference agreement") {
  CHECK(laplacian(P("x^2/2 + y^2/2 - z^2")).is_zero());
  for (const char* a : {"0", "1/3", "1", "7/2"}) {
    Polynomial phi = P("x^3/3 + y^2/2 - z^2/2") -
                     Polynomial(rat_from_string(a)) * P("x*z^2") -
                     (Polynomial(rat(1)) - Polynomial(rat_from_string(a))) * P("x*y^2");
    CHECK(laplacian(phi).is_zero());
  }
  CHECK(laplacian(P("x^2*y - y^3/3 + z^2/2")) == Polynomial(1L));

  std::mt19937 rng(43);
  Polynomial p = random_polynomial(rng, 5, 8, 100);
  Polynomial q = random_polynomial(rng, 5, 8, 100);
  CHECK(laplacian(p + q) == laplacian(p) + laplacian(q));

  PolyEval pe(p);
  PolyEval lap(laplacian(p));
  const double h = 1e-3;
  for (int i = 0; i < 1000; ++i) {
    Eigen::Vector3d x = random_unit_box_point(rng);
    double fd = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      Eigen::Vector3d e = Eigen::Vector3d::Zero();
      e[axis] = h;
      fd += (pe(x + e) - 2 * pe(x) + pe(x - e)) / (h * h);
    }
    double exact = lap(x);
    CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("germ catalog: critical origins, isolated zeros, verified indices") {
  const auto& catalog = germ_catalog();
  CHECK(catalog.size() >= 8);
  for (const auto& e : catalog) {
    CAPTURE(e.name);
    CHECK(sgn(e.phi.coefficient({0, 0, 0})) == 0);
    PolyVectorField g = gradient(e.phi);
    CHECK(evaluate(g, Eigen::Vector3d::Zero()).norm() == 0.0);

    // Isolated zero: the gradient stays away from zero on a small sphere.
    FormEval ge(g);
    double min_norm = 1e300;
    std::mt19937 rng(7);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 2000; ++i) {
      Eigen::Vector3d n(gauss(rng), gauss(rng), gauss(rng));
      n.normalize();
      min_norm = std::min(min_norm, ge(0.1 * n).norm());
    }
    CHECK(min_norm > 1e-9);

    if (e.expected_index) {
      DegreeResult r = numeric_index(g, Eigen::Vector3d::Zero(), e.index_radius);
      CHECK(r.index == *e.expected_index);
      CHECK(r.residual < 0.05);
    }
  }
  CHECK(find_germ("D4minus") != nullptr);
  CHECK(find_germ("nope") == nullptr);

  // The shipped JSON catalog parses back to the built-in table.
  auto round = catalog_from_json(catalog_to_json());
  REQUIRE(round.size() == catalog.size());
  for (std::size_t i = 0; i < round.size(); ++i) {
    CHECK(round[i].name == catalog[i].name);
    CHECK(round[i].phi == catalog[i].phi);
    CHECK(round[i].expected_index == catalog[i].expected_index);
  }
}

TEST_CASE("analyze_germ end-to-end reports") {
  SingularityReport morse = analyze_germ(P("x^2/2 + y^2/2 - z^2"));
  CHECK(morse.hessian.corank == 0);
  CHECK(morse.harmonic);
  CHECK(morse.index == -1);
  CHECK(morse.chirality == ChiralityVerdict::chiral);
  CHECK(morse.obstruction == BeltramiObstruction::none_found);

  SingularityReport d4 = analyze_germ(P("x^2*y - y^3/3 + z^2/2"));
  CHECK(d4.hessian.corank == 2);
  CHECK(d4.hessian.trace == rat(1));
  CHECK(d4.index == -2);
  CHECK(d4.obstruction == BeltramiObstruction::corank2);

  SingularityReport sphere = analyze_germ(P("x^2 + y^2 + z^2"));
  CHECK(sphere.chirality == ChiralityVerdict::achiral_spherical);
  CHECK(sphere.index == 1);

  Json j = report_to_json(d4);
  CHECK(j["corank"] == 2);
  CHECK(j["numeric_index"] == -2);
  CHECK(j["hessian_trace"] == "1/1");
  CHECK(j["beltrami_obstruction"] == "corank2");
}
