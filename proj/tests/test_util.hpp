#pragma once

#include <random>

#include "chiralkit/forms.hpp"

namespace chiralkit::testutil {

inline Rational random_rational(std::mt19937& rng, long max_mag = 1000) {
  std::uniform_int_distribution<long> num(-max_mag, max_mag);
  std::uniform_int_distribution<long> den(1, max_mag);
  return rat(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937& rng, int max_degree = 5, int n_terms = 6,
                                    long max_mag = 1000) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial p;
  for (int t = 0; t < n_terms; ++t) {
    int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    int ex = split(rng);
    std::uniform_int_distribution<int> split2(0, d - ex);
    int ey = split2(rng);
    p.add_term({ex, ey, d - ex - ey}, random_rational(rng, max_mag));
  }
  return p;
}

inline DifferentialForm random_form(std::mt19937& rng, int degree, int max_degree = 5,
                                    int n_terms = 4, long max_mag = 1000) {
  DifferentialForm a(degree);
  for (int i = 0; i < a.component_count(); ++i)
    a.component(i) = random_polynomial(rng, max_degree, n_terms, max_mag);
  return a;
}

inline Eigen::Vector3d random_unit_box_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

}  // namespace chiralkit::testutil
