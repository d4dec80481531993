#include "chiralkit/form_json.hpp"

#include <array>
#include <stdexcept>

namespace chiralkit {

namespace {

const std::array<std::vector<std::string>, 4> kComponentKeys = {
    std::vector<std::string>{"1"},
    {"dx", "dy", "dz"},
    {"dydz", "dzdx", "dxdy"},
    {"dxdydz"},
};

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(Json::array({Json::array({m.ex, m.ey, m.ez}), rat_to_string(c)}));
  return terms;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  Polynomial p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw std::invalid_argument("polynomial term must be [[ex,ey,ez], \"p/q\"]");
    const auto& e = term[0];
    Monomial m{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()};
    p.add_term(m, rat_from_string(term[1].get<std::string>()));
  }
  return p;
}

Json form_to_json(const DifferentialForm& a) {
  Json j;
  j["degree"] = a.degree();
  Json comps;
  const auto& keys = kComponentKeys[a.degree()];
  for (int i = 0; i < a.component_count(); ++i) comps[keys[i]] = polynomial_to_json(a.component(i));
  j["components"] = comps;
  return j;
}

DifferentialForm form_from_json(const Json& j) {
  int degree = j.at("degree").get<int>();
  if (degree < 0 || degree > 3) throw std::invalid_argument("form degree must be in 0..3");
  DifferentialForm a(degree);
  const auto& keys = kComponentKeys[degree];
  const Json& comps = j.at("components");
  for (int i = 0; i < a.component_count(); ++i)
    if (comps.contains(keys[i])) a.component(i) = polynomial_from_json(comps[keys[i]]);
  return a;
}

}  // namespace chiralkit
