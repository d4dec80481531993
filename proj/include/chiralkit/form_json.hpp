#pragma once

#include <json.hpp>

#include "chiralkit/forms.hpp"

namespace chiralkit {

using Json = nlohmann::ordered_json;

// Term list in canonical (graded-lex) order: [[[ex,ey,ez], "num/den"], ...].
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"degree": k, "components": {"dx": [...], ...}}; component keys are
// "1", "dx"/"dy"/"dz", "dydz"/"dzdx"/"dxdy", "dxdydz" by degree.
Json form_to_json(const DifferentialForm& a);
DifferentialForm form_from_json(const Json& j);

}  // namespace chiralkit
