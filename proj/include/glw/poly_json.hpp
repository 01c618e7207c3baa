#pragma once

// JSON form of a polynomial:
//   {"terms":[{"coeff":"num/den","mono":{"N":1,"C2":1}}, ...]}
// Terms appear in canonical order; monomial keys in generator order.

#include <nlohmann/json.hpp>

#include "glw/polyring.hpp"

namespace glw {

nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
/// Throws ParseError on malformed documents (bad generator, zero or
/// non-integer exponent, bad coefficient, duplicate monomial).
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

} // namespace glw
