#pragma once

#include "localext/poly.hpp"

#include <string>

namespace localext {

// Accepts expressions in x built from rational literals, + - * / ^ and parentheses,
// or a comma separated coefficient list c0,c1,...,cn. Degree 0 is rejected.
Poly parse_poly(const std::string& text);

}  // namespace localext
