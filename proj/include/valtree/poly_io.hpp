#pragma once

#include <string>
#include <string_view>

#include "valtree/bivar.hpp"

namespace valtree {

// Accepts sums of terms such as `y^2 - x^3 + 1/2*x*y`, with parentheses,
// integer powers and division by polynomials in x alone.
BivarPoly parse_poly(std::string_view text, const BaseField& field = BaseField());

std::string to_string(const UPoly& p);
std::string to_string(const BivarPoly& f);

}  // namespace valtree
