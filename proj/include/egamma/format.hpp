#pragma once

#include <string>

#include "egamma/rational.hpp"

namespace egamma {

// Approximate base-10 logarithm of a positive rational, for display only.
double log10_estimate(const Rational& r);

// Scientific notation with `sig` significant digits, final digit rounded
// *up* so the printed string never understates an error bound.
// format_scientific_upper(1/300, 2) == "3.4e-3". Zero prints as "0".
std::string format_scientific_upper(const Rational& r, int sig = 2);

}  // namespace egamma
