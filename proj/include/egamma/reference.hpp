#pragma once

#include "egamma/rational.hpp"

namespace egamma {

// Verified truncated fractional digits of the limit constant, used only for
// verification and output labeling. The true value lies in
// [reference_value(), reference_value() + 10^-27).
inline constexpr char kReferenceDigits[] = "0.577215664901532860606512090";
inline constexpr int kReferenceDigitCount = 27;

// Exact rational reading of kReferenceDigits.
const Rational& reference_value();

}  // namespace egamma
