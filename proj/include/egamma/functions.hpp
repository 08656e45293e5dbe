#pragma once

#include "egamma/bounded.hpp"

namespace egamma {

// ln 2 via the inverse-hyperbolic-tangent series at 1/3:
//   ln 2 = sum_{k>=0} 2 / ((2k+1) * 3^(2k+1)),
// summed at a guarded scratch precision and truncated once to the target
// grid. The result is one-sided: value <= ln 2 < value + err_ulps * 2^-F,
// with err_ulps = 2 (contract ceiling is 4).
Bounded fx_log2(const PrecisionCtx& ctx);

// Exact rational enclosure lo <= ln 2 <= hi on the ctx grid (hi - lo = 2 ulps).
struct Log2Enclosure {
  Rational lo;
  Rational hi;
};
Log2Enclosure log2_enclosure(const PrecisionCtx& ctx);

// Exact rational enclosure lo <= 1/ln2 <= hi with width < 10^-40, derived by
// exact inversion of a 200-fraction-bit one-sided ln 2 value. Cached.
struct InvLog2Enclosure {
  Rational lo;
  Rational hi;
};
const InvLog2Enclosure& inv_log2_enclosure();

// e^x for |x| <= 1, by Taylor summation with term-size cutoff 2^-(F+2) at a
// guarded scratch precision. Recorded bound: 2 ulps (ceiling: terms + 2).
Bounded fx_exp_small(const FixedPoint& x, const PrecisionCtx& ctx);

// 2^s = 2 * e^((s-1) ln 2) for rational s with |s - 1| <= 1. The recorded
// bound composes the ln 2 and exp bounds with the input scaling error.
Bounded fx_pow2_real(const Rational& s, const PrecisionCtx& ctx);

}  // namespace egamma
