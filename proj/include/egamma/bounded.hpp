#pragma once

#include "egamma/fixed_point.hpp"
#include "egamma/rational.hpp"

namespace egamma {

// A fixed-point value together with a rigorous absolute error bound,
// expressed as a count of ulps (1 ulp = 2^-F): |value - true| <= err_ulps *
// 2^-F. Composition helpers below propagate worst-case bounds using exact
// integer arithmetic, so every bound that reaches a caller is provable.
struct Bounded {
  FixedPoint value;
  BigInt err_ulps{0};

  Rational error_bound() const;      // err_ulps * 2^-F, exact
  Rational upper() const;            // value + error_bound
  Rational lower() const;            // value - error_bound
  bool contains(const Rational& x) const;
};

Bounded b_exact(FixedPoint v);
Bounded b_from_rational(const Rational& q, const PrecisionCtx& ctx);

// Same-grid additive ops: values exact, error bounds add.
Bounded b_add(const Bounded& a, const Bounded& b);
Bounded b_sub(const Bounded& a, const Bounded& b);
Bounded b_neg(const Bounded& a);

// Truncating product. New bound:
//   1 + ceil((|ma| * eb + (|mb| + eb) * ea) / 2^F)  ulps.
Bounded b_mul(const Bounded& a, const Bounded& b, const PrecisionCtx& ctx);

// Quotient by a bounded divisor; requires |mb| > eb (divisor bounded away
// from zero), else throws std::domain_error.
Bounded b_div(const Bounded& a, const Bounded& b, const PrecisionCtx& ctx);

// Exact integer scaling: error scales with |k|.
Bounded b_mul_int(const Bounded& a, const BigInt& k);

// Truncating division by a nonzero exact integer: 1 + ceil(ea / |k|) ulps.
Bounded b_div_int(const Bounded& a, const BigInt& k, const PrecisionCtx& ctx);

Bounded b_shift_up(const Bounded& a, long e);  // * 2^e, exact

Bounded b_add_err(Bounded a, const BigInt& extra_ulps);

}  // namespace egamma
