#include "egamma/bounded.hpp"

#include <stdexcept>

namespace egamma {

Rational Bounded::error_bound() const {
  return dyadic(err_ulps, value.frac_bits());
}

Rational Bounded::upper() const { return value.to_rational() + error_bound(); }

Rational Bounded::lower() const { return value.to_rational() - error_bound(); }

bool Bounded::contains(const Rational& x) const {
  return lower() <= x && x <= upper();
}

Bounded b_exact(FixedPoint v) { return Bounded{std::move(v), BigInt(0)}; }

Bounded b_from_rational(const Rational& q, const PrecisionCtx& ctx) {
  FixedPoint v = fx_from_rational(q, ctx);
  // Exact iff the scaled numerator divided evenly; recompute the check here
  // so the recorded bound is 0 for dyadic inputs.
  bool exact = (v.to_rational() == q);
  return Bounded{std::move(v), BigInt(exact ? 0 : 1)};
}

Bounded b_add(const Bounded& a, const Bounded& b) {
  return Bounded{fx_add(a.value, b.value), a.err_ulps + b.err_ulps};
}

Bounded b_sub(const Bounded& a, const Bounded& b) {
  return Bounded{fx_sub(a.value, b.value), a.err_ulps + b.err_ulps};
}

Bounded b_neg(const Bounded& a) { return Bounded{fx_neg(a.value), a.err_ulps}; }

Bounded b_mul(const Bounded& a, const Bounded& b, const PrecisionCtx& ctx) {
  // |trunc(ab) - a'b'| <= 1 ulp (truncation)
  //                     + |a| * eb + (|b| + eb) * ea   (cross terms, with
  //   |b'| <= |b| + eb * u used to absorb the ea*eb second-order term).
  FixedPoint v = fx_mul(a.value, b.value, ctx);
  BigInt ma = abs(a.value.mantissa());
  BigInt mb = abs(b.value.mantissa());
  BigInt cross = ma * b.err_ulps + (mb + b.err_ulps) * a.err_ulps;
  BigInt err = 1 + ceil_div(cross, ctx.scale());
  return Bounded{std::move(v), std::move(err)};
}

Bounded b_div(const Bounded& a, const Bounded& b, const PrecisionCtx& ctx) {
  BigInt mb = abs(b.value.mantissa());
  if (mb <= b.err_ulps)
    throw std::domain_error("b_div: divisor not bounded away from zero");
  FixedPoint v = fx_div(a.value, b.value, ctx);
  BigInt ma = abs(a.value.mantissa());
  // |a^/b^ - a/b| <= u * [ ea / |b^| + (|a^| + ea u) eb / (|b^| |b|_lo) ]
  // with |b|_lo = (|mb| - eb) * u; in ulp units:
  //   ea * 2^F / |mb|  +  (|ma| + ea) * eb * 2^F / (|mb| (|mb| - eb)).
  BigInt term1 = ceil_div(a.err_ulps * ctx.scale(), mb);
  BigInt term2 = ceil_div((ma + a.err_ulps) * b.err_ulps * ctx.scale(),
                          mb * (mb - b.err_ulps));
  BigInt err = 1 + term1 + term2;
  return Bounded{std::move(v), std::move(err)};
}

Bounded b_mul_int(const Bounded& a, const BigInt& k) {
  return Bounded{fx_mul_int(a.value, k), a.err_ulps * abs(k)};
}

Bounded b_div_int(const Bounded& a, const BigInt& k, const PrecisionCtx& ctx) {
  FixedPoint v = fx_div_int(a.value, k, ctx);
  BigInt err = 1 + ceil_div(a.err_ulps, abs(k));
  return Bounded{std::move(v), std::move(err)};
}

Bounded b_shift_up(const Bounded& a, long e) {
  if (e < 0) throw std::invalid_argument("b_shift_up: negative shift");
  return Bounded{fx_shift_up(a.value, e), a.err_ulps << static_cast<unsigned long>(e)};
}

Bounded b_add_err(Bounded a, const BigInt& extra_ulps) {
  if (sgn(extra_ulps) < 0) throw std::invalid_argument("b_add_err: negative error");
  a.err_ulps += extra_ulps;
  return a;
}

}  // namespace egamma
