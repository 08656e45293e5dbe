#include "egamma/functions.hpp"

#include <stdexcept>

namespace egamma {

namespace {

constexpr long kGuardBits = 64;  // scratch headroom for series summation

BigInt tdiv(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Sum of the atanh(1/3) series at scale 2^W, truncated toward zero per term.
// Returns the scaled partial sum; when done, 0 <= ln2 - acc*2^-W <
// (terms + 1/4) * 2^-W, and the tail cutoff guarantees terms' deficits are
// the only loss.
BigInt log2_scaled(long w) {
  BigInt scale_w = pow2(static_cast<unsigned long>(w));
  BigInt cutoff = scale_w << 2;  // stop once 3^(2k+1) > 2^(W+2)
  BigInt two_scale = scale_w << 1;
  BigInt acc(0);
  BigInt power(3);  // 3^(2k+1)
  unsigned long k = 0;
  while (power <= cutoff || k < 2) {
    BigInt den = BigInt(2 * k + 1) * power;
    acc += tdiv(two_scale, den);
    ++k;
    power *= 9;
    if (k > (1UL << 28)) throw std::logic_error("log2_scaled: series did not terminate");
  }
  return acc;
}

}  // namespace

Bounded fx_log2(const PrecisionCtx& ctx) {
  long f = ctx.frac_bits();
  long w = f + kGuardBits;
  BigInt acc = log2_scaled(w);
  // One truncation to the target grid; with K <= 2^28 terms the scratch
  // deficits total well under one target ulp, so the result is one-sided:
  // value <= ln 2 < value + 2 ulps.
  BigInt mant = acc >> static_cast<unsigned long>(kGuardBits);
  ctx.note_inexact();
  return Bounded{FixedPoint::from_mantissa(std::move(mant), f), BigInt(2)};
}

Log2Enclosure log2_enclosure(const PrecisionCtx& ctx) {
  Bounded l = fx_log2(ctx);
  return Log2Enclosure{l.value.to_rational(), l.upper()};
}

const InvLog2Enclosure& inv_log2_enclosure() {
  static const InvLog2Enclosure enc = [] {
    PrecisionCtx ctx(200);
    Bounded l = fx_log2(ctx);
    const BigInt& m = l.value.mantissa();
    // v <= ln2 <= v + 2u  =>  1/(v + 2u) <= 1/ln2 <= 1/v, everything exact.
    Rational lo = make_rational(ctx.scale(), m + 2);
    Rational hi = make_rational(ctx.scale(), m);
    return InvLog2Enclosure{lo, hi};
  }();
  return enc;
}

Bounded fx_exp_small(const FixedPoint& x, const PrecisionCtx& ctx) {
  if (x.frac_bits() != ctx.frac_bits())
    throw std::invalid_argument("fx_exp_small: operand does not match context");
  if (abs(x.mantissa()) > ctx.scale())
    throw std::invalid_argument("fx_exp_small: |x| must be <= 1");
  long f = ctx.frac_bits();
  long w = f + kGuardBits;
  BigInt scale_w = pow2(static_cast<unsigned long>(w));
  BigInt mx = x.mantissa() << static_cast<unsigned long>(kGuardBits);
  BigInt cutoff = pow2(static_cast<unsigned long>(kGuardBits - 2));  // 2^(W-F-2)

  BigInt acc = scale_w;  // k = 0 term
  BigInt term = scale_w;
  unsigned long k = 0;
  while (true) {
    ++k;
    term = tdiv(term * mx, scale_w);
    term = tdiv(term, BigInt(k));
    acc += term;
    if (abs(term) < cutoff) break;
    if (k > (1UL << 24)) throw std::logic_error("fx_exp_small: series did not terminate");
  }
  // Per-term drift <= 2k scratch ulps, so the accumulated scratch error plus
  // the post-cutoff tail stays below one target ulp; with the final
  // truncation the recorded bound is 2 target ulps.
  BigInt mant = tdiv(acc, pow2(static_cast<unsigned long>(kGuardBits)));
  ctx.note_inexact();
  return Bounded{FixedPoint::from_mantissa(std::move(mant), f), BigInt(2)};
}

Bounded fx_pow2_real(const Rational& s, const PrecisionCtx& ctx) {
  Rational d = s - 1;
  if (abs(d) > 1) throw std::invalid_argument("fx_pow2_real: |s - 1| must be <= 1");
  Bounded l = fx_log2(ctx);
  // x ~= (s-1) ln 2, one truncating scaling from the exact rational s-1:
  // |x - (s-1) ln2| <= 1 + 2|s-1| ulps <= 3 ulps.
  BigInt num = l.value.mantissa() * d.get_num();
  BigInt mant_x = tdiv(num, d.get_den());
  if (sgn(d.get_num()) != 0) ctx.note_inexact();
  BigInt err_x = 1 + ceil_div(2 * abs(d.get_num()), d.get_den());
  FixedPoint x = FixedPoint::from_mantissa(std::move(mant_x), ctx.frac_bits());

  Bounded e = fx_exp_small(x, ctx);
  // |e^x - e^((s-1) ln2)| <= e^(ln2 + ulp) * |x - (s-1) ln2| < 3 * err_x ulps.
  BigInt err = e.err_ulps + 3 * err_x;
  Bounded result{fx_shift_up(e.value, 1), err << 1};
  return result;
}

}  // namespace egamma
