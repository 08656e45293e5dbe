#pragma once

#include <atomic>
#include <string>

#include "egamma/rational.hpp"

namespace egamma {

// Shared fixed-point format. Every value in a context carries the same number
// of binary fraction bits F; every inexact operation truncates toward zero
// and therefore loses strictly less than one ulp (ulp = 2^-F) without ever
// increasing the magnitude. The op budget counts inexact operations and only
// increases; it tolerates concurrent increments.
class PrecisionCtx {
 public:
  explicit PrecisionCtx(long frac_bits);

  long frac_bits() const { return frac_bits_; }
  const BigInt& scale() const { return scale_; }  // 2^F
  unsigned long long op_budget() const { return op_budget_.load(); }
  void note_inexact() const { op_budget_.fetch_add(1, std::memory_order_relaxed); }

  PrecisionCtx(const PrecisionCtx&) = delete;
  PrecisionCtx& operator=(const PrecisionCtx&) = delete;

 private:
  long frac_bits_;
  BigInt scale_;
  mutable std::atomic<unsigned long long> op_budget_{0};
};

// Immutable scaled integer: value = mantissa * 2^-frac_bits.
class FixedPoint {
 public:
  FixedPoint() : mantissa_(0), frac_bits_(0) {}
  static FixedPoint from_mantissa(BigInt mantissa, long frac_bits);

  const BigInt& mantissa() const { return mantissa_; }
  long frac_bits() const { return frac_bits_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sign() == 0; }

  Rational to_rational() const { return dyadic(mantissa_, frac_bits_); }
  double to_double() const;  // lossy; diagnostics and display estimates only

 private:
  FixedPoint(BigInt mantissa, long frac_bits)
      : mantissa_(std::move(mantissa)), frac_bits_(frac_bits) {}

  BigInt mantissa_;
  long frac_bits_;
};

// Comparisons require matching frac_bits and compare mantissas exactly.
bool operator==(const FixedPoint& a, const FixedPoint& b);
bool operator!=(const FixedPoint& a, const FixedPoint& b);
bool operator<(const FixedPoint& a, const FixedPoint& b);
bool operator<=(const FixedPoint& a, const FixedPoint& b);
bool operator>(const FixedPoint& a, const FixedPoint& b);
bool operator>=(const FixedPoint& a, const FixedPoint& b);

// Nearest representable value toward zero; |result - q| < 2^-F, exact when q
// is dyadic with exponent <= F.
FixedPoint fx_from_rational(const Rational& q, const PrecisionCtx& ctx);

FixedPoint fx_from_integer(long v, const PrecisionCtx& ctx);  // exact

// Exact (same grid, no truncation possible).
FixedPoint fx_add(const FixedPoint& a, const FixedPoint& b);
FixedPoint fx_sub(const FixedPoint& a, const FixedPoint& b);
FixedPoint fx_neg(const FixedPoint& a);
FixedPoint fx_abs(const FixedPoint& a);

// Truncating product / quotient; error < 1 ulp toward zero.
// fx_div throws std::domain_error when b == 0.
FixedPoint fx_mul(const FixedPoint& a, const FixedPoint& b, const PrecisionCtx& ctx);
FixedPoint fx_div(const FixedPoint& a, const FixedPoint& b, const PrecisionCtx& ctx);

FixedPoint fx_mul_int(const FixedPoint& a, const BigInt& k);  // exact
FixedPoint fx_div_int(const FixedPoint& a, const BigInt& k, const PrecisionCtx& ctx);
FixedPoint fx_shift_up(const FixedPoint& a, long e);  // * 2^e, e >= 0, exact

// n^-k for n >= 2, k >= 1: one exact integer power, one truncating division.
// |result - n^-k| < 1 ulp (contract allows < 2).
FixedPoint fx_inv_pow(unsigned long n, unsigned long k, const PrecisionCtx& ctx);

// Rescale to the target grid, truncating toward zero. Exact when the target
// has at least as many fraction bits.
FixedPoint fx_truncate_to(const FixedPoint& x, const PrecisionCtx& target);

// First `digits` decimal fraction digits of x, truncated toward zero, never
// rounded: sign prefix for negatives, '.', no exponent notation.
// digits must be >= 1. The parsed result never exceeds |x|.
std::string fx_to_decimal(const FixedPoint& x, long digits);

}  // namespace egamma
