#include "egamma/fixed_point.hpp"

#include <stdexcept>
#include <utility>

namespace egamma {

namespace {

void require_same_grid(const FixedPoint& a, const FixedPoint& b) {
  if (a.frac_bits() != b.frac_bits())
    throw std::invalid_argument("fixed-point operands from different contexts");
}

void require_grid(const FixedPoint& a, const PrecisionCtx& ctx) {
  if (a.frac_bits() != ctx.frac_bits())
    throw std::invalid_argument("fixed-point operand does not match context");
}

// Quotient truncated toward zero; notes the inexactness on ctx when bits
// were dropped.
BigInt tdiv_noted(const BigInt& num, const BigInt& den, const PrecisionCtx& ctx) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (sgn(r) != 0) ctx.note_inexact();
  return q;
}

}  // namespace

PrecisionCtx::PrecisionCtx(long frac_bits) : frac_bits_(frac_bits) {
  if (frac_bits < 1) throw std::invalid_argument("PrecisionCtx: frac_bits must be >= 1");
  if (frac_bits > (1L << 26)) throw std::invalid_argument("PrecisionCtx: frac_bits too large");
  scale_ = pow2(static_cast<unsigned long>(frac_bits));
}

FixedPoint FixedPoint::from_mantissa(BigInt mantissa, long frac_bits) {
  if (frac_bits < 0) throw std::invalid_argument("FixedPoint: negative frac_bits");
  return FixedPoint(std::move(mantissa), frac_bits);
}

double FixedPoint::to_double() const { return to_rational().get_d(); }

bool operator==(const FixedPoint& a, const FixedPoint& b) {
  require_same_grid(a, b);
  return a.mantissa() == b.mantissa();
}
bool operator!=(const FixedPoint& a, const FixedPoint& b) { return !(a == b); }
bool operator<(const FixedPoint& a, const FixedPoint& b) {
  require_same_grid(a, b);
  return a.mantissa() < b.mantissa();
}
bool operator<=(const FixedPoint& a, const FixedPoint& b) { return !(b < a); }
bool operator>(const FixedPoint& a, const FixedPoint& b) { return b < a; }
bool operator>=(const FixedPoint& a, const FixedPoint& b) { return !(a < b); }

FixedPoint fx_from_rational(const Rational& q, const PrecisionCtx& ctx) {
  BigInt num = q.get_num() * ctx.scale();
  BigInt mant = tdiv_noted(num, q.get_den(), ctx);
  return FixedPoint::from_mantissa(std::move(mant), ctx.frac_bits());
}

FixedPoint fx_from_integer(long v, const PrecisionCtx& ctx) {
  return FixedPoint::from_mantissa(BigInt(v) * ctx.scale(), ctx.frac_bits());
}

FixedPoint fx_add(const FixedPoint& a, const FixedPoint& b) {
  require_same_grid(a, b);
  return FixedPoint::from_mantissa(a.mantissa() + b.mantissa(), a.frac_bits());
}

FixedPoint fx_sub(const FixedPoint& a, const FixedPoint& b) {
  require_same_grid(a, b);
  return FixedPoint::from_mantissa(a.mantissa() - b.mantissa(), a.frac_bits());
}

FixedPoint fx_neg(const FixedPoint& a) {
  return FixedPoint::from_mantissa(-a.mantissa(), a.frac_bits());
}

FixedPoint fx_abs(const FixedPoint& a) {
  return FixedPoint::from_mantissa(abs(a.mantissa()), a.frac_bits());
}

FixedPoint fx_mul(const FixedPoint& a, const FixedPoint& b, const PrecisionCtx& ctx) {
  require_grid(a, ctx);
  require_grid(b, ctx);
  BigInt prod = a.mantissa() * b.mantissa();
  BigInt mant = tdiv_noted(prod, ctx.scale(), ctx);
  return FixedPoint::from_mantissa(std::move(mant), ctx.frac_bits());
}

FixedPoint fx_div(const FixedPoint& a, const FixedPoint& b, const PrecisionCtx& ctx) {
  require_grid(a, ctx);
  require_grid(b, ctx);
  if (b.is_zero()) throw std::domain_error("fx_div: division by zero");
  BigInt num = a.mantissa() * ctx.scale();
  BigInt mant = tdiv_noted(num, b.mantissa(), ctx);
  return FixedPoint::from_mantissa(std::move(mant), ctx.frac_bits());
}

FixedPoint fx_mul_int(const FixedPoint& a, const BigInt& k) {
  return FixedPoint::from_mantissa(a.mantissa() * k, a.frac_bits());
}

FixedPoint fx_div_int(const FixedPoint& a, const BigInt& k, const PrecisionCtx& ctx) {
  require_grid(a, ctx);
  if (sgn(k) == 0) throw std::domain_error("fx_div_int: division by zero");
  BigInt mant = tdiv_noted(a.mantissa(), k, ctx);
  return FixedPoint::from_mantissa(std::move(mant), ctx.frac_bits());
}

FixedPoint fx_shift_up(const FixedPoint& a, long e) {
  if (e < 0) throw std::invalid_argument("fx_shift_up: negative shift");
  BigInt mant = a.mantissa() << static_cast<unsigned long>(e);
  return FixedPoint::from_mantissa(std::move(mant), a.frac_bits());
}

FixedPoint fx_inv_pow(unsigned long n, unsigned long k, const PrecisionCtx& ctx) {
  if (n < 2) throw std::invalid_argument("fx_inv_pow: base must be >= 2");
  if (k < 1) throw std::invalid_argument("fx_inv_pow: exponent must be >= 1");
  // If n^k > 2^F the mantissa is 0; detect cheaply via bit lengths to skip
  // the big power. n >= 2^(bits-1) so n^k >= 2^(k(bits-1)).
  unsigned long bits = mpz_sizeinbase(BigInt(n).get_mpz_t(), 2);
  if (k >= 2 && (bits - 1) * k > static_cast<unsigned long>(ctx.frac_bits())) {
    ctx.note_inexact();
    return FixedPoint::from_mantissa(BigInt(0), ctx.frac_bits());
  }
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), n, k);
  BigInt mant = tdiv_noted(ctx.scale(), p, ctx);
  return FixedPoint::from_mantissa(std::move(mant), ctx.frac_bits());
}

FixedPoint fx_truncate_to(const FixedPoint& x, const PrecisionCtx& target) {
  long from = x.frac_bits();
  long to = target.frac_bits();
  if (to >= from) {
    return FixedPoint::from_mantissa(x.mantissa() << static_cast<unsigned long>(to - from), to);
  }
  BigInt q, r;
  BigInt den = pow2(static_cast<unsigned long>(from - to));
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.mantissa().get_mpz_t(), den.get_mpz_t());
  if (sgn(r) != 0) target.note_inexact();
  return FixedPoint::from_mantissa(std::move(q), to);
}

std::string fx_to_decimal(const FixedPoint& x, long digits) {
  if (digits < 1) throw std::invalid_argument("fx_to_decimal: digits must be >= 1");
  BigInt mag = abs(x.mantissa());
  BigInt scale = pow2(static_cast<unsigned long>(x.frac_bits()));
  BigInt ipart = mag >> static_cast<unsigned long>(x.frac_bits());
  BigInt frac = mag - (ipart << static_cast<unsigned long>(x.frac_bits()));
  BigInt digits_num = (frac * pow10(static_cast<unsigned long>(digits))) / scale;
  std::string frac_str = digits_num.get_str();
  if (static_cast<long>(frac_str.size()) < digits) {
    frac_str.insert(frac_str.begin(),
                    static_cast<std::size_t>(digits) - frac_str.size(), '0');
  }
  std::string out;
  if (x.sign() < 0) out += '-';
  out += ipart.get_str();
  out += '.';
  out += frac_str;
  return out;
}

}  // namespace egamma
