#include <random>
#include <utility>

#include "doctest.h"
#include "egamma/functions.hpp"

using namespace egamma;

namespace {

Rational rat(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

// Independent enclosure of ln 2 from the series sum_{k>=0} 2/((2k+1) 3^(2k+1)),
// summed exactly in rationals. All terms are positive; the tail after K terms
// is below (9/8) times the next term (ratio test, ratio < 1/9).
struct RatInterval {
  Rational lo;
  Rational hi;
};

RatInterval ln2_oracle(unsigned long terms) {
  Rational sum(0);
  for (unsigned long k = 0; k < terms; ++k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, 2 * k + 1);
    sum += make_rational(BigInt(2), BigInt(2 * k + 1) * p);
  }
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, 2 * terms + 1);
  Rational next = make_rational(BigInt(2), BigInt(2 * terms + 1) * p);
  return {sum, sum + next * rat(9, 8)};
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

TEST_CASE("bounded composition keeps the true value inside the interval") {
  PrecisionCtx ctx(64);
  std::mt19937_64 rng(41u);
  for (int i = 0; i < 200; ++i) {
    long pn = static_cast<long>(rng() % 20000) - 10000;
    long qn = static_cast<long>(rng() % 20000) - 10000;
    long pd = 1 + static_cast<long>(rng() % 999);
    long qd = 1 + static_cast<long>(rng() % 999);
    if (qn == 0) qn = 7;
    Rational p = rat(pn, pd);
    Rational q = rat(qn, qd);
    Bounded a = b_from_rational(p, ctx);
    Bounded b = b_from_rational(q, ctx);
    CHECK(a.contains(p));
    CHECK(b.contains(q));
    CHECK(b_add(a, b).contains(p + q));
    CHECK(b_sub(a, b).contains(p - q));
    CHECK(b_mul(a, b, ctx).contains(p * q));
    if (abs(b.value.mantissa()) > b.err_ulps) {
      CHECK(b_div(a, b, ctx).contains(p / q));
    }
    long k = 1 + static_cast<long>(rng() % 50);
    CHECK(b_mul_int(a, BigInt(k)).contains(p * Rational(k)));
    CHECK(b_div_int(a, BigInt(k), ctx).contains(p / Rational(k)));
    CHECK(b_shift_up(a, 5).contains(p * Rational(32)));
  }
}

TEST_CASE("b_div refuses divisors whose interval straddles zero") {
  PrecisionCtx ctx(64);
  Bounded a = b_from_rational(rat(1, 2), ctx);
  Bounded tiny = b_add_err(b_from_rational(dyadic(BigInt(1), 64), ctx), BigInt(5));
  CHECK_THROWS_AS(b_div(a, tiny, ctx), std::domain_error);
}

TEST_CASE("exactness flows through b_from_rational") {
  PrecisionCtx ctx(64);
  CHECK(b_from_rational(rat(3, 8), ctx).err_ulps == 0);
  CHECK(b_from_rational(rat(1, 3), ctx).err_ulps == 1);
}

TEST_CASE("log of two: digits, one-sidedness, recorded bound") {
  PrecisionCtx ctx(128);
  Bounded v = fx_log2(ctx);
  CHECK(fx_to_decimal(v.value, 15) == "0.693147180559945");
  CHECK(v.err_ulps == 2);

  RatInterval oracle = ln2_oracle(70);
  Rational val = v.value.to_rational();
  // One-sided from below: value <= ln 2.
  CHECK(val <= oracle.hi);
  // Within the recorded bound of the true value.
  CHECK(oracle.lo - val < dyadic(BigInt(2), 128));
  CHECK(val + v.error_bound() >= oracle.lo);
}

TEST_CASE("log of two refines consistently across precisions") {
  PrecisionCtx c128(128);
  PrecisionCtx c256(256);
  Rational a = fx_log2(c128).value.to_rational();
  Rational b = fx_log2(c256).value.to_rational();
  CHECK(abs(a - b) < dyadic(BigInt(4), 128));
}

TEST_CASE("rational enclosures of ln 2 and its reciprocal") {
  PrecisionCtx ctx(128);
  Log2Enclosure e = log2_enclosure(ctx);
  RatInterval oracle = ln2_oracle(70);
  CHECK(e.lo < e.hi);
  CHECK(e.hi - e.lo <= dyadic(BigInt(2), 128));
  CHECK(e.lo <= oracle.hi);  // lo <= ln 2
  CHECK(e.hi >= oracle.lo);  // hi >= ln 2

  const InvLog2Enclosure& inv = inv_log2_enclosure();
  CHECK(inv.hi - inv.lo < make_rational(BigInt(1), pow10(40)));
  // lo * ln2 < 1 < hi * ln2, certified through the oracle enclosure.
  CHECK(inv.lo * oracle.hi < Rational(1));
  CHECK(inv.hi * oracle.lo > Rational(1));
}

TEST_CASE("exponential at zero is exactly one") {
  PrecisionCtx ctx(128);
  Bounded v = fx_exp_small(fx_from_integer(0, ctx), ctx);
  CHECK(v.value.to_rational() == Rational(1));
  CHECK(v.err_ulps <= 2);
}

TEST_CASE("exponential at one matches the factorial series") {
  PrecisionCtx ctx(128);
  Bounded v = fx_exp_small(fx_from_integer(1, ctx), ctx);
  CHECK(fx_to_decimal(v.value, 14) == "2.71828182845904");
  Rational series(0);
  for (unsigned long k = 0; k <= 40; ++k) {
    series += make_rational(BigInt(1), factorial(k));
  }
  // Tail after k = 40 is far below one ulp at 128 fraction bits.
  CHECK(abs(v.value.to_rational() - series) < dyadic(BigInt(4), 128));
}

TEST_CASE("exponential at minus one matches the alternating series") {
  PrecisionCtx ctx(128);
  Bounded v = fx_exp_small(fx_from_integer(-1, ctx), ctx);
  Rational series(0);
  for (unsigned long k = 0; k <= 40; ++k) {
    Rational term = make_rational(BigInt(1), factorial(k));
    if (k % 2 == 0) series += term;
    else series -= term;
  }
  CHECK(abs(v.value.to_rational() - series) < dyadic(BigInt(4), 128));
  CHECK(v.err_ulps <= 2);
}

TEST_CASE("exponential of the stored log of two lands on two") {
  PrecisionCtx ctx(128);
  Bounded lg = fx_log2(ctx);
  Bounded v = fx_exp_small(lg.value, ctx);
  // Input offset below ln 2 is < 2 ulps; e^x has slope <= 2 on the interval,
  // so the image offset is < 4 ulps, plus the recorded 2 for the sum itself.
  CHECK(abs(v.value.to_rational() - Rational(2)) < dyadic(BigInt(8), 128));
}

TEST_CASE("power-of-two map: anchor points") {
  PrecisionCtx ctx(128);

  Bounded at1 = fx_pow2_real(Rational(1), ctx);
  CHECK(at1.value.to_rational() == Rational(2));
  CHECK(at1.err_ulps <= 16);

  Bounded at2 = fx_pow2_real(Rational(2), ctx);
  CHECK(abs(at2.value.to_rational() - Rational(4)) < dyadic(BigInt(32), 128));
  CHECK(at2.contains(Rational(4)));

  Bounded at0 = fx_pow2_real(Rational(0), ctx);
  CHECK(abs(at0.value.to_rational() - Rational(1)) < dyadic(BigInt(32), 128));
  CHECK(at0.contains(Rational(1)));

  Bounded half = fx_pow2_real(rat(1, 2), ctx);
  CHECK(fx_to_decimal(half.value, 10) == "1.4142135623");

  CHECK_THROWS_AS(fx_pow2_real(rat(5, 2), ctx), std::invalid_argument);
  CHECK_THROWS_AS(fx_pow2_real(rat(-1, 4), ctx), std::invalid_argument);
}

TEST_CASE("power-of-two map: product identities certify interior points") {
  PrecisionCtx ctx(128);
  // 2^(1+d) * 2^(1-d) = 4 for any d in (0, 1); the bounded product must
  // contain 4.
  const std::pair<long, long> offsets[] = {{1, 3}, {1, 7}, {2, 9},  {5, 11},
                                           {3, 4}, {7, 8}, {9, 16}, {11, 12}};
  for (auto [dn, dd] : offsets) {
    Rational d = rat(dn, dd);
    Bounded up = fx_pow2_real(Rational(1) + d, ctx);
    Bounded down = fx_pow2_real(Rational(1) - d, ctx);
    Bounded prod = b_mul(up, down, ctx);
    CAPTURE(dn);
    CAPTURE(dd);
    CHECK(prod.contains(Rational(4)));
    // The interval is tight: width below 2^-100.
    CHECK(prod.error_bound() < dyadic(BigInt(1), 100));
  }
  // Squaring the half-integer points: (2^(1/2))^2 = 2, (2^(3/2))^2 = 8.
  Bounded r2 = fx_pow2_real(rat(1, 2), ctx);
  CHECK(b_mul(r2, r2, ctx).contains(Rational(2)));
  Bounded r8 = fx_pow2_real(rat(3, 2), ctx);
  CHECK(b_mul(r8, r8, ctx).contains(Rational(8)));
}
