#include <random>

#include "doctest.h"
#include "egamma/fixed_point.hpp"

using namespace egamma;

namespace {

Rational rat(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

// Deterministic signed mantissa with up to ~96 bits.
BigInt random_mantissa(std::mt19937_64& rng) {
  BigInt m(static_cast<unsigned long>(rng()));
  m <<= static_cast<unsigned long>(rng() % 33);
  m += static_cast<unsigned long>(rng());
  if (rng() % 2 == 0) m = -m;
  return m;
}

}  // namespace

TEST_CASE("context construction and validation") {
  PrecisionCtx ctx(64);
  CHECK(ctx.frac_bits() == 64);
  CHECK(ctx.scale() == pow2(64));
  CHECK(ctx.op_budget() == 0);
  CHECK_THROWS_AS(PrecisionCtx(0), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionCtx(-5), std::invalid_argument);
}

TEST_CASE("fx_from_rational truncates toward zero") {
  PrecisionCtx f64(64);
  CHECK(fx_from_rational(rat(1, 2), f64).mantissa() == pow2(63));
  CHECK(fx_from_rational(Rational(0), f64).mantissa() == 0);

  PrecisionCtx f8(8);
  CHECK(fx_from_rational(rat(1, 3), f8).mantissa() == 85);    // 256/3 = 85.33..
  CHECK(fx_from_rational(rat(-1, 3), f8).mantissa() == -85);  // toward zero
  CHECK(fx_from_rational(rat(2, 3), f8).mantissa() == 170);
}

TEST_CASE("dyadic inputs convert exactly and leave the budget untouched") {
  PrecisionCtx ctx(64);
  FixedPoint half = fx_from_rational(rat(1, 2), ctx);
  CHECK(half.to_rational() == rat(1, 2));
  CHECK(ctx.op_budget() == 0);
  fx_from_rational(rat(1, 3), ctx);
  CHECK(ctx.op_budget() == 1);
}

TEST_CASE("additive ops are exact") {
  PrecisionCtx ctx(32);
  FixedPoint a = fx_from_rational(rat(3, 4), ctx);
  FixedPoint b = fx_from_rational(rat(1, 8), ctx);
  CHECK(fx_add(a, b).to_rational() == rat(7, 8));
  CHECK(fx_sub(a, b).to_rational() == rat(5, 8));
  CHECK(fx_neg(a).to_rational() == rat(-3, 4));
  CHECK(fx_abs(fx_neg(a)).to_rational() == rat(3, 4));
  CHECK(ctx.op_budget() == 0);
}

TEST_CASE("operands from different grids are rejected") {
  PrecisionCtx c32(32);
  PrecisionCtx c64(64);
  FixedPoint a = fx_from_integer(1, c32);
  FixedPoint b = fx_from_integer(1, c64);
  CHECK_THROWS_AS(fx_add(a, b), std::invalid_argument);
  CHECK_THROWS_AS(fx_mul(a, b, c64), std::invalid_argument);
}

TEST_CASE("multiplication truncates toward zero") {
  PrecisionCtx f8(8);
  FixedPoint third = fx_from_rational(rat(1, 3), f8);  // 85/256
  FixedPoint sq = fx_mul(third, third, f8);
  CHECK(sq.mantissa() == 28);  // trunc(85*85/256) = trunc(28.22)
  FixedPoint half = fx_from_rational(rat(1, 2), f8);
  CHECK(fx_mul(half, half, f8).to_rational() == rat(1, 4));  // exact
}

TEST_CASE("division matches the pinned example and rejects zero") {
  PrecisionCtx f8(8);
  FixedPoint one = fx_from_integer(1, f8);
  FixedPoint three = fx_from_integer(3, f8);
  CHECK(fx_div(one, three, f8).mantissa() == 85);
  CHECK_THROWS_AS(fx_div(one, fx_from_integer(0, f8), f8), std::domain_error);
  CHECK_THROWS_AS(fx_div_int(one, BigInt(0), f8), std::domain_error);
}

TEST_CASE("mul/div error contract against exact rationals (1000 cases)") {
  std::mt19937_64 rng(0xE09u);
  for (long frac_bits : {64L, 128L}) {
    PrecisionCtx ctx(frac_bits);
    for (int i = 0; i < 500; ++i) {
      FixedPoint a = FixedPoint::from_mantissa(random_mantissa(rng), frac_bits);
      FixedPoint b = FixedPoint::from_mantissa(random_mantissa(rng), frac_bits);
      Rational ulp = dyadic(BigInt(1), frac_bits);

      Rational exact_prod = a.to_rational() * b.to_rational();
      Rational got_prod = fx_mul(a, b, ctx).to_rational();
      CHECK(abs(exact_prod - got_prod) < ulp);
      CHECK(abs(got_prod) <= abs(exact_prod));  // truncation never overshoots

      if (!b.is_zero()) {
        Rational exact_quot = a.to_rational() / b.to_rational();
        Rational got_quot = fx_div(a, b, ctx).to_rational();
        CHECK(abs(exact_quot - got_quot) < ulp);
        CHECK(abs(got_quot) <= abs(exact_quot));
      }
    }
  }
}

TEST_CASE("integer scaling ops") {
  PrecisionCtx ctx(32);
  FixedPoint x = fx_from_rational(rat(5, 8), ctx);
  CHECK(fx_mul_int(x, BigInt(6)).to_rational() == rat(15, 4));
  CHECK(fx_div_int(fx_from_integer(1, ctx), BigInt(3), ctx).mantissa() ==
        (pow2(32) - 1) / 3);
  CHECK(fx_shift_up(x, 3).to_rational() == Rational(5));
  CHECK_THROWS_AS(fx_shift_up(x, -1), std::invalid_argument);
}

TEST_CASE("inverse powers") {
  PrecisionCtx f16(16);
  CHECK(fx_inv_pow(2, 3, f16).to_rational() == rat(1, 8));  // exact
  CHECK(fx_inv_pow(3, 2, f16).mantissa() == 7281);          // trunc(65536/9)
  PrecisionCtx f8(8);
  CHECK(fx_inv_pow(10, 1, f8).mantissa() == 25);  // trunc(256/10)
  CHECK_THROWS_AS(fx_inv_pow(1, 2, f8), std::invalid_argument);
  CHECK_THROWS_AS(fx_inv_pow(3, 0, f8), std::invalid_argument);
}

TEST_CASE("inverse power error stays below two ulps, including the underflow path") {
  PrecisionCtx ctx(64);
  Rational two_ulps = dyadic(BigInt(2), 64);
  for (unsigned long n : {2UL, 3UL, 7UL, 10UL, 127UL}) {
    for (unsigned long k : {1UL, 2UL, 5UL, 40UL, 200UL}) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), n, k);
      Rational exact = make_rational(BigInt(1), p);
      Rational got = fx_inv_pow(n, k, ctx).to_rational();
      CAPTURE(n);
      CAPTURE(k);
      CHECK(abs(exact - got) < two_ulps);
      CHECK(got <= exact);
    }
  }
  // Shortcut path: 3^200 needs ~317 bits, far beyond F = 64.
  CHECK(fx_inv_pow(3, 200, ctx).is_zero());
}

TEST_CASE("decimal rendering truncates, never rounds") {
  PrecisionCtx f64(64);
  CHECK(fx_to_decimal(fx_from_rational(rat(1, 3), f64), 3) == "0.333");
  CHECK(fx_to_decimal(fx_from_integer(2, f64), 2) == "2.00");
  CHECK(fx_to_decimal(fx_from_rational(rat(6679639, 10000000), f64), 3) == "0.667");
  CHECK(fx_to_decimal(fx_from_rational(rat(-1, 3), f64), 3) == "-0.333");
  CHECK(fx_to_decimal(fx_from_rational(rat(2, 3), f64), 4) == "0.6666");
  CHECK(fx_to_decimal(fx_from_integer(0, f64), 2) == "0.00");
  CHECK_THROWS_AS(fx_to_decimal(fx_from_integer(1, f64), 0), std::invalid_argument);
}

TEST_CASE("decimal strings parse back to at most the source magnitude") {
  std::mt19937_64 rng(7u);
  PrecisionCtx ctx(96);
  for (int i = 0; i < 200; ++i) {
    FixedPoint x = FixedPoint::from_mantissa(random_mantissa(rng), 96);
    long digits = 1 + static_cast<long>(rng() % 30);
    std::string s = fx_to_decimal(x, digits);

    // Reparse: sign, integer part, fraction digits.
    bool negative = !s.empty() && s[0] == '-';
    std::string body = negative ? s.substr(1) : s;
    auto dot = body.find('.');
    REQUIRE(dot != std::string::npos);
    CHECK(static_cast<long>(body.size() - dot - 1) == digits);
    BigInt ip(body.substr(0, dot), 10);
    BigInt fp(body.substr(dot + 1), 10);
    Rational parsed = Rational(ip) + make_rational(fp, pow10(static_cast<unsigned long>(digits)));
    Rational magnitude = abs(x.to_rational());
    CHECK(parsed <= magnitude);
    CHECK(magnitude - parsed < make_rational(BigInt(1), pow10(static_cast<unsigned long>(digits))));
  }
}

TEST_CASE("rescaling between grids truncates toward zero") {
  PrecisionCtx wide(128);
  PrecisionCtx narrow(64);
  FixedPoint x = fx_from_rational(rat(1, 3), wide);
  FixedPoint y = fx_truncate_to(x, narrow);
  CHECK(y.frac_bits() == 64);
  CHECK(abs(y.to_rational()) <= abs(x.to_rational()));
  CHECK(abs(x.to_rational() - y.to_rational()) < dyadic(BigInt(1), 64));

  FixedPoint neg = fx_from_rational(rat(-1, 3), wide);
  CHECK(abs(fx_truncate_to(neg, narrow).to_rational()) <= abs(neg.to_rational()));

  // Widening is exact.
  FixedPoint z = fx_truncate_to(y, wide);
  CHECK(z.to_rational() == y.to_rational());
}

TEST_CASE("operation budget counts only inexact operations and never decreases") {
  PrecisionCtx ctx(64);
  FixedPoint a = fx_from_rational(rat(1, 4), ctx);  // exact
  CHECK(ctx.op_budget() == 0);
  fx_mul(a, a, ctx);  // 1/16 representable: exact
  CHECK(ctx.op_budget() == 0);
  FixedPoint third = fx_from_rational(rat(1, 3), ctx);  // inexact
  unsigned long long after_conv = ctx.op_budget();
  CHECK(after_conv == 1);
  fx_mul(third, third, ctx);
  CHECK(ctx.op_budget() > after_conv);
}

TEST_CASE("identical inputs give bit-identical mantissas on repeat runs") {
  auto run = [] {
    PrecisionCtx ctx(128);
    FixedPoint x = fx_from_rational(rat(1, 7), ctx);
    FixedPoint acc = fx_from_integer(1, ctx);
    for (int i = 0; i < 50; ++i) {
      acc = fx_mul(acc, x, ctx);
      acc = fx_add(acc, fx_div_int(x, BigInt(i + 1), ctx));
    }
    return acc.mantissa();
  };
  CHECK(run() == run());
}
