#pragma once

#include <gmpxx.h>

#include <string>

namespace egamma {

using BigInt = mpz_class;
using Rational = mpq_class;

// 2^e as an exact integer (e >= 0).
BigInt pow2(unsigned long e);

// 10^e as an exact integer.
BigInt pow10(unsigned long e);

// num/den reduced to canonical form (den > 0, gcd(num, den) = 1).
// Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// Exact value of mantissa * 2^-frac_bits (frac_bits >= 0).
Rational dyadic(const BigInt& mantissa, long frac_bits);

// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

// floor(log2(x)) for x >= 1.
long floor_log2(const BigInt& x);

// Smallest k >= 0 with 2^k >= x, for x >= 1.
long ceil_log2(const BigInt& x);

// ceil(num/den) for num >= 0, den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

}  // namespace egamma
