#include "egamma/rational.hpp"

#include <stdexcept>

namespace egamma {

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational dyadic(const BigInt& mantissa, long frac_bits) {
  if (frac_bits < 0) throw std::invalid_argument("dyadic: negative frac_bits");
  return make_rational(mantissa, pow2(static_cast<unsigned long>(frac_bits)));
}

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

long floor_log2(const BigInt& x) {
  if (sgn(x) <= 0) throw std::invalid_argument("floor_log2: x must be >= 1");
  return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1;
}

long ceil_log2(const BigInt& x) {
  if (sgn(x) <= 0) throw std::invalid_argument("ceil_log2: x must be >= 1");
  if (x == 1) return 0;
  BigInt xm1 = x - 1;
  return static_cast<long>(mpz_sizeinbase(xm1.get_mpz_t(), 2));
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  if (sgn(den) <= 0) throw std::invalid_argument("ceil_div: den must be > 0");
  if (sgn(num) < 0) throw std::invalid_argument("ceil_div: num must be >= 0");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace egamma
