#include "egamma/format.hpp"

#include <cmath>
#include <stdexcept>

namespace egamma {

namespace {

// 10^e as an exact positive rational for any sign of e.
Rational pow10_signed(long e) {
  if (e >= 0) return Rational(pow10(static_cast<unsigned long>(e)));
  return make_rational(1, pow10(static_cast<unsigned long>(-e)));
}

}  // namespace

double log10_estimate(const Rational& r) {
  if (sgn(r.get_num()) <= 0)
    throw std::invalid_argument("log10_estimate: argument must be positive");
  long d = floor_log2(r.get_num()) - floor_log2(r.get_den());
  Rational scaled = (d >= 0) ? Rational(r / Rational(pow2(static_cast<unsigned long>(d))))
                             : Rational(r * Rational(pow2(static_cast<unsigned long>(-d))));
  // scaled is within a factor of two of 1, so the double conversion is safe.
  return (static_cast<double>(d) + std::log2(scaled.get_d())) * 0.30102999566398120;
}

std::string format_scientific_upper(const Rational& r, int sig) {
  if (sig < 1) throw std::invalid_argument("format_scientific_upper: sig must be >= 1");
  if (sgn(r.get_num()) < 0)
    throw std::invalid_argument("format_scientific_upper: argument must be >= 0");
  if (sgn(r.get_num()) == 0) return "0";

  long e10 = static_cast<long>(std::floor(log10_estimate(r)));
  while (r >= pow10_signed(e10 + 1)) ++e10;
  while (r < pow10_signed(e10)) --e10;

  // mant = ceil(r / 10^(e10 - sig + 1)) in [10^(sig-1), 10^sig].
  Rational scaled = r / pow10_signed(e10 - sig + 1);
  BigInt mant = ceil_div(scaled.get_num(), scaled.get_den());
  BigInt top = pow10(static_cast<unsigned long>(sig));
  if (mant == top) {
    mant = pow10(static_cast<unsigned long>(sig - 1));
    ++e10;
  }
  std::string digits = mant.get_str();
  std::string out;
  out += digits[0];
  if (sig > 1) {
    out += '.';
    out += digits.substr(1);
  }
  out += 'e';
  if (e10 >= 0) out += '+';
  out += std::to_string(e10);
  return out;
}

}  // namespace egamma
