#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "egamma/series.hpp"

namespace egamma {

namespace {

void require_level(int level) {
  if (level < 2 || level > 7)
    throw std::invalid_argument("level must be between 2 and 7");
}

// Predicted ceiling on accumulated rounding, in ulps. Derivation: the head
// contributes <= 13 ulps; each term contributes <= 2 + 1.1 * 2^(level-1) +
// 2^(1-(level-1)m) ulps (coefficient quotient, block sum, one product), so
// 64 + M (2^level + 8) dominates the true accumulation with wide margin.
BigInt predicted_rounding_ulps(int level, long terms) {
  return 64 + BigInt(std::max(terms, 0L)) * (pow2(static_cast<unsigned long>(level)) + 8);
}

}  // namespace

Rational tail_bound(int level, long terms) {
  require_level(level);
  if (terms < 0) throw std::invalid_argument("tail_bound: terms must be >= 0");
  unsigned long m2 = static_cast<unsigned long>(terms) + 2;
  Rational h = (m2 <= 4096) ? harmonic(m2) : harmonic_upper(m2);
  const Rational& inv_hi = inv_log2_enclosure().hi;
  unsigned long halfbits = static_cast<unsigned long>(level - 1);
  // [H_{M+2}/((M+2) ln2)] * 2^-((level-1)(M+1)) * 2^(level-1)/(2^(level-1)-1)
  Rational geometric = make_rational(
      pow2(halfbits),
      (pow2(halfbits) - 1) * pow2(halfbits * (static_cast<unsigned long>(terms) + 1)));
  return h * inv_hi / Rational(m2) * geometric;
}

long guard_frac_bits(long digits, long terms, int level) {
  require_level(level);
  if (digits < 1) throw std::invalid_argument("guard_frac_bits: digits must be >= 1");
  if (terms < 1) throw std::invalid_argument("guard_frac_bits: terms must be >= 1");
  BigInt ten_pow = pow10(static_cast<unsigned long>(digits));
  long target_bits = static_cast<long>(mpz_sizeinbase(ten_pow.get_mpz_t(), 2));
  BigInt op_count = BigInt(terms) * pow2(static_cast<unsigned long>(level - 1)) + 16;
  return target_bits + 64 + ceil_log2(op_count);
}

SeriesPlan plan_for_digits(long digits, int level) {
  require_level(level);
  if (digits < 1) throw std::invalid_argument("plan_for_digits: digits must be >= 1");

  Rational threshold = make_rational(1, 2 * pow10(static_cast<unsigned long>(digits) + 2));

  long estimate = static_cast<long>((static_cast<double>(digits) + 3.0) *
                                    3.3219280948873623 / (level - 1)) - 8;
  long m = std::max(estimate, 1L);
  if (m > kMaxPlanTerms)
    throw PlanLimitError("plan_for_digits: digit target exceeds the term cap");

  while (m > 1 && tail_bound(level, m - 1) < threshold) --m;
  while (tail_bound(level, m) >= threshold) {
    ++m;
    if (m > kMaxPlanTerms)
      throw PlanLimitError("plan_for_digits: digit target exceeds the term cap");
  }

  long frac_bits = guard_frac_bits(digits, m, level);
  if (frac_bits > kMaxFracBits)
    throw PlanLimitError("plan_for_digits: digit target exceeds the precision cap");

  SeriesPlan plan;
  plan.level = level;
  plan.terms = m;
  plan.frac_bits = frac_bits;
  plan.tail_bound = tail_bound(level, m);
  plan.rounding_bound =
      dyadic(predicted_rounding_ulps(level, m), frac_bits);
  plan.digits = digits;
  plan.em_source = (m > static_cast<long>(kExactTrackCap)) ? EmSource::fixed : EmSource::exact;

  // Plan invariant: the combined budget clears the digit target with a
  // decimal order to spare.
  Rational budget = plan.tail_bound + plan.rounding_bound;
  if (!(budget < make_rational(1, pow10(static_cast<unsigned long>(digits) + 1))))
    throw std::logic_error("plan_for_digits: guard bits failed to cover the target");
  return plan;
}

SeriesPlan plan_for_terms(int level, long terms, long shown_digits_hint) {
  require_level(level);
  if (terms < 0) throw std::invalid_argument("plan_for_terms: terms must be >= 0");
  long hint = std::clamp(shown_digits_hint, 1L, 100000L);
  long frac_bits = guard_frac_bits(hint + 16, std::max(terms, 1L), level);
  if (frac_bits > kMaxFracBits)
    throw PlanLimitError("plan_for_terms: display hint exceeds the precision cap");

  SeriesPlan plan;
  plan.level = level;
  plan.terms = terms;
  plan.frac_bits = frac_bits;
  plan.tail_bound = tail_bound(level, terms);
  plan.rounding_bound = dyadic(predicted_rounding_ulps(level, terms), frac_bits);
  plan.digits = 0;
  plan.em_source = (terms > static_cast<long>(kExactTrackCap)) ? EmSource::fixed : EmSource::exact;
  return plan;
}

int auto_level(long digits, double cost_exponent) {
  if (digits < 1) throw std::invalid_argument("auto_level: digits must be >= 1");
  if (!(cost_exponent > 0.0))
    throw std::invalid_argument("auto_level: cost exponent must be positive");
  int level = 2;
  while (level < 7 &&
         std::pow(static_cast<double>(level) / (level - 1), cost_exponent) > 2.0) {
    ++level;
  }
  return level;
}

}  // namespace egamma
