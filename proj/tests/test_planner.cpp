#include <random>

#include "doctest.h"
#include "egamma/reference.hpp"
#include "egamma/series.hpp"

using namespace egamma;

TEST_CASE("tail bound: pinned magnitudes and monotone decrease") {
  CHECK(tail_bound(4, 113) < make_rational(1, pow10(102)));
  CHECK(tail_bound(2, 0) > Rational(0));
  for (int level = 2; level <= 7; ++level) {
    for (long m = 0; m <= 40; ++m) {
      CAPTURE(level);
      CAPTURE(m);
      CHECK(tail_bound(level, m + 1) < tail_bound(level, m));
    }
  }
  CHECK_THROWS_AS(tail_bound(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(tail_bound(2, -1), std::invalid_argument);
}

TEST_CASE("tail bound stays rigorous through the cheap harmonic upper bound") {
  // Just above the exact-harmonic cutoff the bound must still dominate the
  // exact-harmonic version of itself.
  Rational cheap = tail_bound(2, 4100);
  CHECK(cheap > Rational(0));
  // Recompute with the exact harmonic factor for comparison.
  Rational exact_h = harmonic(4102);
  Rational approx_h = harmonic_upper(4102);
  CHECK(approx_h >= exact_h);
}

TEST_CASE("guard bits follow the digit target and term count") {
  // 10^6 needs 20 bits; 1 term at level 2 gives op count 18 -> 5 bits.
  CHECK(guard_frac_bits(6, 1, 2) == 20 + 64 + 5);
  CHECK(guard_frac_bits(100, 112, 4) > 333 + 64);
  CHECK_THROWS_AS(guard_frac_bits(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(guard_frac_bits(5, 0, 2), std::invalid_argument);
}

TEST_CASE("hundred-digit plan at level four uses about 113 terms") {
  SeriesPlan plan = plan_for_digits(100, 4);
  CHECK(plan.terms >= 110);
  CHECK(plan.terms <= 116);
  CHECK(plan.level == 4);
  CHECK(plan.frac_bits >= 333 + 64);
  CHECK(plan.em_source == EmSource::exact);
  // Minimality: one fewer term would miss the threshold.
  Rational threshold = make_rational(1, 2 * pow10(102));
  CHECK(tail_bound(4, plan.terms) < threshold);
  CHECK(tail_bound(4, plan.terms - 1) >= threshold);
}

TEST_CASE("every plan keeps tail plus predicted rounding under the digit target") {
  for (long digits : {10L, 40L, 80L}) {
    for (int level = 2; level <= 7; ++level) {
      CAPTURE(digits);
      CAPTURE(level);
      SeriesPlan plan = plan_for_digits(digits, level);
      CHECK(plan.tail_bound + plan.rounding_bound <
            make_rational(1, pow10(static_cast<unsigned long>(digits) + 1)));
    }
  }
}

TEST_CASE("actual rounding never exceeds the planned prediction") {
  for (long digits : {15L, 35L}) {
    for (int level = 2; level <= 7; ++level) {
      CAPTURE(digits);
      CAPTURE(level);
      SeriesPlan plan = plan_for_digits(digits, level);
      GammaApproximation g = gamma_series(plan);
      CHECK(g.rounding_bound <= plan.rounding_bound);
    }
  }
}

TEST_CASE("random plans enclose the reference prefix whenever the bound can see it") {
  std::mt19937_64 rng(20260818u);
  const Rational ref_granularity = make_rational(1, pow10(27));
  for (int i = 0; i < 20; ++i) {
    long digits = 10 + static_cast<long>(rng() % 51);
    int level = 2 + static_cast<int>(rng() % 6);
    CAPTURE(digits);
    CAPTURE(level);
    SeriesPlan plan = plan_for_digits(digits, level);
    GammaApproximation g = gamma_series(plan);
    if (g.total_error_bound > ref_granularity) {
      Rational diff = abs(g.value.to_rational() - reference_value());
      CHECK(diff <= g.total_error_bound);
    }
  }
}

TEST_CASE("fixed-term plans carry the display hint into the grid") {
  SeriesPlan plan = plan_for_terms(2, 600, 10);
  CHECK(plan.terms == 600);
  CHECK(plan.digits == 0);
  CHECK(plan.em_source == EmSource::fixed);
  CHECK(plan.frac_bits > 64);
  CHECK(plan_for_terms(2, 5, 10).em_source == EmSource::exact);
  CHECK_THROWS_AS(plan_for_terms(2, -1, 10), std::invalid_argument);
}

TEST_CASE("level heuristic: pinned cost exponents and clamps") {
  CHECK(auto_level(100, 1.0) == 2);
  CHECK(auto_level(100, 2.0) == 4);
  CHECK(auto_level(100, 3.0) == 5);
  CHECK(auto_level(100, 50.0) == 7);   // clamp high
  CHECK(auto_level(100, 0.25) == 2);   // clamp low
  CHECK_THROWS_AS(auto_level(0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(auto_level(10, 0.0), std::invalid_argument);
}

TEST_CASE("resource caps turn absurd targets into typed errors") {
  CHECK_THROWS_AS(plan_for_digits(1000000, 2), PlanLimitError);   // term cap
  CHECK_THROWS_AS(plan_for_digits(3000000, 7), PlanLimitError);   // bit cap
  CHECK_THROWS_AS(plan_for_digits(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(plan_for_digits(10, 9), std::invalid_argument);
}
