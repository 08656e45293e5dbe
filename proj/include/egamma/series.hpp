#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "egamma/bounded.hpp"
#include "egamma/exact_core.hpp"
#include "egamma/functions.hpp"

namespace egamma {

// Where the series coefficients e_m come from: exact rationals (small plans)
// or the pure fixed-point recurrence (large plans).
enum class EmSource { exact, fixed };

// Resource caps for the digit planner; exceeding them raises PlanLimitError.
inline constexpr long kMaxPlanTerms = 2000000;
inline constexpr long kMaxFracBits = 8000000;

struct PlanLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeriesPlan {
  int level = 2;            // block level, 2..7
  long terms = 0;           // number of coefficient terms M
  long frac_bits = 64;      // shared fraction bits F
  Rational tail_bound;      // rigorous upper bound on the omitted tail
  Rational rounding_bound;  // predicted upper bound on accumulated rounding
  long digits = 0;          // decimal target D (0 = fixed-term partial sum)
  EmSource em_source = EmSource::exact;
};

struct GammaApproximation {
  FixedPoint value;
  Rational total_error_bound;   // tail_bound + accumulated rounding
  Rational rounding_bound;      // accumulated rounding alone (exact ulp count)
  Rational last_term_magnitude; // upper estimate of the final summand, 0 if none
  SeriesPlan plan;
  long terms_used = 0;
};

struct DeltaRecord {
  unsigned m = 0;
  FixedPoint delta;       // e_m - H_{m+1}/ln2 on the ctx grid
  Rational error_bound;   // rigorous absolute bound on |delta - true|
};

// One row of the coefficient-bound verification: every flag is a
// certain-pass decision made with exact rational arithmetic against the
// 1/ln2 interval enclosure; margins are exact distances to the safe side.
struct BoundCheck {
  unsigned m = 0;
  bool basic_lower = false;   // (H_{m+1} - 1)/ln2 <= e_m
  bool basic_upper = false;   // e_m < H_{m+1}/ln2 - 0.161
  bool sharp_checked = false; // sharper window applies for m >= 2
  bool sharp_lower = false;   // H_{m+1}/ln2 - 0.35 < e_m
  bool sharp_upper = false;   // e_m < H_{m+1}/ln2 - 0.31
  Rational margin_basic_lower;
  Rational margin_basic_upper;
  Rational margin_sharp_lower;
  Rational margin_sharp_upper;

  bool pass() const {
    return basic_lower && basic_upper &&
           (!sharp_checked || (sharp_lower && sharp_upper));
  }
};

// Sum of n^-exponent over the level's dyadic block 2^(level-1) <= n <
// 2^level, ascending n, one truncating division per n. Recorded error:
// 2^(level-1) ulps (contract ceiling: 2 * 2^(level-1)).
Bounded block_power_sum(int level, unsigned long exponent, const PrecisionCtx& ctx);

// Fixed-point coefficient recurrence on the ctx grid for m = 0..m_max;
// entry m carries the recorded bound m ulps (the recurrence divides by the
// exact sum of its own weights, so errors do not amplify).
std::vector<Bounded> em_fixed(long m_max, const PrecisionCtx& ctx);

// Rigorous upper bound on the absolute value of the series tail beyond M
// terms at the given level:
//   B(level, M) = [H_{M+2} / ((M+2) ln 2)] * 2^-((level-1)(M+1))
//                 / (1 - 2^-(level-1)),
// evaluated outward (upper 1/ln2, upper harmonic for huge M). Exact rational.
Rational tail_bound(int level, long terms);

// Fraction bits needed for a D-digit target with M terms at `level`:
// ceil(D log2 10) + 64 + ceil(log2(M * 2^(level-1) + 16)).
long guard_frac_bits(long digits, long terms, int level);

// Smallest M whose tail bound beats 10^-(D+2)/2, with the guard-bit rule and
// the predicted rounding bound; throws PlanLimitError beyond resource caps.
SeriesPlan plan_for_digits(long digits, int level);

// Fixed-term plan (digits = 0) for partial-sum evaluation; frac bits are
// chosen from the display hint so rounding stays far below what is shown.
SeriesPlan plan_for_terms(int level, long terms, long shown_digits_hint);

// Block level from the block-cost heuristic: start at 2, step up while
// (level/(level-1))^cost_exponent > 2, clamped to [2, 7].
int auto_level(long digits, double cost_exponent);

using ProgressFn = std::function<void(long term, long total)>;

// Evaluate the series under `plan`. Deterministic: ascending summation,
// single thread, truncation only.
GammaApproximation gamma_series(const SeriesPlan& plan, const ProgressFn& progress = nullptr);

// delta_m = e_m - H_{m+1}/ln2 with a recorded rigorous bound.
DeltaRecord delta(unsigned m, const PrecisionCtx& ctx);
DeltaRecord delta(unsigned m, const PrecisionCtx& ctx, EmTable& table);

// Alternating eta-series evaluation at integer s >= 1 over the level's
// blocks; the recorded bound includes both rounding and the series tail, so
// the true eta(s) lies within err_ulps ulps of the value.
Bounded eta_level_series(long s, int level, long terms, const PrecisionCtx& ctx);

// Central-difference estimate of e_m from the derivative identity
// e_m = -(m+1) c_m'(1) / ln 2, with dyadic step h (2^-60 <= h <= 2^-10).
// Requires frac_bits >= 4 * ceil(-log2 h). The recorded bound covers
// rounding only; the h^2 method error is the caller's tolerance to judge.
Bounded em_derivative_oracle(unsigned m, const Rational& h, const PrecisionCtx& ctx);

// Exact-rational verification of the coefficient bounds over m_lo..m_hi.
std::vector<BoundCheck> verify_bounds(unsigned m_lo, unsigned m_hi);

}  // namespace egamma
