#pragma once

#include <vector>

#include "egamma/pascal.hpp"
#include "egamma/rational.hpp"

namespace egamma {

// Largest coefficient index served by the exact rational track by default;
// larger plans switch to the fixed-point coefficient recurrence.
inline constexpr unsigned kExactTrackCap = 512;

// H_n = 1 + 1/2 + ... + 1/n (H_0 = 0), exact. Memoized up to an internal cap;
// requests beyond a hard guard throw (use harmonic_upper for huge n).
Rational harmonic(unsigned long n);

// Rigorous upper bound on H_n that is cheap at any size:
// H_n <= 1 + ln n <= 1 + 7(floor_log2(n)+1)/10.
Rational harmonic_upper(unsigned long n);

// Exact rational coefficients of the gamma series, defined by
//   e_0 = 0,   (2^{m+1} - 2) e_m = 2^{m+1} + sum_{j=1..m} C(m+1, j) e_{m-j}.
// Append-only memo table; entries are never recomputed.
class EmTable {
 public:
  EmTable();
  const Rational& at(unsigned m);
  unsigned computed_up_to() const { return static_cast<unsigned>(values_.size()) - 1; }

 private:
  std::vector<Rational> values_;
  PascalRow row_;  // rolling row m+1 for the step m extension
};

Rational e_exact(unsigned m, EmTable& table);

// Process-wide append-only memo of the exact coefficients (thread-safe,
// returns a copy). Evaluation paths use this so repeated runs never rebuild
// the table.
Rational e_shared(unsigned m);

// Exact rational coefficients c_m(s) for integer s >= 1, defined by
//   c_0(s) = 1,   (2^{m+s} - 2) c_m(s) = sum_{j=1..m} C(m, j) c_{m-j}(s).
// At s = 1 these reduce to c_m(1) = 1/(m+1).
class CmTable {
 public:
  explicit CmTable(long s);  // throws std::invalid_argument for s < 1
  long s() const { return s_; }
  const Rational& at(unsigned m);

 private:
  long s_;
  std::vector<Rational> values_;
  PascalRow row_;  // rolling row m
};

Rational c_exact(long s, unsigned m, CmTable& table);

// (s)_m / m! = C(s+m-1, m) for integer s >= 1.
Rational pochhammer_ratio(long s, unsigned m);

}  // namespace egamma
