#pragma once

#include <vector>

#include "egamma/rational.hpp"

namespace egamma {

// One row of Pascal's triangle, grown additively in place (no factorials).
// Row n holds C(n, 0) .. C(n, n).
class PascalRow {
 public:
  PascalRow();  // row 0: {1}
  explicit PascalRow(unsigned n);

  void advance();                // row n -> row n+1
  void advance_to(unsigned n);   // no-op if already at or past n

  unsigned index() const { return index_; }
  const BigInt& at(unsigned k) const;

 private:
  unsigned index_ = 0;
  std::vector<BigInt> entries_;
};

// C(n, k). Returns 0 when k < 0 or k > n. Rows are built additively and
// cached process-wide, append-only.
BigInt binomial(unsigned n, long k);

}  // namespace egamma
