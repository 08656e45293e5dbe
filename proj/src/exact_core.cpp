#include "egamma/exact_core.hpp"

#include <mutex>
#include <stdexcept>

namespace egamma {

namespace {

constexpr unsigned long kHarmonicCacheCap = 4096;
constexpr unsigned long kHarmonicHardCap = 100000;

std::mutex g_harmonic_mutex;

std::vector<Rational>& harmonic_table() {
  static std::vector<Rational> table{Rational(0)};
  return table;
}

}  // namespace

Rational harmonic(unsigned long n) {
  if (n > kHarmonicHardCap)
    throw std::invalid_argument("harmonic: n beyond hard cap, use harmonic_upper");
  std::lock_guard<std::mutex> lock(g_harmonic_mutex);
  auto& table = harmonic_table();
  while (table.size() <= n && table.size() <= kHarmonicCacheCap) {
    Rational next = table.back() + make_rational(1, BigInt(table.size()));
    table.push_back(next);
  }
  if (n < table.size()) return table[n];
  // Rare large request: extend from the cache tail without memoizing.
  Rational acc = table.back();
  for (unsigned long j = table.size(); j <= n; ++j) {
    acc += make_rational(1, BigInt(j));
  }
  return acc;
}

Rational harmonic_upper(unsigned long n) {
  if (n == 0) return Rational(0);
  BigInt nz(static_cast<unsigned long>(n));
  long lg = floor_log2(nz);
  return Rational(1) + make_rational(7 * (BigInt(lg) + 1), BigInt(10));
}

EmTable::EmTable() : values_{Rational(0)}, row_(1) {}

const Rational& EmTable::at(unsigned m) {
  while (computed_up_to() < m) {
    unsigned next = computed_up_to() + 1;
    row_.advance_to(next + 1);
    // (2^{next+1} - 2) e_next = 2^{next+1} + sum_{j=1..next} C(next+1, j) e_{next-j}
    BigInt two_pow = pow2(next + 1);
    Rational acc(two_pow);
    for (unsigned j = 1; j <= next; ++j) {
      acc += row_.at(j) * values_[next - j];
    }
    values_.push_back(acc / Rational(two_pow - 2));
  }
  return values_[m];
}

Rational e_exact(unsigned m, EmTable& table) { return table.at(m); }

Rational e_shared(unsigned m) {
  static std::mutex mu;
  static EmTable table;
  std::lock_guard<std::mutex> lock(mu);
  return table.at(m);  // copied out so later extensions cannot invalidate it
}

CmTable::CmTable(long s) : s_(s), values_{Rational(1)}, row_(0) {
  if (s < 1) throw std::invalid_argument("CmTable: s must be a positive integer");
}

const Rational& CmTable::at(unsigned m) {
  while (values_.size() <= m) {
    unsigned next = static_cast<unsigned>(values_.size());
    row_.advance_to(next);
    Rational acc(0);
    for (unsigned j = 1; j <= next; ++j) {
      acc += row_.at(j) * values_[next - j];
    }
    BigInt divisor = pow2(next + static_cast<unsigned long>(s_)) - 2;
    values_.push_back(acc / Rational(divisor));
  }
  return values_[m];
}

Rational c_exact(long s, unsigned m, CmTable& table) {
  if (table.s() != s) throw std::invalid_argument("c_exact: table built for different s");
  return table.at(m);
}

Rational pochhammer_ratio(long s, unsigned m) {
  if (s < 1) throw std::invalid_argument("pochhammer_ratio: s must be a positive integer");
  // (s)_m / m! = C(s+m-1, m), an integer for integer s >= 1.
  unsigned long n = static_cast<unsigned long>(s) - 1 + m;
  return Rational(binomial(static_cast<unsigned>(n), static_cast<long>(m)));
}

}  // namespace egamma
