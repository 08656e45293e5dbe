#include "egamma/pascal.hpp"

#include <mutex>
#include <stdexcept>

namespace egamma {

PascalRow::PascalRow() : index_(0), entries_{BigInt(1)} {}

PascalRow::PascalRow(unsigned n) : PascalRow() { advance_to(n); }

void PascalRow::advance() {
  // In-place additive extension from the right edge.
  entries_.push_back(1);
  for (std::size_t i = entries_.size() - 2; i >= 1; --i) {
    entries_[i] += entries_[i - 1];
  }
  ++index_;
}

void PascalRow::advance_to(unsigned n) {
  while (index_ < n) advance();
}

const BigInt& PascalRow::at(unsigned k) const {
  if (k > index_) throw std::out_of_range("PascalRow::at: k > row index");
  return entries_[k];
}

namespace {

std::mutex g_pascal_mutex;
// g_pascal_rows[n] is row n; grown append-only under the mutex.
std::vector<std::vector<BigInt>>& pascal_rows() {
  static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  return rows;
}

constexpr unsigned kBinomialCacheCap = 100000;  // memory guard

}  // namespace

BigInt binomial(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
  if (n > kBinomialCacheCap)
    throw std::invalid_argument("binomial: n beyond cache cap");
  std::lock_guard<std::mutex> lock(g_pascal_mutex);
  auto& rows = pascal_rows();
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t i = 1; i + 1 < next.size(); ++i) {
      next[i] = prev[i - 1] + prev[i];
    }
    rows.push_back(std::move(next));
  }
  return rows[n][static_cast<std::size_t>(k)];
}

}  // namespace egamma
