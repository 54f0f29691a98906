#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "riffle/errors.hpp"

namespace riffle {

inline constexpr int kMaxFactorialItems = 20;  // 20! < 2^64 <= 21!

/// n! as an exact 64-bit value; throws capacity_error for n > 20.
inline std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxFactorialItems) {
    throw capacity_error("factorial(" + std::to_string(n) +
                         ") does not fit in 64 bits");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// C(n, k) as an exact 64-bit value; throws capacity_error on overflow.
inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw capacity_error("binomial(" + std::to_string(n) + "," +
                           std::to_string(k) + ") does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

/// Pascal-triangle cache. Entries that would overflow 64 bits saturate to
/// UINT64_MAX; callers only read entries known to be representable.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n) : max_n_(max_n), rows_(max_n + 1) {
    constexpr std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
    for (int n = 0; n <= max_n; ++n) {
      rows_[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) {
        std::uint64_t a = rows_[n - 1][k - 1];
        std::uint64_t b = rows_[n - 1][k];
        rows_[n][k] = (a == sat || b == sat || a > sat - b) ? sat : a + b;
      }
    }
  }

  std::uint64_t operator()(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    return rows_[n][k];
  }

  int max_n() const { return max_n_; }

 private:
  int max_n_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace riffle
