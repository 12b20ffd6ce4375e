#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hullx {

/// n choose k as a signed 64-bit value (exact for the sizes used here).
constexpr std::int64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
  return r;
}

constexpr int sign_of_power(std::size_t e) { return (e % 2 == 0) ? 1 : -1; }

inline std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }

/// Calls fn(const std::vector<std::size_t>&) for every k-subset of {0..n-1}
/// in lexicographic order.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace hullx
