#pragma once

#include <cstdint>
#include <utility>

namespace cocite {

// Number of unordered pairs over n items: n(n-1)/2.
constexpr std::uint64_t pair_count(std::uint64_t n) {
  return (n == 0) ? 0 : n * (n - 1) / 2;
}

// Maps a flat pair index k in [0, pair_count(n)) to (i, j) with i < j,
// enumerated row-major: (0,1), (0,2), ..., (0,n-1), (1,2), ...
// With items sorted ascending this is the canonical (case_i, case_j) order.
std::pair<std::uint64_t, std::uint64_t> pair_from_index(std::uint64_t k,
                                                        std::uint64_t n);

}  // namespace cocite
