#include "cocite/pairing.hpp"

#include "cocite/error.hpp"

namespace cocite {

std::pair<std::uint64_t, std::uint64_t> pair_from_index(std::uint64_t k,
                                                        std::uint64_t n) {
  if (k >= pair_count(n)) {
    throw ValidationError("pair index out of range");
  }
  // Binary search for the row: first i with pairs-before(i+1) > k, where
  // pairs-before(i) = i*n - i*(i+1)/2.
  const auto before = [n](std::uint64_t i) {
    return i * n - i * (i + 1) / 2;
  };
  std::uint64_t lo = 0;
  std::uint64_t hi = n - 1;
  while (lo < hi) {
    const std::uint64_t mid = (lo + hi + 1) / 2;
    if (before(mid) <= k) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::uint64_t i = lo;
  const std::uint64_t j = i + 1 + (k - before(i));
  return {i, j};
}

}  // namespace cocite
