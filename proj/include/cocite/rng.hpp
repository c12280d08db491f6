#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace cocite {

// All seeded stages draw from std::mt19937_64, which the C++ standard pins
// bit-for-bit. Bounded draws and shuffles are implemented here instead of
// <random> distributions, whose outputs vary across standard libraries.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw in [0, n). Rejection sampling keeps it unbiased.
  std::uint64_t bounded(std::uint64_t n);

  // Fisher-Yates, high index down.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i + 1));
      using std::swap;
      swap(items[i], items[j]);
    }
  }

  // k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 gen_;
};

// Stable stage seed: one global seed, one sub-stream per stage name, so
// adding a stage never shifts the draws of an existing one.
std::uint64_t sub_seed(std::uint64_t global_seed, std::string_view stage);

// FNV-1a 64-bit over a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace cocite
