#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace cocite {

// Set with value semantics backed by a sorted, deduplicated vector.
template <typename T>
class SortedSet {
 public:
  SortedSet() = default;

  // Sorts and dedups; returns how many duplicates were removed.
  static std::pair<SortedSet, std::size_t> from_items(std::vector<T> items) {
    std::sort(items.begin(), items.end());
    auto last = std::unique(items.begin(), items.end());
    const std::size_t dropped =
        static_cast<std::size_t>(items.end() - last);
    items.erase(last, items.end());
    SortedSet s;
    s.items_ = std::move(items);
    return {std::move(s), dropped};
  }

  explicit SortedSet(std::vector<T> items)
      : SortedSet(from_items(std::move(items)).first) {}

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<T>& items() const { return items_; }

  bool contains(const T& v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
  }

  static std::size_t intersection_size(const SortedSet& a,
                                       const SortedSet& b) {
    std::size_t n = 0;
    auto ia = a.items_.begin();
    auto ib = b.items_.begin();
    while (ia != a.items_.end() && ib != b.items_.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++n;
        ++ia;
        ++ib;
      }
    }
    return n;
  }

  friend bool operator==(const SortedSet& a, const SortedSet& b) = default;

 private:
  std::vector<T> items_;
};

}  // namespace cocite
