#pragma once

#include <cstddef>

#include "cocite/article_ref.hpp"
#include "cocite/grouping.hpp"
#include "cocite/sorted_set.hpp"

namespace cocite {

struct SimilarityParams {
  double alpha = 3.0;  // desired minimum number of co-cited articles
  GroupingScheme scheme;
};

// Plain set-overlap coefficient, 2|A∩B| / (|A|+|B|), in [0,1].
// Both-empty scores 0 rather than dividing by zero.
template <typename T>
double dice(const SortedSet<T>& a, const SortedSet<T>& b) {
  const std::size_t denom = a.size() + b.size();
  if (denom == 0) return 0.0;
  const std::size_t common = SortedSet<T>::intersection_size(a, b);
  return (2.0 * static_cast<double>(common)) / static_cast<double>(denom);
}

// dice scaled by |A∩B|/alpha: pairs sharing fewer than alpha articles score
// below dice, pairs sharing more score above it (and may exceed 1).
template <typename T>
double dice2(const SortedSet<T>& a, const SortedSet<T>& b, double alpha) {
  const std::size_t common = SortedSet<T>::intersection_size(a, b);
  return dice(a, b) * (static_cast<double>(common) / alpha);
}

// Articles on either side that take part in at least one cross-case group
// match. Dropped articles (scheme default "drop", no rule hit) neither match
// nor count toward sizes. `participating` is summed over both sides.
struct MatchCount {
  std::size_t participating = 0;  // s(A∩B)
  std::size_t size_a = 0;         // |A| over articles the scheme keeps
  std::size_t size_b = 0;
};

MatchCount count_matches(const ArticleSet& a, const ArticleSet& b,
                         const GroupingScheme& scheme);

// Generalized coefficient s(A∩B) / (|A|+|B|), in [0,1]. Sizes are raw
// (filtered, un-collapsed) article counts. Identity scheme reduces exactly
// to dice.
double g_dice(const ArticleSet& a, const ArticleSet& b,
              const GroupingScheme& scheme);

// g_dice scaled by s(A∩B)/(2*alpha); the group-aware counterpart of dice2
// (s generalizes 2|A∩B|, so the identity scheme reduces exactly to dice2).
double g_dice_weighted(const ArticleSet& a, const ArticleSet& b,
                       const GroupingScheme& scheme, double alpha);

}  // namespace cocite
