#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocite/case_set.hpp"

namespace cocite {

struct EmbeddedItem {
  int item_index = 0;  // 0-based slot into the case's dispute_items
  std::vector<double> vector;
};

// Dispute-item vectors keyed by (case_id, item_index). One store has one
// dimension. Immutable after load; safe to share across threads.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return n_vectors_; }

  // Items present for a case, sorted by item_index. Empty span if none.
  const std::vector<EmbeddedItem>& items_for(const std::string& case_id) const;

  // Loader hook.
  void insert(std::string case_id, EmbeddedItem item);
  void set_dim(std::size_t d) { dim_ = d; }
  void sort_items();

 private:
  std::size_t dim_ = 0;
  std::size_t n_vectors_ = 0;
  std::unordered_map<std::string, std::vector<EmbeddedItem>> by_case_;
  static const std::vector<EmbeddedItem> kEmpty;
};

// Loads line-delimited JSON {"case_id": str, "item_index": int,
// "vector": [number]}. Hard errors: dimension mismatch, item_index out of
// range for the named case, case_id absent from `cases`, duplicate
// (case_id, item_index).
EmbeddingStore load_embeddings(const std::filesystem::path& path,
                               const CaseSet& cases);

}  // namespace cocite
