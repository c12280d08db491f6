#include "cocite/embeddings.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "cocite/error.hpp"

namespace cocite {

using nlohmann::json;

const std::vector<EmbeddedItem> EmbeddingStore::kEmpty = {};

const std::vector<EmbeddedItem>& EmbeddingStore::items_for(
    const std::string& case_id) const {
  const auto it = by_case_.find(case_id);
  return it == by_case_.end() ? kEmpty : it->second;
}

void EmbeddingStore::insert(std::string case_id, EmbeddedItem item) {
  by_case_[std::move(case_id)].push_back(std::move(item));
  ++n_vectors_;
}

void EmbeddingStore::sort_items() {
  for (auto& [id, items] : by_case_) {
    std::sort(items.begin(), items.end(),
              [](const EmbeddedItem& a, const EmbeddedItem& b) {
                return a.item_index < b.item_index;
              });
  }
}

EmbeddingStore load_embeddings(const std::filesystem::path& path,
                               const CaseSet& cases) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());

  EmbeddingStore store;
  std::map<std::pair<std::string, int>, std::size_t> seen_at_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);

    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(where + ": invalid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("case_id") ||
        !j["case_id"].is_string() || !j.contains("item_index") ||
        !j["item_index"].is_number_integer() || !j.contains("vector") ||
        !j["vector"].is_array()) {
      throw ParseError(where +
                       ": expected {\"case_id\": str, \"item_index\": int, "
                       "\"vector\": [number]}");
    }

    const std::string case_id = j["case_id"].get<std::string>();
    const int item_index = j["item_index"].get<int>();

    const Case* c = cases.find(case_id);
    if (c == nullptr) {
      throw ValidationError(where + ": case_id \"" + case_id +
                            "\" not present in the case set");
    }
    if (item_index < 0 ||
        static_cast<std::size_t>(item_index) >= c->dispute_items.size()) {
      throw ValidationError(
          where + ": item_index " + std::to_string(item_index) +
          " out of range for case \"" + case_id + "\" with " +
          std::to_string(c->dispute_items.size()) + " dispute items");
    }

    EmbeddedItem item;
    item.item_index = item_index;
    item.vector.reserve(j["vector"].size());
    for (const auto& v : j["vector"]) {
      if (!v.is_number()) {
        throw ParseError(where + ": \"vector\" entries must be numbers");
      }
      item.vector.push_back(v.get<double>());
    }
    if (item.vector.empty()) {
      throw ValidationError(where + ": empty vector (dimension must be >= 1)");
    }
    if (store.dim() == 0) {
      store.set_dim(item.vector.size());
    } else if (item.vector.size() != store.dim()) {
      throw ValidationError(where + ": dimension " +
                            std::to_string(item.vector.size()) + " != " +
                            std::to_string(store.dim()));
    }

    const auto key = std::make_pair(case_id, item_index);
    const auto [it, inserted] = seen_at_line.emplace(key, line_no);
    if (!inserted) {
      throw ValidationError(where + ": duplicate (case_id, item_index) (" +
                            case_id + ", " + std::to_string(item_index) +
                            "), first seen on line " +
                            std::to_string(it->second));
    }
    store.insert(case_id, std::move(item));
  }
  store.sort_items();
  return store;
}

}  // namespace cocite
