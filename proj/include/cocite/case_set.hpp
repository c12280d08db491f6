#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cocite/article_ref.hpp"

namespace cocite {

struct Case {
  std::string case_id;
  std::optional<int> year;
  std::optional<std::string> court;
  std::optional<std::string> cause_of_action;
  ArticleSet cited_articles;
  std::vector<std::string> dispute_items;
};

// Immutable after load; safe to share across threads.
class CaseSet {
 public:
  explicit CaseSet(std::vector<Case> cases,
                   std::uint64_t duplicate_citation_warnings = 0);

  std::size_t size() const { return cases_.size(); }
  const std::vector<Case>& cases() const { return cases_; }
  const Case* find(const std::string& case_id) const;
  const Case& at(const std::string& case_id) const;  // throws ValidationError

  // Count of duplicate citation strings dropped at load time (per-case
  // duplicates collapse under set semantics; worth surfacing, not fatal).
  std::uint64_t duplicate_citation_warnings() const {
    return duplicate_citation_warnings_;
  }

  // Case ids sorted ascending; the canonical enumeration order.
  std::vector<std::string> sorted_ids() const;

 private:
  std::vector<Case> cases_;  // file order
  std::vector<std::size_t> by_id_;  // indices into cases_, sorted by case_id
  std::uint64_t duplicate_citation_warnings_ = 0;
};

// Loads line-delimited JSON, one case per line:
//   {"case_id": str, "year": int?, "court": str?, "cause_of_action": str?,
//    "cited_articles": [str], "dispute_items": [str]}
// Duplicate case_id and malformed lines are hard errors naming line numbers;
// duplicate citations within one case dedup with a warning count.
CaseSet load_cases(const std::filesystem::path& path);

}  // namespace cocite
