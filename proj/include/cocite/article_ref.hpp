#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "cocite/sorted_set.hpp"

namespace cocite {

// One cited legal article, e.g. {code_id:"LSL", article_id:"229-1"}.
// code_id is ASCII-folded to upper case; article_id is an opaque token.
// Neither field may contain whitespace or '/'.
struct ArticleRef {
  std::string code_id;
  std::string article_id;

  friend auto operator<=>(const ArticleRef&, const ArticleRef&) = default;
};

// Parses "CODE/ARTICLE" (exactly one '/', both sides non-empty after
// trimming). Throws ParseError naming the offending input.
ArticleRef parse_article_ref(std::string_view raw);

// Canonical serialization, "CODE/ARTICLE".
std::string to_string(const ArticleRef& a);

using ArticleSet = SortedSet<ArticleRef>;

}  // namespace cocite
