#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cocite/article_ref.hpp"
#include "cocite/sorted_set.hpp"

namespace cocite {

// The equivalence key an article contributes under a scheme: either the
// article itself (identity) or a named grouping feature. The two variants
// never compare equal.
struct GroupKey {
  std::variant<ArticleRef, std::string> value;

  static GroupKey article(ArticleRef a) { return {std::move(a)}; }
  static GroupKey group(std::string id) { return {std::move(id)}; }

  bool is_article() const { return value.index() == 0; }
  bool is_group() const { return value.index() == 1; }

  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

using KeySet = SortedSet<GroupKey>;

// File-facing scheme description; mirrors scheme.json.
struct SchemeConfig {
  enum class Default { Identity, Drop };

  struct Rule {
    std::string match;  // "CODE/ART" exact or "CODE/*" wildcard
    std::string group;  // "identity" or a group id
  };

  std::optional<std::vector<std::string>> code_filter;
  Default default_target = Default::Identity;
  std::vector<Rule> rules;  // priority order, first match wins
};

// Compiled scheme. Immutable, shareable, all lookups pure.
class GroupingScheme {
 public:
  bool has_code_filter() const { return code_filter_.has_value(); }
  bool filter_allows(const std::string& code_id) const;

  // First matching rule wins; the default applies when nothing matches.
  // nullopt means the article is dropped: it joins no group and does not
  // count toward g_dice set sizes.
  std::optional<GroupKey> group_of(const ArticleRef& a) const;

  friend GroupingScheme compile_scheme(const SchemeConfig& config);

 private:
  struct CompiledRule {
    bool wildcard = false;
    ArticleRef exact;       // valid when !wildcard
    std::string code;       // valid when wildcard
    bool to_identity = false;
    std::string group_id;   // valid when !to_identity
  };

  std::optional<SortedSet<std::string>> code_filter_;
  std::vector<CompiledRule> rules_;
  bool default_drop_ = false;
};

// Validates and compiles a scheme. Errors: two exact rules for one article,
// empty group id, malformed matcher.
GroupingScheme compile_scheme(const SchemeConfig& config);

// Parses scheme.json:
//   {"code_filter": [str]?, "default": "identity"|"drop",
//    "rules": [{"match": "CODE/ART"|"CODE/*", "group": "identity"|"<name>"}]}
GroupingScheme load_scheme(const std::filesystem::path& path);

// No filter, no rules, identity default.
GroupingScheme identity_scheme();

// Subset whose code_id passes the scheme's code filter; the input unchanged
// when there is no filter. Idempotent.
ArticleSet apply_filter(const ArticleSet& articles,
                        const GroupingScheme& scheme);

std::optional<GroupKey> group_of(const ArticleRef& a,
                                 const GroupingScheme& scheme);

// The set of keys the articles map to (dropped articles contribute nothing).
// Feeding collapsed sets to dice() reproduces perspective-encoded DICE.
KeySet collapse(const ArticleSet& articles, const GroupingScheme& scheme);

}  // namespace cocite
