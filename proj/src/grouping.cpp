#include "cocite/grouping.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "cocite/error.hpp"

namespace cocite {

bool GroupingScheme::filter_allows(const std::string& code_id) const {
  return !code_filter_ || code_filter_->contains(code_id);
}

std::optional<GroupKey> GroupingScheme::group_of(const ArticleRef& a) const {
  for (const CompiledRule& r : rules_) {
    const bool hit = r.wildcard ? (r.code == a.code_id) : (r.exact == a);
    if (!hit) continue;
    if (r.to_identity) return GroupKey::article(a);
    return GroupKey::group(r.group_id);
  }
  if (default_drop_) return std::nullopt;
  return GroupKey::article(a);
}

GroupingScheme compile_scheme(const SchemeConfig& config) {
  GroupingScheme scheme;
  if (config.code_filter) {
    std::vector<std::string> codes = *config.code_filter;
    scheme.code_filter_.emplace(std::move(codes));
  }
  scheme.default_drop_ = config.default_target == SchemeConfig::Default::Drop;

  std::set<ArticleRef> exact_seen;
  for (const SchemeConfig::Rule& rule : config.rules) {
    GroupingScheme::CompiledRule compiled;

    const auto star = rule.match.find("/*");
    if (star != std::string::npos && star + 2 == rule.match.size()) {
      compiled.wildcard = true;
      const std::string code = rule.match.substr(0, star);
      if (code.empty() || code.find('/') != std::string::npos) {
        throw ValidationError("scheme: bad wildcard matcher \"" + rule.match +
                              "\"");
      }
      compiled.code = parse_article_ref(code + "/0").code_id;  // normalize
    } else {
      compiled.exact = parse_article_ref(rule.match);
      if (!exact_seen.insert(compiled.exact).second) {
        throw ValidationError("scheme: duplicate exact rule for \"" +
                              to_string(compiled.exact) + "\"");
      }
    }

    if (rule.group == "identity") {
      compiled.to_identity = true;
    } else if (rule.group.empty()) {
      throw ValidationError("scheme: empty group id in rule \"" + rule.match +
                            "\"");
    } else {
      compiled.group_id = rule.group;
    }
    scheme.rules_.push_back(std::move(compiled));
  }
  return scheme;
}

GroupingScheme load_scheme(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) {
    throw ParseError(path.string() + ": scheme must be a JSON object");
  }

  SchemeConfig config;
  if (j.contains("code_filter") && !j["code_filter"].is_null()) {
    if (!j["code_filter"].is_array()) {
      throw ParseError(path.string() + ": \"code_filter\" must be an array");
    }
    config.code_filter.emplace();
    for (const auto& c : j["code_filter"]) {
      if (!c.is_string()) {
        throw ParseError(path.string() +
                         ": \"code_filter\" entries must be strings");
      }
      config.code_filter->push_back(c.get<std::string>());
    }
  }
  if (j.contains("default")) {
    const std::string d = j["default"].get<std::string>();
    if (d == "identity") {
      config.default_target = SchemeConfig::Default::Identity;
    } else if (d == "drop") {
      config.default_target = SchemeConfig::Default::Drop;
    } else {
      throw ValidationError(path.string() + ": \"default\" must be " +
                            "\"identity\" or \"drop\", got \"" + d + "\"");
    }
  }
  if (j.contains("rules")) {
    if (!j["rules"].is_array()) {
      throw ParseError(path.string() + ": \"rules\" must be an array");
    }
    for (const auto& r : j["rules"]) {
      if (!r.is_object() || !r.contains("match") || !r["match"].is_string() ||
          !r.contains("group") || !r["group"].is_string()) {
        throw ParseError(path.string() +
                         ": each rule needs string \"match\" and \"group\"");
      }
      config.rules.push_back(
          {r["match"].get<std::string>(), r["group"].get<std::string>()});
    }
  }
  return compile_scheme(config);
}

GroupingScheme identity_scheme() { return compile_scheme(SchemeConfig{}); }

ArticleSet apply_filter(const ArticleSet& articles,
                        const GroupingScheme& scheme) {
  if (!scheme.has_code_filter()) return articles;
  std::vector<ArticleRef> kept;
  for (const ArticleRef& a : articles.items()) {
    if (scheme.filter_allows(a.code_id)) kept.push_back(a);
  }
  return ArticleSet(std::move(kept));
}

std::optional<GroupKey> group_of(const ArticleRef& a,
                                 const GroupingScheme& scheme) {
  return scheme.group_of(a);
}

KeySet collapse(const ArticleSet& articles, const GroupingScheme& scheme) {
  std::vector<GroupKey> keys;
  for (const ArticleRef& a : articles.items()) {
    if (auto key = scheme.group_of(a)) keys.push_back(std::move(*key));
  }
  return KeySet(std::move(keys));
}

}  // namespace cocite
