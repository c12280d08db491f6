#include "cocite/case_set.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "cocite/error.hpp"

namespace cocite {

namespace {

using nlohmann::json;

[[noreturn]] void line_fail(const std::filesystem::path& path, std::size_t line,
                            const std::string& why) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + why);
}

Case parse_case_line(const json& j, const std::filesystem::path& path,
                     std::size_t line, std::uint64_t* dup_warnings) {
  if (!j.is_object()) line_fail(path, line, "expected a JSON object");
  Case c;

  const auto id_it = j.find("case_id");
  if (id_it == j.end() || !id_it->is_string()) {
    line_fail(path, line, "missing or non-string \"case_id\"");
  }
  c.case_id = id_it->get<std::string>();
  if (c.case_id.empty()) line_fail(path, line, "empty \"case_id\"");

  if (const auto it = j.find("year"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) {
      line_fail(path, line, "\"year\" must be an integer");
    }
    c.year = it->get<int>();
  }
  if (const auto it = j.find("court"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) line_fail(path, line, "\"court\" must be a string");
    c.court = it->get<std::string>();
  }
  if (const auto it = j.find("cause_of_action");
      it != j.end() && !it->is_null()) {
    if (!it->is_string()) {
      line_fail(path, line, "\"cause_of_action\" must be a string");
    }
    c.cause_of_action = it->get<std::string>();
  }

  const auto arts_it = j.find("cited_articles");
  if (arts_it == j.end() || !arts_it->is_array()) {
    line_fail(path, line, "missing or non-array \"cited_articles\"");
  }
  std::vector<ArticleRef> refs;
  refs.reserve(arts_it->size());
  for (const auto& raw : *arts_it) {
    if (!raw.is_string()) {
      line_fail(path, line, "\"cited_articles\" entries must be strings");
    }
    try {
      refs.push_back(parse_article_ref(raw.get<std::string>()));
    } catch (const ParseError& e) {
      line_fail(path, line, e.what());
    }
  }
  auto [set, dropped] = ArticleSet::from_items(std::move(refs));
  c.cited_articles = std::move(set);
  *dup_warnings += dropped;

  const auto disp_it = j.find("dispute_items");
  if (disp_it == j.end() || !disp_it->is_array()) {
    line_fail(path, line, "missing or non-array \"dispute_items\"");
  }
  for (const auto& item : *disp_it) {
    if (!item.is_string()) {
      line_fail(path, line, "\"dispute_items\" entries must be strings");
    }
    std::string text = item.get<std::string>();
    if (text.empty()) line_fail(path, line, "empty dispute item");
    c.dispute_items.push_back(std::move(text));
  }
  return c;
}

}  // namespace

CaseSet::CaseSet(std::vector<Case> cases,
                 std::uint64_t duplicate_citation_warnings)
    : cases_(std::move(cases)),
      duplicate_citation_warnings_(duplicate_citation_warnings) {
  by_id_.resize(cases_.size());
  for (std::size_t i = 0; i < cases_.size(); ++i) by_id_[i] = i;
  std::sort(by_id_.begin(), by_id_.end(), [this](std::size_t a, std::size_t b) {
    return cases_[a].case_id < cases_[b].case_id;
  });
  for (std::size_t i = 1; i < by_id_.size(); ++i) {
    if (cases_[by_id_[i - 1]].case_id == cases_[by_id_[i]].case_id) {
      throw ValidationError("duplicate case_id \"" +
                            cases_[by_id_[i]].case_id + "\"");
    }
  }
}

const Case* CaseSet::find(const std::string& case_id) const {
  const auto it = std::lower_bound(
      by_id_.begin(), by_id_.end(), case_id,
      [this](std::size_t idx, const std::string& id) {
        return cases_[idx].case_id < id;
      });
  if (it == by_id_.end() || cases_[*it].case_id != case_id) return nullptr;
  return &cases_[*it];
}

const Case& CaseSet::at(const std::string& case_id) const {
  const Case* c = find(case_id);
  if (c == nullptr) {
    throw ValidationError("unknown case_id \"" + case_id + "\"");
  }
  return *c;
}

std::vector<std::string> CaseSet::sorted_ids() const {
  std::vector<std::string> ids;
  ids.reserve(cases_.size());
  for (const std::size_t idx : by_id_) ids.push_back(cases_[idx].case_id);
  return ids;
}

CaseSet load_cases(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());

  std::vector<Case> cases;
  std::unordered_map<std::string, std::size_t> first_line_of;
  std::uint64_t dup_warnings = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      line_fail(path, line_no, std::string("invalid JSON: ") + e.what());
    }
    Case c = parse_case_line(j, path, line_no, &dup_warnings);
    const auto [it, inserted] = first_line_of.emplace(c.case_id, line_no);
    if (!inserted) {
      throw ValidationError(path.string() + ": duplicate case_id \"" +
                            c.case_id + "\" on lines " +
                            std::to_string(it->second) + " and " +
                            std::to_string(line_no));
    }
    cases.push_back(std::move(c));
  }
  return CaseSet(std::move(cases), dup_warnings);
}

}  // namespace cocite
