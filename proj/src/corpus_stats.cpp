#include "cocite/corpus_stats.hpp"

#include <set>

#include <json.hpp>

#include "cocite/error.hpp"

namespace cocite {

namespace {

// Code points in a UTF-8 string: bytes that are not continuations.
std::uint64_t utf8_length(const std::string& s) {
  std::uint64_t n = 0;
  for (const char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

void bump_bucket(std::map<std::string, std::uint64_t>& hist, std::size_t value,
                 std::size_t overflow_at, const std::string& overflow_label) {
  if (value >= overflow_at) {
    ++hist[overflow_label];
  } else {
    ++hist[std::to_string(value)];
  }
}

}  // namespace

CorpusStats corpus_stats(const CaseSet& cases) {
  if (cases.size() == 0) {
    throw ValidationError("corpus_stats: empty case set");
  }

  CorpusStats s;
  s.n_cases = cases.size();

  // Pre-fill the figure-convention buckets so reports keep a stable shape.
  for (std::size_t i = 0; i < 25; ++i) {
    s.articles_per_case_histogram[std::to_string(i)] = 0;
  }
  s.articles_per_case_histogram["25+"] = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    s.codes_per_case_histogram[std::to_string(i)] = 0;
  }
  s.codes_per_case_histogram["8+"] = 0;

  std::set<ArticleRef> distinct_articles;
  std::set<std::string> distinct_codes;
  std::uint64_t total_citations = 0;
  std::uint64_t total_disputes = 0;
  double total_chars = 0.0;

  for (const Case& c : cases.cases()) {
    const std::size_t n_articles = c.cited_articles.size();
    total_citations += n_articles;
    std::set<std::string> case_codes;
    for (const ArticleRef& a : c.cited_articles.items()) {
      distinct_articles.insert(a);
      distinct_codes.insert(a.code_id);
      case_codes.insert(a.code_id);
    }
    bump_bucket(s.articles_per_case_histogram, n_articles, 25, "25+");
    bump_bucket(s.codes_per_case_histogram, case_codes.size(), 8, "8+");

    const std::size_t n_disputes = c.dispute_items.size();
    total_disputes += n_disputes;
    ++s.disputes_per_case_histogram[std::to_string(n_disputes)];

    std::uint64_t chars = 0;
    for (const std::string& item : c.dispute_items) chars += utf8_length(item);
    total_chars += static_cast<double>(chars);
    s.dispute_char_max = std::max(s.dispute_char_max, chars);
  }

  s.n_distinct_articles = distinct_articles.size();
  s.n_distinct_codes = distinct_codes.size();
  s.mean_articles_per_case =
      static_cast<double>(total_citations) / static_cast<double>(s.n_cases);
  s.mean_disputes_per_case =
      static_cast<double>(total_disputes) / static_cast<double>(s.n_cases);
  s.dispute_char_mean = total_chars / static_cast<double>(s.n_cases);
  return s;
}

std::string corpus_stats_to_json(const CorpusStats& stats) {
  nlohmann::json j;
  j["n_cases"] = stats.n_cases;
  j["n_distinct_articles"] = stats.n_distinct_articles;
  j["n_distinct_codes"] = stats.n_distinct_codes;
  j["articles_per_case_histogram"] = stats.articles_per_case_histogram;
  j["codes_per_case_histogram"] = stats.codes_per_case_histogram;
  j["mean_articles_per_case"] = stats.mean_articles_per_case;
  j["disputes_per_case_histogram"] = stats.disputes_per_case_histogram;
  j["mean_disputes_per_case"] = stats.mean_disputes_per_case;
  j["dispute_char_stats"] = {{"mean", stats.dispute_char_mean},
                             {"max", stats.dispute_char_max}};
  return j.dump(2) + "\n";
}

}  // namespace cocite
