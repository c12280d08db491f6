#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cocite/case_set.hpp"

namespace cocite {

// Histogram keys are bucket labels: plain integers plus one overflow label
// ("25+" for articles per case, "8+" for codes per case). Bucket counts
// always sum to n_cases.
struct CorpusStats {
  std::uint64_t n_cases = 0;
  std::uint64_t n_distinct_articles = 0;
  std::uint64_t n_distinct_codes = 0;
  std::map<std::string, std::uint64_t> articles_per_case_histogram;
  std::map<std::string, std::uint64_t> codes_per_case_histogram;
  double mean_articles_per_case = 0.0;
  std::map<std::string, std::uint64_t> disputes_per_case_histogram;
  double mean_disputes_per_case = 0.0;
  double dispute_char_mean = 0.0;
  std::uint64_t dispute_char_max = 0;
};

// Articles-per-case buckets 0..24 plus "25+"; codes-per-case buckets 0..7
// plus "8+" (the 0 bucket keeps the counts summing to n_cases when a case
// cites nothing). Dispute character counts are Unicode code points of the
// concatenated dispute items per case. Throws ValidationError on an empty
// case set.
CorpusStats corpus_stats(const CaseSet& cases);

// Serialized stats report (deterministic key order).
std::string corpus_stats_to_json(const CorpusStats& stats);

}  // namespace cocite
