#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/linguistics/word_lists.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::eval {

struct DatedText {
  int year = 0;
  std::string text;
};

struct TermCount {
  std::string term;
  long count = 0;
};

struct TermFrequencyReport {
  std::map<int, std::vector<TermCount>> by_year;
};

/// Lowercased unigrams and (when ngram_max >= 2) bigrams of adjacent tokens
/// within a sentence.
/// Stopwords never count and never join a bigram; URLs are skipped. Within a
/// year terms are ordered by count, then lexicographically.
inline TermFrequencyReport term_frequency_report(const std::vector<DatedText>& docs, std::size_t n_top,
                                                 int ngram_max = 2,
                                                 const linguistics::WordSet& stopwords =
                                                     linguistics::WordLists::defaults().stopwords) {
  std::map<int, std::map<std::string, long>> counts;
  for (const auto& d : docs) {
    auto& c = counts[d.year];
    auto t = linguistics::tokenize(d.text);
    std::vector<bool> starts(t.tokens.size() + 1, false);
    for (const auto& s : t.sentences) starts[s.begin] = true;
    std::string prev;
    for (std::size_t i = 0; i < t.tokens.size(); ++i) {
      if (starts[i]) prev.clear();
      if (t.is_url[i]) {
        prev.clear();
        continue;
      }
      std::string w = util::to_lower(t.tokens[i]);
      if (stopwords.contains(w)) {
        prev.clear();
        continue;
      }
      c[w] += 1;
      if (ngram_max >= 2 && !prev.empty()) c[prev + " " + w] += 1;
      prev = std::move(w);
    }
  }
  TermFrequencyReport r;
  for (auto& [year, c] : counts) {
    std::vector<TermCount> v;
    for (auto& [term, n] : c) v.push_back({term, n});
    std::stable_sort(v.begin(), v.end(), [](const TermCount& a, const TermCount& b) { return a.count > b.count; });
    if (v.size() > n_top) v.resize(n_top);
    r.by_year[year] = std::move(v);
  }
  return r;
}

}  // namespace veritag::eval
