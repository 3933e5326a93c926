#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::models {

/// Lowercased non-URL tokens of `text`.
inline std::vector<std::string> content_terms(std::string_view text) {
  auto t = linguistics::tokenize(text);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < t.tokens.size(); ++i)
    if (!t.is_url[i]) out.push_back(util::to_lower(t.tokens[i]));
  return out;
}

/// Unigram and bigram counts; a bigram is "a b" for adjacent terms.
inline std::map<std::string, double> ngram_counts(const std::vector<std::string>& terms, int ngram_max = 2) {
  std::map<std::string, double> c;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    c[terms[i]] += 1;
    if (ngram_max >= 2 && i + 1 < terms.size()) c[terms[i] + " " + terms[i + 1]] += 1;
  }
  return c;
}

/// Raw term counts times smoothed idf ln((1+N)/(1+df)) + 1, rows L2-normalized.
struct TfidfVectorizer {
  int min_df = 2;
  int ngram_max = 2;
  std::map<std::string, std::size_t> vocabulary;  // term -> column
  std::vector<double> idf;
  bool fitted = false;

  std::size_t size() const { return idf.size(); }

  void fit(const std::vector<std::string>& texts) {
    std::map<std::string, int> df;
    for (const auto& text : texts)
      for (const auto& [term, count] : ngram_counts(content_terms(text), ngram_max)) df[term] += 1;
    vocabulary.clear();
    idf.clear();
    const double n = static_cast<double>(texts.size());
    for (const auto& [term, d] : df) {
      if (d < min_df) continue;
      vocabulary.emplace(term, idf.size());
      idf.push_back(std::log((1.0 + n) / (1.0 + d)) + 1.0);
    }
    fitted = true;
  }

  std::vector<double> transform(std::string_view text) const {
    if (!fitted) throw InvariantError("tfidf: vectorizer used before fit");
    std::vector<double> row(idf.size(), 0.0);
    for (const auto& [term, count] : ngram_counts(content_terms(text), ngram_max)) {
      auto it = vocabulary.find(term);
      if (it != vocabulary.end()) row[it->second] = count * idf[it->second];
    }
    double norm = 0.0;
    for (double v : row) norm += v * v;
    if (norm > 0) {
      norm = std::sqrt(norm);
      for (auto& v : row) v /= norm;
    }
    return row;
  }
};

inline nlohmann::ordered_json to_json(const TfidfVectorizer& v) {
  std::vector<std::string> terms(v.vocabulary.size());
  for (const auto& [t, i] : v.vocabulary) terms[i] = t;
  nlohmann::ordered_json j;
  j["min_df"] = v.min_df;
  j["ngram_max"] = v.ngram_max;
  j["terms"] = terms;
  j["idf"] = v.idf;
  return j;
}

inline TfidfVectorizer tfidf_from_json(const nlohmann::json& j) {
  TfidfVectorizer v;
  v.min_df = j.at("min_df").get<int>();
  v.ngram_max = j.at("ngram_max").get<int>();
  auto terms = j.at("terms").get<std::vector<std::string>>();
  v.idf = j.at("idf").get<std::vector<double>>();
  if (terms.size() != v.idf.size()) throw DataError("tfidf: inconsistent vocabulary");
  for (std::size_t i = 0; i < terms.size(); ++i) v.vocabulary.emplace(terms[i], i);
  v.fitted = true;
  return v;
}

}  // namespace veritag::models
