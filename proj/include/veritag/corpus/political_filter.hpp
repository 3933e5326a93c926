#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::corpus {

inline constexpr const char* politics_topic = "politics";

struct TopicExample {
  std::string text;
  std::string topic;
};

/// Multinomial Naive Bayes over TF-IDF weighted unigrams.
///
/// Term weight is (1 + ln tf) * idf with idf = ln((1 + N) / (1 + df)) + 1.
/// Class-conditional likelihoods use Laplace smoothing with alpha = 1.
struct PoliticalFilterModel {
  std::vector<std::string> classes;          // sorted, lowercase
  std::vector<double> class_log_priors;      // parallel to classes
  std::vector<std::string> vocabulary;       // sorted, unique
  std::vector<double> idf;                   // parallel to vocabulary
  std::vector<std::vector<double>> feature_log_likelihoods;  // [term][class]
  double alpha = 1.0;

  bool trained() const { return !classes.empty(); }

  std::ptrdiff_t term_index(const std::string& term) const {
    auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), term);
    if (it == vocabulary.end() || *it != term) return -1;
    return it - vocabulary.begin();
  }

  std::ptrdiff_t class_index(const std::string& name) const {
    auto it = std::find(classes.begin(), classes.end(), name);
    return it == classes.end() ? -1 : it - classes.begin();
  }
};

/// Lowercased non-URL word tokens with their counts, in term order.
inline std::map<std::string, int> term_counts(const std::string& text) {
  auto tok = linguistics::tokenize(text);
  std::map<std::string, int> counts;
  for (std::size_t i = 0; i < tok.tokens.size(); ++i)
    if (!tok.is_url[i]) ++counts[util::to_lower(tok.tokens[i])];
  return counts;
}

inline PoliticalFilterModel train_political_filter(const std::vector<TopicExample>& examples, double alpha = 1.0) {
  if (examples.empty()) throw DataError("political filter: empty training corpus");
  std::vector<std::map<std::string, int>> docs;
  std::vector<std::string> topics;
  std::map<std::string, int> df;
  std::map<std::string, std::size_t> class_sizes;
  for (const auto& ex : examples) {
    docs.push_back(term_counts(ex.text));
    topics.push_back(util::to_lower(util::trim(ex.topic)));
    if (topics.back().empty()) throw DataError("political filter: example with empty topic");
    ++class_sizes[topics.back()];
    for (const auto& [term, count] : docs.back()) ++df[term];
  }
  if (class_sizes.size() < 2) throw DataError("political filter: need at least two topic classes");
  if (df.empty()) throw DataError("political filter: training texts contain no terms");

  PoliticalFilterModel m;
  m.alpha = alpha;
  const double n_docs = static_cast<double>(examples.size());
  for (const auto& [name, size] : class_sizes) {
    m.classes.push_back(name);
    m.class_log_priors.push_back(std::log(static_cast<double>(size) / n_docs));
  }
  for (const auto& [term, count] : df) {
    m.vocabulary.push_back(term);
    m.idf.push_back(std::log((1.0 + n_docs) / (1.0 + count)) + 1.0);
  }
  const std::size_t n_classes = m.classes.size();
  std::vector<std::vector<double>> mass(m.vocabulary.size(), std::vector<double>(n_classes, 0.0));
  for (std::size_t d = 0; d < docs.size(); ++d) {
    auto c = static_cast<std::size_t>(m.class_index(topics[d]));
    for (const auto& [term, count] : docs[d]) {
      auto t = static_cast<std::size_t>(m.term_index(term));
      mass[t][c] += (1.0 + std::log(static_cast<double>(count))) * m.idf[t];
    }
  }
  std::vector<double> totals(n_classes, 0.0);
  for (const auto& row : mass)
    for (std::size_t c = 0; c < n_classes; ++c) totals[c] += row[c];
  const double v = static_cast<double>(m.vocabulary.size());
  m.feature_log_likelihoods.assign(m.vocabulary.size(), std::vector<double>(n_classes));
  for (std::size_t t = 0; t < mass.size(); ++t)
    for (std::size_t c = 0; c < n_classes; ++c)
      m.feature_log_likelihoods[t][c] = std::log((mass[t][c] + alpha) / (totals[c] + alpha * v));
  return m;
}

/// Posterior probability of every class, in model class order.
inline std::vector<double> class_posteriors(const PoliticalFilterModel& m, const std::string& text) {
  if (!m.trained()) throw UsageError("political filter: model is not trained");
  std::vector<double> score = m.class_log_priors;
  for (const auto& [term, count] : term_counts(text)) {
    auto t = m.term_index(term);
    if (t < 0) continue;
    const double x = (1.0 + std::log(static_cast<double>(count))) * m.idf[static_cast<std::size_t>(t)];
    for (std::size_t c = 0; c < score.size(); ++c)
      score[c] += x * m.feature_log_likelihoods[static_cast<std::size_t>(t)][c];
  }
  const double top = *std::max_element(score.begin(), score.end());
  double z = 0.0;
  for (double& s : score) z += (s = std::exp(s - top));
  for (double& s : score) s /= z;
  return score;
}

struct FilterDecision {
  bool is_political = false;
  double score = 0.0;  // posterior of the politics class
  bool empty_text = false;
};

inline FilterDecision apply_political_filter(const PoliticalFilterModel& m, const std::string& text,
                                             double threshold = 0.5) {
  if (!m.trained()) throw UsageError("political filter: model is not trained");
  auto politics = m.class_index(politics_topic);
  if (politics < 0) throw UsageError("political filter: model has no 'politics' class");
  FilterDecision d;
  d.empty_text = term_counts(text).empty();
  d.score = class_posteriors(m, text)[static_cast<std::size_t>(politics)];
  d.is_political = d.score >= threshold;
  return d;
}

inline nlohmann::json to_json(const PoliticalFilterModel& m) {
  nlohmann::json j;
  j["format"] = "veritag-political-filter";
  j["version"] = 1;
  j["alpha"] = m.alpha;
  j["classes"] = m.classes;
  j["class_log_priors"] = m.class_log_priors;
  j["vocabulary"] = m.vocabulary;
  j["idf"] = m.idf;
  j["feature_log_likelihoods"] = m.feature_log_likelihoods;
  return j;
}

inline PoliticalFilterModel political_filter_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "veritag-political-filter") throw DataError("not a political filter model file");
    if (j.at("version") != 1) throw DataError("unsupported political filter version");
    PoliticalFilterModel m;
    m.alpha = j.at("alpha").get<double>();
    m.classes = j.at("classes").get<std::vector<std::string>>();
    m.class_log_priors = j.at("class_log_priors").get<std::vector<double>>();
    m.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
    m.idf = j.at("idf").get<std::vector<double>>();
    m.feature_log_likelihoods = j.at("feature_log_likelihoods").get<std::vector<std::vector<double>>>();
    if (m.class_log_priors.size() != m.classes.size() || m.idf.size() != m.vocabulary.size() ||
        m.feature_log_likelihoods.size() != m.vocabulary.size() ||
        !std::is_sorted(m.vocabulary.begin(), m.vocabulary.end()))
      throw DataError("political filter model: inconsistent array sizes");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("political filter model: ") + e.what());
  }
}

/// Topic corpus: JSONL of {"text": ..., "topic": ...}.
inline std::vector<TopicExample> load_topic_corpus(const std::string& path) {
  std::vector<TopicExample> out;
  auto lines = util::split(util::read_file(path), '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto line = util::trim(lines[n]);
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      out.push_back({j.at("text").get<std::string>(), j.at("topic").get<std::string>()});
    } catch (const nlohmann::json::exception&) {
      throw DataError(path + ":" + std::to_string(n + 1) + ": expected {\"text\": ..., \"topic\": ...}");
    }
  }
  return out;
}

}  // namespace veritag::corpus
