#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/featureset/extract.hpp"
#include "veritag/featureset/schema.hpp"
#include "veritag/linguistics/dictionary.hpp"
#include "veritag/linguistics/pos_tagger.hpp"
#include "veritag/markup/features.hpp"
#include "veritag/models/pipeline.hpp"
#include "veritag/selection/importance.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::cli {

/// Every tunable of a run. Loaded from a JSON file, then overridden by flags.
struct RunConfig {
  std::uint64_t seed = 42;
  std::string granularity = "HC";
  std::string groups = "L-N-R-W";
  std::string pruning = "none";  // none | paper | computed:PATH
  std::string features = "tag";  // tag | baseline
  std::string classifier = "svm";
  double cost = models::default_svm_cost;
  int k = models::default_knn_k;
  int trees = models::default_rf_trees;
  int min_df = 2;
  int folds = 5;
  std::vector<std::string> classifiers = {"svm", "knn", "rf"};
  std::vector<std::string> grid_rows = {"W", "L", "N", "R", "L-R", "N-R", "N-W", "L-W", "R-W", "N-R-W", "L-R-W", "L-N-R-W"};
  std::vector<std::string> grid_granularities = {"H", "C", "HC"};
  int bins = 10;
  int selection_trees = 250;
  double lambda = selection::default_l1_lambda;
  std::string dictionary;  // empty: bundled demo dictionary
  std::string tagger = "rules";
  std::string ad_domains;  // empty: bundled list
  double political_threshold = 0.5;
  int cap = 32;
  int top_terms = 20;
  int ngram_max = 2;
  std::string corpus;
  std::string test_corpus;
  unsigned jobs = 1;  // never echoed: outputs must not depend on it
};

namespace detail {

template <typename T>
void read_key(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError(std::string("config: key '") + key + "' has the wrong type");
  }
}

}  // namespace detail

inline const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys = {
      "seed",   "granularity", "groups",  "pruning",   "features",         "classifier", "cost",
      "k",      "trees",       "min_df",  "folds",     "classifiers",      "grid_rows",  "grid_granularities",
      "bins",   "selection_trees",        "lambda",    "dictionary",       "tagger",     "ad_domains",
      "political_threshold",   "cap",     "top_terms", "ngram_max",        "corpus",     "test_corpus",
      "jobs"};
  return keys;
}

/// Unknown keys are rejected so typos cannot silently fall back to defaults.
inline RunConfig config_from_json(const nlohmann::json& j, const std::string& origin = "config") {
  if (!j.is_object()) throw UsageError(origin + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!config_keys().count(it.key())) throw UsageError(origin + ": unknown key '" + it.key() + "'");
  RunConfig c;
  detail::read_key(j, "seed", c.seed);
  detail::read_key(j, "granularity", c.granularity);
  detail::read_key(j, "groups", c.groups);
  detail::read_key(j, "pruning", c.pruning);
  detail::read_key(j, "features", c.features);
  detail::read_key(j, "classifier", c.classifier);
  detail::read_key(j, "cost", c.cost);
  detail::read_key(j, "k", c.k);
  detail::read_key(j, "trees", c.trees);
  detail::read_key(j, "min_df", c.min_df);
  detail::read_key(j, "folds", c.folds);
  detail::read_key(j, "classifiers", c.classifiers);
  detail::read_key(j, "grid_rows", c.grid_rows);
  detail::read_key(j, "grid_granularities", c.grid_granularities);
  detail::read_key(j, "bins", c.bins);
  detail::read_key(j, "selection_trees", c.selection_trees);
  detail::read_key(j, "lambda", c.lambda);
  detail::read_key(j, "dictionary", c.dictionary);
  detail::read_key(j, "tagger", c.tagger);
  detail::read_key(j, "ad_domains", c.ad_domains);
  detail::read_key(j, "political_threshold", c.political_threshold);
  detail::read_key(j, "cap", c.cap);
  detail::read_key(j, "top_terms", c.top_terms);
  detail::read_key(j, "ngram_max", c.ngram_max);
  detail::read_key(j, "corpus", c.corpus);
  detail::read_key(j, "test_corpus", c.test_corpus);
  detail::read_key(j, "jobs", c.jobs);
  return c;
}

inline RunConfig load_config(const std::string& path) {
  try {
    return config_from_json(nlohmann::json::parse(util::read_file(path)), path);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

/// Resolved configuration as embedded in reports (without `jobs`).
inline nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["seed"] = c.seed;
  j["granularity"] = c.granularity;
  j["groups"] = c.groups;
  j["pruning"] = c.pruning;
  j["features"] = c.features;
  j["classifier"] = c.classifier;
  j["cost"] = c.cost;
  j["k"] = c.k;
  j["trees"] = c.trees;
  j["min_df"] = c.min_df;
  j["folds"] = c.folds;
  j["classifiers"] = c.classifiers;
  j["grid_rows"] = c.grid_rows;
  j["grid_granularities"] = c.grid_granularities;
  j["bins"] = c.bins;
  j["selection_trees"] = c.selection_trees;
  j["lambda"] = c.lambda;
  j["dictionary"] = c.dictionary;
  j["tagger"] = c.tagger;
  j["ad_domains"] = c.ad_domains;
  j["political_threshold"] = c.political_threshold;
  j["cap"] = c.cap;
  j["top_terms"] = c.top_terms;
  j["ngram_max"] = c.ngram_max;
  j["corpus"] = c.corpus;
  j["test_corpus"] = c.test_corpus;
  return j;
}

inline void require_path(const std::string& path, const std::string& what) {
  if (!path.empty() && !std::filesystem::exists(path)) throw DataError(what + " not found: " + path);
}

/// Checks values and that every referenced path exists.
inline void validate(const RunConfig& c) {
  featureset::parse_granularity(c.granularity);
  featureset::parse_groups(c.groups);
  for (const auto& g : c.grid_rows) featureset::parse_groups(g);
  for (const auto& g : c.grid_granularities) featureset::parse_granularity(g);
  if (c.features != "tag" && c.features != "baseline") throw UsageError("features must be 'tag' or 'baseline'");
  models::validate_classifier_name(c.classifier);
  for (const auto& n : c.classifiers) models::validate_classifier_name(n);
  if (c.pruning != "none" && c.pruning != "paper" && !util::starts_with(c.pruning, "computed:"))
    throw UsageError("pruning must be none, paper or computed:PATH");
  if (!(c.cost > 0)) throw UsageError("cost must be positive");
  if (c.k < 1) throw UsageError("k must be at least 1");
  if (c.trees < 1 || c.selection_trees < 1) throw UsageError("tree counts must be at least 1");
  if (c.min_df < 1) throw UsageError("min_df must be at least 1");
  if (c.folds < 2) throw UsageError("folds must be at least 2");
  if (c.bins < 2) throw UsageError("bins must be at least 2");
  if (c.lambda < 0) throw UsageError("lambda must be nonnegative");
  if (c.cap < 1) throw UsageError("cap must be at least 1");
  if (c.top_terms < 1) throw UsageError("top_terms must be at least 1");
  if (c.ngram_max < 1 || c.ngram_max > 2) throw UsageError("ngram_max must be 1 or 2");
  if (c.political_threshold < 0 || c.political_threshold > 1)
    throw UsageError("political_threshold must lie in [0, 1]");
  require_path(c.dictionary, "dictionary");
  require_path(c.ad_domains, "ad-domain list");
  if (util::starts_with(c.tagger, "perceptron:")) require_path(c.tagger.substr(11), "tagger weights");
  if (util::starts_with(c.pruning, "computed:")) require_path(c.pruning.substr(9), "computed pruning schema");
  require_path(c.corpus, "corpus");
  require_path(c.test_corpus, "test corpus");
}

inline featureset::ExtractionContext make_context(const RunConfig& c) {
  featureset::ExtractionContext ctx;
  ctx.dictionary = std::make_shared<linguistics::CategoryDictionary>(
      c.dictionary.empty() ? linguistics::CategoryDictionary::demo() : linguistics::CategoryDictionary::load(c.dictionary));
  ctx.tagger = linguistics::make_tagger(c.tagger);
  ctx.word_lists = std::make_shared<linguistics::WordLists>();
  ctx.ad_domains = std::make_shared<markup::AdDomains>(
      c.ad_domains.empty() ? markup::AdDomains::defaults() : markup::AdDomains::from_file(c.ad_domains));
  return ctx;
}

inline models::PipelineConfig pipeline_config(const RunConfig& c) {
  models::PipelineConfig p;
  p.features = c.features;
  p.classifier = c.classifier;
  p.cost = c.cost;
  p.k = c.k;
  p.trees = c.trees;
  p.seed = c.seed;
  p.groups = featureset::parse_groups(c.groups);
  p.granularity = featureset::parse_granularity(c.granularity);
  p.pruning = c.pruning;
  if (util::starts_with(c.pruning, "computed:")) p.computed_keep = featureset::load_schema(c.pruning.substr(9));
  p.min_df = c.min_df;
  p.jobs = c.jobs;
  return p;
}

}  // namespace veritag::cli
