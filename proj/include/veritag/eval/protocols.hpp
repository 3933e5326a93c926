#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/eval/metrics.hpp"
#include "veritag/featureset/extract.hpp"
#include "veritag/models/pipeline.hpp"
#include "veritag/util/numeric.hpp"
#include "veritag/util/parallel.hpp"
#include "veritag/util/random.hpp"

namespace veritag::eval {

using featureset::PageFeatures;
using models::PipelineConfig;

using PageRefs = std::vector<const PageFeatures*>;

inline PageRefs refs(const std::vector<PageFeatures>& pages) {
  PageRefs out;
  for (const auto& p : pages) out.push_back(&p);
  return out;
}

/// Resolved settings echoed into every report.
inline nlohmann::ordered_json config_echo(const PipelineConfig& cfg) {
  nlohmann::ordered_json j;
  j["features"] = cfg.features;
  j["classifier"] = cfg.classifier;
  j["groups"] = featureset::groups_label(cfg.groups);
  j["granularity"] = std::string(featureset::to_string(cfg.granularity));
  j["pruning"] = cfg.pruning;
  j["seed"] = cfg.seed;
  j["cost"] = cfg.cost;
  j["k"] = cfg.k;
  j["trees"] = cfg.trees;
  j["min_df"] = cfg.min_df;
  return j;
}

struct EvalReport {
  std::string protocol = "cv";
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0.0;
  nlohmann::ordered_json config;
};

/// Fold index per document. Within each class (in class-id order) documents
/// are shuffled with a seeded generator and dealt round-robin, continuing
/// the deal position across classes so fold sizes differ by at most one.
inline std::vector<int> stratified_folds(const std::vector<int>& labels, int k, std::uint64_t seed) {
  if (k < 2) throw UsageError("cv: k must be at least 2");
  if (static_cast<std::size_t>(k) > labels.size())
    throw DataError("cv: k = " + std::to_string(k) + " exceeds the " + std::to_string(labels.size()) + " documents");
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  if (by_class.size() < 2) throw DataError("cv: both classes must be present");
  std::vector<int> fold(labels.size(), -1);
  std::size_t deal = 0;
  for (auto& [cls, idx] : by_class) {
    util::Rng rng(util::derive_seed(seed, static_cast<std::uint64_t>(cls)));
    util::shuffle(idx, rng);
    for (auto i : idx) fold[i] = static_cast<int>(deal++ % static_cast<std::size_t>(k));
  }
  return fold;
}

/// Accuracy of a pipeline fitted on `train` and applied to `test`.
inline double train_test_accuracy(const PageRefs& train, const PageRefs& test, const PipelineConfig& cfg,
                                  const linguistics::CategoryDictionary& dict) {
  auto pipe = models::fit_pipeline(train, cfg, dict);
  std::vector<int> pred;
  for (const auto& p : models::predict_pages(pipe, test, dict)) pred.push_back(p.label);
  return accuracy(pred, models::page_labels(test));
}

/// Stratified k-fold CV. Every fitted component (standardizer, TF-IDF,
/// classifier) sees only the training folds.
inline EvalReport kfold_cv(const PageRefs& pages, int k, const PipelineConfig& cfg,
                           const linguistics::CategoryDictionary& dict) {
  const auto labels = models::page_labels(pages);
  const auto fold = stratified_folds(labels, k, cfg.seed);
  EvalReport r;
  r.config = config_echo(cfg);
  r.config["k"] = k;
  r.fold_accuracies.resize(static_cast<std::size_t>(k));
  PipelineConfig inner = cfg;
  inner.jobs = 1;
  util::parallel_for(static_cast<std::size_t>(k), cfg.jobs, [&](std::size_t f) {
    PageRefs train, test;
    for (std::size_t i = 0; i < pages.size(); ++i) (fold[i] == static_cast<int>(f) ? test : train).push_back(pages[i]);
    r.fold_accuracies[f] = train_test_accuracy(train, test, inner, dict);
  });
  r.mean_accuracy = util::pairwise_sum(r.fold_accuracies) / static_cast<double>(k);
  return r;
}

struct TemporalReport {
  std::vector<int> years;
  std::map<std::pair<int, int>, std::optional<double>> cells;  // (train, test) -> accuracy, absent when skipped
  std::map<int, std::optional<double>> means;                  // per train year over the other years
  std::vector<std::string> warnings;
  nlohmann::ordered_json config;

  std::size_t filled() const {
    std::size_t n = 0;
    for (const auto& [key, v] : cells) n += v.has_value();
    return n;
  }
};

/// Train on one year, test on each other year separately.
inline TemporalReport temporal_eval(const PageRefs& pages, const PipelineConfig& cfg,
                                    const linguistics::CategoryDictionary& dict) {
  std::map<int, PageRefs> by_year;
  for (const auto* p : pages) by_year[p->year].push_back(p);
  if (by_year.size() < 2) throw DataError("temporal: at least two distinct years are required");
  TemporalReport r;
  r.config = config_echo(cfg);
  std::set<int> usable;
  for (const auto& [year, docs] : by_year) {
    r.years.push_back(year);
    std::set<int> classes;
    for (auto c : models::page_labels(docs)) classes.insert(c);
    if (classes.size() < 2) r.warnings.push_back("year " + std::to_string(year) + " has a single class; skipped");
    else usable.insert(year);
  }
  std::vector<std::pair<int, int>> jobs;
  for (int a : r.years)
    for (int b : r.years)
      if (a != b) {
        r.cells[{a, b}] = std::nullopt;
        if (usable.count(a) && usable.count(b)) jobs.emplace_back(a, b);
      }
  std::vector<double> acc(jobs.size());
  PipelineConfig inner = cfg;
  inner.jobs = 1;
  util::parallel_for(jobs.size(), cfg.jobs, [&](std::size_t i) {
    acc[i] = train_test_accuracy(by_year.at(jobs[i].first), by_year.at(jobs[i].second), inner, dict);
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) r.cells[jobs[i]] = acc[i];
  for (int a : r.years) {
    std::vector<double> row;
    for (int b : r.years)
      if (a != b && r.cells[{a, b}]) row.push_back(*r.cells[{a, b}]);
    if (!row.empty() && row.size() == r.years.size() - 1) r.means[a] = util::pairwise_sum(row) / static_cast<double>(row.size());
    else r.means[a] = std::nullopt;
  }
  return r;
}

struct CrossDomainRow {
  std::string classifier;
  double baseline = 0.0;
  double tag = 0.0;
};

struct CrossDomainReport {
  std::string train_name, test_name;
  std::vector<CrossDomainRow> rows;
  nlohmann::ordered_json config;
};

/// Fit on the whole training corpus, score on the whole test corpus, for the
/// TAG model and the content baseline under each classifier.
inline CrossDomainReport cross_domain_eval(const PageRefs& train, const PageRefs& test,
                                           const std::vector<std::string>& classifiers, const PipelineConfig& cfg,
                                           const linguistics::CategoryDictionary& dict, std::string train_name = "train",
                                           std::string test_name = "test") {
  std::set<std::string> train_ids;
  for (const auto* p : train) train_ids.insert(p->doc_id);
  for (const auto* p : test)
    if (train_ids.count(p->doc_id)) throw DataError("cross-domain: document '" + p->doc_id + "' is in both corpora");
  CrossDomainReport r{std::move(train_name), std::move(test_name), {}, config_echo(cfg)};
  r.rows.resize(classifiers.size());
  util::parallel_for(classifiers.size() * 2, cfg.jobs, [&](std::size_t i) {
    PipelineConfig c = cfg;
    c.jobs = 1;
    c.classifier = classifiers[i / 2];
    c.features = i % 2 ? "tag" : "baseline";
    const double a = train_test_accuracy(train, test, c, dict);
    r.rows[i / 2].classifier = c.classifier;
    (i % 2 ? r.rows[i / 2].tag : r.rows[i / 2].baseline) = a;
  });
  return r;
}

struct GridCell {
  featureset::GroupSet groups;
  featureset::Granularity granularity;
  EvalReport report;
};

inline std::vector<featureset::GroupSet> default_grid_rows() {
  std::vector<featureset::GroupSet> out;
  for (const char* s : {"W", "L", "N", "R", "L-R", "N-R", "N-W", "L-W", "R-W", "N-R-W", "L-R-W", "L-N-R-W"})
    out.push_back(featureset::parse_groups(s));
  return out;
}

/// k-fold CV for each (groups, granularity) cell. All cells share the fold
/// assignment and classifier seed.
inline std::vector<GridCell> feature_grid_eval(const PageRefs& pages, const std::vector<featureset::GroupSet>& rows,
                                               const std::vector<featureset::Granularity>& granularities, int k,
                                               const PipelineConfig& cfg,
                                               const linguistics::CategoryDictionary& dict) {
  std::vector<GridCell> cells;
  for (const auto& g : rows)
    for (auto gr : granularities) cells.push_back({g, gr, {}});
  util::parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    PipelineConfig c = cfg;
    c.jobs = 1;
    c.features = "tag";
    c.groups = cells[i].groups;
    c.granularity = cells[i].granularity;
    cells[i].report = kfold_cv(pages, k, c, dict);
  });
  return cells;
}

}  // namespace veritag::eval
