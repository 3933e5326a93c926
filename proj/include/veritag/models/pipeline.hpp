#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/featureset/extract.hpp"
#include "veritag/featureset/pruning.hpp"
#include "veritag/featureset/schema.hpp"
#include "veritag/featureset/standardizer.hpp"
#include "veritag/models/knn.hpp"
#include "veritag/models/random_forest.hpp"
#include "veritag/models/svm.hpp"
#include "veritag/models/tfidf.hpp"
#include "veritag/util/hash.hpp"
#include "veritag/util/strings.hpp"
#include "veritag/version.hpp"

namespace veritag::models {

using featureset::FeatureSchema;
using featureset::Granularity;
using featureset::GroupSet;
using featureset::PageFeatures;

/// Everything needed to fit one model. `features` is "tag" or "baseline";
/// the baseline ignores `groups` and `pruning`.
struct PipelineConfig {
  std::string features = "tag";
  std::string classifier = "svm";  // svm | knn | rf
  double cost = default_svm_cost;
  int k = default_knn_k;
  int trees = default_rf_trees;
  std::uint64_t seed = 42;
  GroupSet groups = {featureset::Group::N, featureset::Group::L, featureset::Group::R, featureset::Group::W};
  Granularity granularity = Granularity::HC;
  std::string pruning = "none";                // none | paper | computed:PATH
  std::optional<FeatureSchema> computed_keep;  // loaded selection for computed:PATH
  int min_df = 2;
  unsigned jobs = 1;
};

inline void validate_classifier_name(const std::string& c) {
  if (c != "svm" && c != "knn" && c != "rf") throw UsageError("unknown classifier '" + c + "' (svm, knn, rf)");
}

using Classifier = std::variant<LinearSvmModel, KnnModel, RandomForestModel>;

inline Classifier train_classifier(const PipelineConfig& cfg, const Matrix& X, const std::vector<int>& y) {
  if (cfg.classifier == "svm") {
    SvmOptions o;
    o.cost = cfg.cost;
    return svm_train(X, y, o);
  }
  if (cfg.classifier == "knn") return knn_train(X, y, cfg.k);
  if (cfg.classifier == "rf") return rf_train(X, y, cfg.trees, cfg.seed, cfg.jobs);
  validate_classifier_name(cfg.classifier);
  return {};
}

inline Prediction classify(const Classifier& c, const std::vector<double>& x) {
  return std::visit(
      [&](const auto& m) -> Prediction {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearSvmModel>) return svm_predict(m, x);
        else if constexpr (std::is_same_v<T, KnnModel>) return knn_predict(m, x);
        else return rf_predict(m, x);
      },
      c);
}

inline std::string classifier_name(const Classifier& c) {
  static const char* names[] = {"svm", "knn", "rf"};
  return names[c.index()];
}

struct TrainedPipeline {
  std::string kind = "tag";  // tag | baseline
  FeatureSchema schema;      // dense columns before standardization
  featureset::StandardizerParams standardizer;
  std::optional<TfidfVectorizer> tfidf;
  Classifier model;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

  std::string model_type() const { return (kind == "baseline" ? "baseline-" : "") + classifier_name(model); }
};

/// Layout produced by extraction for the given config.
inline FeatureSchema extraction_schema(const PipelineConfig& cfg, const linguistics::CategoryDictionary& dict) {
  if (cfg.features == "baseline")
    return featureset::full_schema({featureset::Group::L, featureset::Group::R}, cfg.granularity, dict);
  if (cfg.features != "tag") throw UsageError("features must be 'tag' or 'baseline'");
  return featureset::full_schema(cfg.groups, cfg.granularity, dict);
}

/// Extraction layout after the configured pruning.
inline FeatureSchema model_schema(const PipelineConfig& cfg, const linguistics::CategoryDictionary& dict) {
  auto full = extraction_schema(cfg, dict);
  if (cfg.features == "baseline" || cfg.pruning == "none") return full;
  if (cfg.pruning == "paper") return featureset::apply_paper_pruning(full).schema;
  if (util::starts_with(cfg.pruning, "computed:")) {
    if (!cfg.computed_keep) throw UsageError("pruning '" + cfg.pruning + "' has no loaded schema");
    auto s = featureset::apply_computed_pruning(full, *cfg.computed_keep, cfg.pruning.substr(9));
    if (s.names.empty()) throw DataError("computed pruning keeps no feature of the extraction schema");
    return s;
  }
  throw UsageError("pruning must be none, paper or computed:PATH, got '" + cfg.pruning + "'");
}

/// Dense columns (per `schema`) for each page.
inline Matrix dense_columns(const std::vector<const PageFeatures*>& pages, const FeatureSchema& schema,
                            const linguistics::CategoryDictionary& dict) {
  const auto full = featureset::full_schema(schema.groups, schema.granularity, dict);
  Matrix out;
  out.reserve(pages.size());
  for (const auto* p : pages) {
    auto v = featureset::assemble(*p, schema.granularity, schema.groups);
    if (v.values.size() != full.size()) throw DataError("page features do not match the dictionary in use");
    out.push_back(featureset::project(v.values, full, schema));
  }
  return out;
}

inline std::vector<double> finish_row(const TrainedPipeline& p, const std::vector<double>& dense,
                                      const std::string* text) {
  auto z = featureset::standardize_apply(p.standardizer, dense);
  if (!p.tfidf) return z;
  if (!text) throw InvariantError("baseline pipeline needs article text");
  auto row = p.tfidf->transform(*text);
  row.insert(row.end(), z.begin(), z.end());
  return row;
}

/// Model inputs for pages, standardized and, for the baseline, prefixed by
/// the TF-IDF block.
inline Matrix pipeline_inputs(const TrainedPipeline& p, const std::vector<const PageFeatures*>& pages,
                              const linguistics::CategoryDictionary& dict) {
  auto dense = dense_columns(pages, p.schema, dict);
  Matrix out;
  out.reserve(pages.size());
  for (std::size_t i = 0; i < pages.size(); ++i) {
    std::string text;
    if (p.tfidf) text = featureset::granularity_text(pages[i]->article, p.schema.granularity);
    out.push_back(finish_row(p, dense[i], p.tfidf ? &text : nullptr));
  }
  return out;
}

inline nlohmann::ordered_json pipeline_metadata(const PipelineConfig& cfg, const FeatureSchema& schema) {
  nlohmann::ordered_json m;
  m["features"] = cfg.features;
  m["classifier"] = cfg.classifier;
  m["granularity"] = std::string(featureset::to_string(schema.granularity));
  m["groups"] = featureset::groups_label(schema.groups);
  m["pruning"] = schema.pruning;
  m["seed"] = cfg.seed;
  if (cfg.classifier == "svm") m["cost"] = cfg.cost;
  if (cfg.classifier == "knn") m["k"] = cfg.k;
  if (cfg.classifier == "rf") m["trees"] = cfg.trees;
  if (cfg.features == "baseline") m["min_df"] = cfg.min_df;
  m["version"] = std::string(version_string);
  return m;
}

inline std::vector<int> page_labels(const std::vector<const PageFeatures*>& pages) {
  std::vector<int> y;
  for (const auto* p : pages) {
    if (!p->label) throw DataError("page '" + p->doc_id + "' has no label");
    y.push_back(class_id(*p->label));
  }
  return y;
}

/// Fits standardizer, optional TF-IDF and classifier on `pages` only.
inline TrainedPipeline fit_pipeline(const std::vector<const PageFeatures*>& pages, const PipelineConfig& cfg,
                                    const linguistics::CategoryDictionary& dict) {
  validate_classifier_name(cfg.classifier);
  TrainedPipeline p;
  p.kind = cfg.features;
  p.schema = model_schema(cfg, dict);
  auto y = page_labels(pages);
  auto dense = dense_columns(pages, p.schema, dict);
  p.standardizer = featureset::standardize_fit(dense);
  if (cfg.features == "baseline") {
    std::vector<std::string> texts;
    for (const auto* pg : pages) texts.push_back(featureset::granularity_text(pg->article, cfg.granularity));
    TfidfVectorizer v;
    v.min_df = cfg.min_df;
    v.fit(texts);
    p.tfidf = std::move(v);
  }
  Matrix X;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    std::string text;
    if (p.tfidf) text = featureset::granularity_text(pages[i]->article, cfg.granularity);
    X.push_back(finish_row(p, dense[i], p.tfidf ? &text : nullptr));
  }
  p.model = train_classifier(cfg, X, y);
  p.metadata = pipeline_metadata(cfg, p.schema);
  return p;
}

/// TAG pipeline fitted directly on a feature matrix.
inline TrainedPipeline fit_pipeline(const featureset::FeatureMatrix& m, const PipelineConfig& cfg) {
  validate_classifier_name(cfg.classifier);
  if (cfg.features != "tag") throw UsageError("a feature matrix can only train TAG models; the baseline needs a corpus");
  TrainedPipeline p;
  p.schema = m.schema;
  auto dense = m.values();
  p.standardizer = featureset::standardize_fit(dense);
  p.model = train_classifier(cfg, featureset::standardize_apply(p.standardizer, dense), m.labels());
  p.metadata = pipeline_metadata(cfg, p.schema);
  return p;
}

inline std::vector<Prediction> predict_pages(const TrainedPipeline& p, const std::vector<const PageFeatures*>& pages,
                                             const linguistics::CategoryDictionary& dict) {
  std::vector<Prediction> out;
  for (const auto& row : pipeline_inputs(p, pages, dict)) out.push_back(classify(p.model, row));
  return out;
}

/// Predicts rows of a TAG feature matrix; columns are matched by name.
inline std::vector<Prediction> predict_matrix(const TrainedPipeline& p, const featureset::FeatureMatrix& m) {
  if (p.tfidf) throw UsageError("baseline models predict from a corpus, not a feature matrix");
  auto projected = featureset::project(m, p.schema);
  if (projected.schema.hash() != p.schema.hash()) throw DataError("feature matrix does not match the model schema");
  std::vector<Prediction> out;
  for (const auto& r : projected.rows) out.push_back(classify(p.model, finish_row(p, r.values, nullptr)));
  return out;
}

// ---- persistence -------------------------------------------------------

inline nlohmann::ordered_json classifier_to_json(const Classifier& c) {
  return std::visit([](const auto& m) { return to_json(m); }, c);
}

inline Classifier classifier_from_json(const std::string& name, const nlohmann::json& j) {
  if (name == "svm") return svm_from_json(j);
  if (name == "knn") return knn_from_json(j);
  if (name == "rf") return rf_from_json(j);
  throw DataError("unknown classifier '" + name + "' in model file");
}

inline std::string pipeline_file_text(const TrainedPipeline& p) {
  nlohmann::ordered_json payload;
  payload["kind"] = p.kind;
  nlohmann::ordered_json schema = nlohmann::ordered_json::parse(featureset::schema_file_text(p.schema));
  payload["schema"] = std::move(schema);
  payload["standardizer"] = featureset::to_json(p.standardizer);
  if (p.tfidf) payload["tfidf"] = to_json(*p.tfidf);
  payload["classifier"] = classifier_name(p.model);
  payload["model"] = classifier_to_json(p.model);
  payload["metadata"] = p.metadata;
  const std::string body = payload.dump();
  nlohmann::ordered_json env;
  env["format_version"] = model_format_version;
  env["model_type"] = p.model_type();
  env["schema_hash"] = p.schema.hash();
  env["payload"] = std::move(payload);
  env["checksum"] = util::hex64(util::fnv1a64(body));
  return env.dump() + "\n";
}

inline void save_pipeline(const TrainedPipeline& p, const std::string& path) {
  util::write_file(path, pipeline_file_text(p));
}

inline TrainedPipeline parse_pipeline(std::string_view text, const std::string& origin = "<model>") {
  nlohmann::ordered_json env;
  try {
    env = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw DataError(origin + ": corrupt model file (checksum cannot be verified: file is truncated or not JSON)");
  }
  try {
    const int version = env.at("format_version").get<int>();
    if (version != model_format_version)
      throw DataError(origin + ": model format version " + std::to_string(version) + " is not supported (expected " +
                      std::to_string(model_format_version) + ")");
    const auto& payload = env.at("payload");
    if (util::hex64(util::fnv1a64(payload.dump())) != env.at("checksum").get<std::string>())
      throw DataError(origin + ": corrupt model file (checksum mismatch)");
    TrainedPipeline p;
    p.kind = payload.at("kind").get<std::string>();
    p.schema = featureset::schema_from_json(nlohmann::json::parse(payload.at("schema").dump()));
    if (p.schema.hash() != env.at("schema_hash").get<std::string>())
      throw DataError(origin + ": schema hash does not match the stored schema");
    p.standardizer = featureset::standardizer_from_json(nlohmann::json::parse(payload.at("standardizer").dump()));
    if (payload.contains("tfidf")) p.tfidf = tfidf_from_json(nlohmann::json::parse(payload.at("tfidf").dump()));
    p.model = classifier_from_json(payload.at("classifier").get<std::string>(),
                                   nlohmann::json::parse(payload.at("model").dump()));
    p.metadata = payload.at("metadata");
    if (p.model_type() != env.at("model_type").get<std::string>())
      throw DataError(origin + ": model_type disagrees with payload");
    if (p.standardizer.size() != p.schema.size()) throw DataError(origin + ": standardizer does not match schema");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(origin + ": malformed model file: " + e.what());
  }
}

inline TrainedPipeline load_pipeline(const std::string& path) { return parse_pipeline(util::read_file(path), path); }

}  // namespace veritag::models
