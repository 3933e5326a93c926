#pragma once

#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "veritag/cli/config.hpp"
#include "veritag/corpus/manifest.hpp"
#include "veritag/corpus/political_filter.hpp"
#include "veritag/corpus/sampling.hpp"
#include "veritag/error.hpp"
#include "veritag/eval/reports.hpp"
#include "veritag/featureset/extract.hpp"
#include "veritag/featureset/matrix_io.hpp"
#include "veritag/markup/article.hpp"
#include "veritag/models/pipeline.hpp"
#include "veritag/selection/importance.hpp"
#include "veritag/util/csv.hpp"
#include "veritag/util/strings.hpp"
#include "veritag/version.hpp"

namespace veritag::cli {

namespace fs = std::filesystem;

/// Flags that override config keys. Each flag writes to a scratch config and
/// is copied over the loaded config only when it was given.
class Overrides {
 public:
  template <typename T>
  CLI::Option* add(CLI::App* app, const std::string& flag, T RunConfig::*field, const std::string& help) {
    auto* opt = app->add_option(flag, scratch_.*field, help);
    items_.push_back({opt, [this, field](RunConfig& c) { c.*field = scratch_.*field; }});
    return opt;
  }

  void apply(RunConfig& c) const {
    for (const auto& [opt, fn] : items_)
      if (opt->count() > 0) fn(c);
  }

 private:
  RunConfig scratch_;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> items_;
};

struct Command {
  CLI::App* app = nullptr;
  Overrides overrides;
  std::string config_path;
  std::string out;
};

inline std::vector<featureset::PageFeatures> load_pages(const std::string& dir,
                                                        const std::vector<featureset::Granularity>& grans,
                                                        const featureset::ExtractionContext& ctx, unsigned jobs,
                                                        std::ostream& log) {
  auto manifest = corpus::load_manifest(dir);
  auto missing = corpus::missing_html(manifest);
  if (!missing.empty()) throw DataError(dir + ": HTML file missing for document '" + missing.front() + "'");
  auto docs = corpus::load_documents(manifest);
  auto pages = featureset::extract_corpus(docs, grans, ctx, jobs);
  log << "veritag: extracted features for " << pages.size() << " documents from " << dir << "\n";
  return pages;
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else util::write_file(path, text);
}

inline std::string required(const std::string& value, const std::string& flag) {
  if (value.empty()) throw UsageError(flag + " is required");
  return value;
}

/// Parses argv and runs one subcommand. Returns the process exit code:
/// 0 success, 1 usage error, 2 data error, 3 internal invariant violation.
inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  CLI::App app{"veritag: reliability classification of news pages from topic-agnostic features", "veritag"};
  app.set_version_flag("--version", std::string(version_string));
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Command>> commands;
  auto make = [&](const std::string& name, const std::string& help) {
    auto c = std::make_unique<Command>();
    c->app = app.add_subcommand(name, help);
    c->app->add_option("--config", c->config_path, "JSON run configuration; flags override it");
    c->overrides.add(c->app, "--jobs", &RunConfig::jobs, "worker threads (outputs do not depend on it)");
    commands.push_back(std::move(c));
    return commands.back().get();
  };
  auto feature_flags = [](Command* c) {
    c->overrides.add(c->app, "--granularity", &RunConfig::granularity, "H, C or HC");
    c->overrides.add(c->app, "--groups", &RunConfig::groups, "feature groups, e.g. L-N-R-W");
    c->overrides.add(c->app, "--pruning", &RunConfig::pruning, "none, paper or computed:PATH");
    c->overrides.add(c->app, "--dictionary", &RunConfig::dictionary, "LIWC-format dictionary (default: bundled demo)");
    c->overrides.add(c->app, "--tagger", &RunConfig::tagger, "rules or perceptron:PATH");
    c->overrides.add(c->app, "--ad-domains", &RunConfig::ad_domains, "ad-domain list (default: bundled)");
  };
  auto model_flags = [](Command* c) {
    c->overrides.add(c->app, "--c", &RunConfig::cost, "SVM cost");
    c->overrides.add(c->app, "--k", &RunConfig::k, "KNN neighbours");
    c->overrides.add(c->app, "--trees", &RunConfig::trees, "random forest trees");
    c->overrides.add(c->app, "--min-df", &RunConfig::min_df, "baseline TF-IDF minimum document frequency");
    c->overrides.add(c->app, "--seed", &RunConfig::seed, "random seed");
  };

  // ingest
  auto* ingest = make("ingest", "validate a corpus, or label raw page records by site");
  bool check = false;
  std::string pages_path, site_labels_path;
  ingest->overrides.add(ingest->app, "--corpus", &RunConfig::corpus, "corpus directory");
  ingest->app->add_flag("--check", check, "fail when any referenced HTML file is missing");
  ingest->app->add_option("--pages", pages_path, "unlabelled page records (JSONL without label)");
  ingest->app->add_option("--site-labels", site_labels_path, "site -> label JSON for --pages");
  ingest->app->add_option("--out", ingest->out, "output corpus directory for --pages");

  // filter-political
  auto* filter = make("filter-political", "train and/or apply the politics topic filter");
  std::string filter_model, train_topics;
  filter->overrides.add(filter->app, "--corpus", &RunConfig::corpus, "corpus directory to filter");
  filter->app->add_option("--model", filter_model, "filter model path (written when training)")->required();
  filter->app->add_option("--train-topics", train_topics, "topic corpus JSONL to train from");
  filter->overrides.add(filter->app, "--threshold", &RunConfig::political_threshold, "politics posterior threshold");
  filter->app->add_option("--out", filter->out, "output corpus directory");

  // sample
  auto* sample = make("sample", "keep at most CAP pages per site and year");
  sample->overrides.add(sample->app, "--corpus", &RunConfig::corpus, "corpus directory");
  sample->overrides.add(sample->app, "--cap", &RunConfig::cap, "pages per (site, year)");
  sample->overrides.add(sample->app, "--seed", &RunConfig::seed, "random seed");
  sample->app->add_option("--out", sample->out, "output corpus directory");

  // extract
  auto* extract = make("extract", "write the TAG feature matrix of a corpus");
  extract->overrides.add(extract->app, "--corpus", &RunConfig::corpus, "corpus directory");
  feature_flags(extract);
  extract->app->add_option("--out", extract->out, "feature matrix CSV");

  // select
  auto* select = make("select", "score features and keep those with nonzero importance");
  std::string select_features, select_report;
  select->app->add_option("--features", select_features, "labelled feature matrix CSV")->required();
  select->overrides.add(select->app, "--bins", &RunConfig::bins, "quantile bins for entropy and MI");
  select->overrides.add(select->app, "--trees", &RunConfig::selection_trees, "extra-trees ensemble size");
  select->overrides.add(select->app, "--lambda", &RunConfig::lambda, "L1 penalty");
  select->overrides.add(select->app, "--seed", &RunConfig::seed, "random seed");
  select->app->add_option("--out", select->out, "retained schema JSON")->required();
  select->app->add_option("--report", select_report, "importance CSV (default: <out>.importance.csv)");

  // train
  auto* train = make("train", "fit a model on a feature matrix or a corpus");
  std::string train_features, train_classifier;
  train->app->add_option("--classifier", train_classifier, "svm, knn, rf, baseline-svm, baseline-knn or baseline-rf");
  train->app->add_option("--features", train_features, "labelled feature matrix CSV (TAG models)");
  train->overrides.add(train->app, "--corpus", &RunConfig::corpus, "corpus directory");
  feature_flags(train);
  model_flags(train);
  train->app->add_option("--out", train->out, "model file")->required();

  // predict
  auto* predict = make("predict", "apply a saved model");
  std::string predict_model, predict_features;
  predict->app->add_option("--model", predict_model, "model file")->required();
  predict->overrides.add(predict->app, "--corpus", &RunConfig::corpus, "corpus directory");
  predict->app->add_option("--features", predict_features, "feature matrix CSV (TAG models)");
  predict->overrides.add(predict->app, "--dictionary", &RunConfig::dictionary, "dictionary used at training time");
  predict->overrides.add(predict->app, "--tagger", &RunConfig::tagger, "tagger used at training time");
  predict->overrides.add(predict->app, "--ad-domains", &RunConfig::ad_domains, "ad-domain list used at training time");
  predict->app->add_option("--out", predict->out, "predictions CSV (default: stdout)");

  // evaluate
  auto* evaluate = make("evaluate", "run an evaluation protocol");
  std::string protocol = "cv";
  evaluate->app->add_option("--protocol", protocol, "cv, temporal, cross-domain or grid")
      ->check(CLI::IsMember({"cv", "temporal", "cross-domain", "grid"}));
  evaluate->overrides.add(evaluate->app, "--corpus", &RunConfig::corpus, "corpus directory");
  evaluate->overrides.add(evaluate->app, "--test-corpus", &RunConfig::test_corpus, "cross-domain test corpus");
  evaluate->overrides.add(evaluate->app, "--features-kind", &RunConfig::features, "tag or baseline");
  evaluate->overrides.add(evaluate->app, "--classifier", &RunConfig::classifier, "svm, knn or rf");
  evaluate->overrides.add(evaluate->app, "--folds", &RunConfig::folds, "number of CV folds");
  feature_flags(evaluate);
  model_flags(evaluate);
  evaluate->app->add_option("--out", evaluate->out, "report CSV (default: stdout)");

  // report-terms
  auto* terms = make("report-terms", "most frequent terms per year");
  terms->overrides.add(terms->app, "--corpus", &RunConfig::corpus, "corpus directory");
  terms->overrides.add(terms->app, "--top", &RunConfig::top_terms, "terms per year");
  terms->overrides.add(terms->app, "--ngram-max", &RunConfig::ngram_max, "1 or 2");
  terms->app->add_option("--out", terms->out, "report CSV (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : static_cast<int>(ErrorKind::usage);
  }

  try {
    Command* cmd = nullptr;
    for (auto& c : commands)
      if (c->app->parsed()) cmd = c.get();
    RunConfig cfg = cmd->config_path.empty() ? RunConfig{} : load_config(cmd->config_path);
    cmd->overrides.apply(cfg);
    validate(cfg);
    const auto echo = config_to_json(cfg);

    if (cmd == ingest) {
      if (!pages_path.empty()) {
        auto labels = corpus::parse_site_labels(util::read_file(required(site_labels_path, "--site-labels")),
                                                site_labels_path);
        auto records = corpus::load_page_records(pages_path);
        auto projected = corpus::project_labels(labels, records);
        std::vector<corpus::ManifestEntry> entries;
        std::map<std::string, std::string> path_of;
        for (const auto& r : records) path_of[r.id] = r.html_path;
        for (const auto& d : projected.documents)
          entries.push_back({d.id, d.url, d.site, d.label, d.year, path_of.at(d.id)});
        corpus::write_manifest(required(ingest->out, "--out"), fs::path(pages_path).parent_path(), entries, labels);
        err << "veritag: labelled " << entries.size() << " pages; dropped " << projected.dropped_unknown_site
            << " from sites without a label\n";
        return 0;
      }
      auto m = corpus::load_manifest(required(cfg.corpus, "--corpus"));
      auto missing = corpus::missing_html(m);
      nlohmann::ordered_json s;
      std::map<std::string, int> years;
      std::set<std::string> sites;
      int reliable = 0;
      for (const auto& e : m.entries) {
        years[std::to_string(e.year)] += 1;
        sites.insert(e.site);
        reliable += e.label == Label::reliable;
      }
      s["documents"] = m.entries.size();
      s["sites"] = sites.size();
      s["reliable"] = reliable;
      s["unreliable"] = static_cast<int>(m.entries.size()) - reliable;
      s["years"] = years;
      s["missing_html"] = missing;
      out << s.dump(2) << "\n";
      if (check && !missing.empty())
        throw DataError(cfg.corpus + ": " + std::to_string(missing.size()) + " HTML files missing");
      return 0;
    }

    if (cmd == filter) {
      corpus::PoliticalFilterModel model;
      if (!train_topics.empty()) {
        model = corpus::train_political_filter(corpus::load_topic_corpus(train_topics));
        util::write_file(filter_model, corpus::to_json(model).dump(2) + "\n");
        err << "veritag: trained political filter on " << train_topics << "\n";
      } else {
        try {
          model = corpus::political_filter_from_json(nlohmann::json::parse(util::read_file(filter_model)));
        } catch (const nlohmann::json::parse_error& e) {
          throw DataError(filter_model + ": " + e.what());
        }
      }
      if (cfg.corpus.empty()) return 0;
      auto m = corpus::load_manifest(cfg.corpus);
      std::vector<corpus::ManifestEntry> kept;
      std::string scores = util::csv_row({"doc_id", "score", "political", "empty"});
      for (const auto& e : m.entries) {
        auto doc = corpus::load_document(m, e);
        auto article = markup::extract_article(markup::parse_html(doc.html));
        auto d = corpus::apply_political_filter(model, article.headline + "\n" + article.content,
                                                cfg.political_threshold);
        scores += util::csv_row({e.id, util::format_g9(d.score), d.is_political ? "1" : "0", d.empty_text ? "1" : "0"});
        if (d.is_political) kept.push_back(e);
      }
      const auto out_dir = required(filter->out, "--out");
      corpus::write_manifest(out_dir, m.root, kept, m.site_labels);
      util::write_file((fs::path(out_dir) / "political_scores.csv").string(), scores);
      err << "veritag: kept " << kept.size() << " of " << m.entries.size() << " pages as political\n";
      return 0;
    }

    if (cmd == sample) {
      auto m = corpus::load_manifest(required(cfg.corpus, "--corpus"));
      auto kept = corpus::balanced_sample(m.entries, static_cast<std::size_t>(cfg.cap), cfg.seed);
      corpus::write_manifest(required(sample->out, "--out"), m.root, kept, m.site_labels);
      err << "veritag: sampled " << kept.size() << " of " << m.entries.size() << " pages\n";
      return 0;
    }

    const auto ctx = make_context(cfg);
    auto pcfg = pipeline_config(cfg);

    if (cmd == extract) {
      pcfg.features = "tag";
      auto pages = load_pages(required(cfg.corpus, "--corpus"), {pcfg.granularity}, ctx, cfg.jobs, err);
      featureset::FeatureMatrix mat;
      mat.schema = models::model_schema(pcfg, *ctx.dictionary);
      auto refs = eval::refs(pages);
      auto dense = models::dense_columns(refs, mat.schema, *ctx.dictionary);
      for (std::size_t i = 0; i < pages.size(); ++i) mat.rows.push_back({pages[i].doc_id, dense[i], pages[i].label});
      featureset::write_feature_matrix(required(extract->out, "--out"), mat);
      return 0;
    }

    if (cmd == select) {
      auto mat = featureset::read_feature_matrix(select_features);
      selection::SelectionConfig sc;
      sc.bins = cfg.bins;
      sc.trees = cfg.selection_trees;
      sc.lambda = cfg.lambda;
      sc.seed = cfg.seed;
      sc.jobs = cfg.jobs;
      auto result = selection::select_features(mat.values(), mat.labels(), mat.schema, sc);
      result.schema.pruning = "computed:" + select->out;
      util::write_file(select->out, featureset::schema_file_text(result.schema));
      const auto report = select_report.empty() ? select->out + ".importance.csv" : select_report;
      util::write_file(report, selection::importance_report_csv(result.scores));
      err << "veritag: kept " << result.schema.size() << " of " << mat.schema.size() << " features\n";
      return 0;
    }

    if (cmd == train) {
      if (!train_classifier.empty()) {
        if (util::starts_with(train_classifier, "baseline-")) {
          pcfg.features = "baseline";
          pcfg.classifier = train_classifier.substr(9);
        } else {
          pcfg.features = "tag";
          pcfg.classifier = train_classifier;
        }
        models::validate_classifier_name(pcfg.classifier);
      }
      models::TrainedPipeline pipe;
      if (!train_features.empty()) {
        pipe = models::fit_pipeline(featureset::read_feature_matrix(train_features), pcfg);
      } else {
        auto pages = load_pages(required(cfg.corpus, "--corpus or --features"), {pcfg.granularity}, ctx, cfg.jobs, err);
        pipe = models::fit_pipeline(eval::refs(pages), pcfg, *ctx.dictionary);
      }
      pipe.metadata["config"] = echo;
      models::save_pipeline(pipe, train->out);
      err << "veritag: saved " << pipe.model_type() << " model to " << train->out << "\n";
      return 0;
    }

    if (cmd == predict) {
      auto pipe = models::load_pipeline(predict_model);
      std::vector<std::string> ids;
      std::vector<models::Prediction> preds;
      if (!predict_features.empty()) {
        auto mat = featureset::read_feature_matrix(predict_features);
        preds = models::predict_matrix(pipe, mat);
        for (const auto& r : mat.rows) ids.push_back(r.doc_id);
      } else {
        auto pages = load_pages(required(cfg.corpus, "--corpus or --features"), {pipe.schema.granularity}, ctx,
                                cfg.jobs, err);
        preds = models::predict_pages(pipe, eval::refs(pages), *ctx.dictionary);
        for (const auto& p : pages) ids.push_back(p.doc_id);
      }
      std::string csv = util::csv_row({"doc_id", "prediction", "score"});
      for (std::size_t i = 0; i < ids.size(); ++i)
        csv += util::csv_row({ids[i], std::string(to_string(label_from_id(preds[i].label))), util::format_g9(preds[i].score)});
      emit(predict->out, csv, out);
      return 0;
    }

    if (cmd == evaluate) {
      const auto& dict = *ctx.dictionary;
      const std::string corpus_dir = required(cfg.corpus, "--corpus");
      std::string report;
      if (protocol == "grid") {
        std::vector<featureset::Granularity> grans;
        for (const auto& g : cfg.grid_granularities) grans.push_back(featureset::parse_granularity(g));
        std::vector<featureset::GroupSet> rows;
        for (const auto& g : cfg.grid_rows) rows.push_back(featureset::parse_groups(g));
        auto pages = load_pages(corpus_dir, grans, ctx, cfg.jobs, err);
        auto cells = eval::feature_grid_eval(eval::refs(pages), rows, grans, cfg.folds, pcfg, dict);
        report = eval::grid_report_csv(cells, echo);
      } else if (protocol == "cross-domain") {
        auto train_pages = load_pages(corpus_dir, {pcfg.granularity}, ctx, cfg.jobs, err);
        auto test_pages = load_pages(required(cfg.test_corpus, "--test-corpus"), {pcfg.granularity}, ctx, cfg.jobs, err);
        auto r = eval::cross_domain_eval(eval::refs(train_pages), eval::refs(test_pages), cfg.classifiers, pcfg, dict,
                                         fs::path(corpus_dir).lexically_normal().filename().string(),
                                         fs::path(cfg.test_corpus).lexically_normal().filename().string());
        r.config = echo;
        report = eval::cross_domain_report_csv(r);
      } else {
        auto pages = load_pages(corpus_dir, {pcfg.granularity}, ctx, cfg.jobs, err);
        if (protocol == "cv") {
          auto r = eval::kfold_cv(eval::refs(pages), cfg.folds, pcfg, dict);
          r.config = echo;
          report = eval::cv_report_csv(r);
          err << "veritag: mean accuracy " << util::format_g9(r.mean_accuracy) << "\n";
        } else {
          auto r = eval::temporal_eval(eval::refs(pages), pcfg, dict);
          for (const auto& w : r.warnings) err << "veritag: warning: " << w << "\n";
          r.config = echo;
          report = eval::temporal_report_csv(r);
        }
      }
      emit(evaluate->out, report, out);
      return 0;
    }

    if (cmd == terms) {
      auto m = corpus::load_manifest(required(cfg.corpus, "--corpus"));
      std::vector<eval::DatedText> texts;
      for (const auto& e : m.entries) {
        auto a = markup::extract_article(markup::parse_html(corpus::load_document(m, e).html));
        texts.push_back({e.year, a.headline + "\n" + a.content});
      }
      auto r = eval::term_frequency_report(texts, static_cast<std::size_t>(cfg.top_terms), cfg.ngram_max);
      emit(terms->out, eval::term_report_csv(r, echo), out);
      return 0;
    }
    throw InvariantError("no subcommand handler");
  } catch (const Error& e) {
    err << "veritag: error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "veritag: error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::data);
  } catch (const std::exception& e) {
    err << "veritag: internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::invariant);
  }
}

inline int run_command(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv, argv + argc);
  return run_command(args, out, err);
}

}  // namespace veritag::cli
