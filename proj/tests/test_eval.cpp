#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "support/paths.hpp"
#include "veritag/cli/app.hpp"
#include "veritag/eval/metrics.hpp"
#include "veritag/eval/protocols.hpp"
#include "veritag/eval/reports.hpp"
#include "veritag/eval/terms.hpp"

using namespace veritag;
using namespace veritag::eval;
using featureset::Granularity;

namespace {

const featureset::ExtractionContext& ctx() {
  static const auto c = featureset::ExtractionContext::defaults();
  return c;
}

const linguistics::CategoryDictionary& dict() { return *ctx().dictionary; }

const std::vector<featureset::PageFeatures>& mini() {
  static const auto pages = [] {
    std::ostringstream log;
    return cli::load_pages(VERITAG_SOURCE_DIR "/data/mini_corpus", {Granularity::H, Granularity::C, Granularity::HC},
                           ctx(), 4, log);
  }();
  return pages;
}

PageRefs year_of(const std::vector<featureset::PageFeatures>& pages, int year) {
  PageRefs out;
  for (const auto& p : pages)
    if (p.year == year) out.push_back(&p);
  return out;
}

bool starts_with_config(const std::string& csv) { return csv.rfind("# config: {", 0) == 0; }

}  // namespace

TEST(Metrics, AccuracyExamples) {
  EXPECT_DOUBLE_EQ(accuracy({1, 0, 1}, {1, 1, 1}), 2.0 / 3.0);
  EXPECT_EQ(accuracy({0, 1, 1}, {0, 1, 1}), 1.0);
  EXPECT_EQ(accuracy({0, 0}, {1, 1}), 0.0);
  EXPECT_THROW(accuracy({}, {}), DataError);
  EXPECT_THROW(accuracy({1}, {1, 0}), DataError);
}

TEST(Folds, PartitionSizesAndDeterminism) {
  std::vector<int> labels = {0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
  auto f = stratified_folds(labels, 5, 9);
  std::map<int, int> size;
  for (int x : f) {
    ASSERT_GE(x, 0);
    ASSERT_LT(x, 5);
    ++size[x];
  }
  EXPECT_EQ(size.size(), 5u);
  for (auto [fold, n] : size) EXPECT_EQ(n, 2) << fold;
  EXPECT_EQ(stratified_folds(labels, 5, 9), f);
  EXPECT_THROW(stratified_folds(labels, 11, 1), DataError);
  EXPECT_THROW(stratified_folds(labels, 1, 1), UsageError);
  EXPECT_THROW(stratified_folds({1, 1, 1}, 2, 1), DataError);
}

TEST(Folds, RandomLabelVectorsArePartitionedAndStratified) {
  util::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + util::uniform_index(rng, 80);
    std::vector<int> labels(n);
    for (auto& l : labels) l = static_cast<int>(util::uniform_index(rng, 2));
    labels[0] = 0;
    labels[1] = 1;
    const int k = 2 + static_cast<int>(util::uniform_index(rng, std::min<std::size_t>(n - 1, 9)));
    auto f = stratified_folds(labels, k, trial);
    std::vector<int> size(static_cast<std::size_t>(k), 0), ones(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++size.at(static_cast<std::size_t>(f[i]));
      ones[static_cast<std::size_t>(f[i])] += labels[i];
    }
    EXPECT_LE(*std::max_element(size.begin(), size.end()) - *std::min_element(size.begin(), size.end()), 1);
    EXPECT_LE(*std::max_element(ones.begin(), ones.end()) - *std::min_element(ones.begin(), ones.end()), 1);
  }
}

TEST(KFold, MiniCorpusIsSeparable) {
  ASSERT_EQ(mini().size(), 40u);
  models::PipelineConfig cfg;
  for (const char* clf : {"svm", "knn", "rf"}) {
    cfg.classifier = clf;
    auto r = kfold_cv(refs(mini()), 5, cfg, dict());
    EXPECT_GE(r.mean_accuracy, 0.9) << clf;
    EXPECT_EQ(r.fold_accuracies.size(), 5u);
  }
}

TEST(KFold, BitReproducibleAcrossRunsAndJobs) {
  models::PipelineConfig cfg;
  cfg.classifier = "rf";
  cfg.trees = 20;
  auto a = kfold_cv(refs(mini()), 5, cfg, dict());
  cfg.jobs = 4;
  auto b = kfold_cv(refs(mini()), 5, cfg, dict());
  EXPECT_EQ(a.fold_accuracies, b.fold_accuracies);
  EXPECT_EQ(cv_report_csv(a), cv_report_csv(b));
}

TEST(KFold, EachFoldModelSeesOnlyItsTrainingDocuments) {
  models::PipelineConfig cfg;
  cfg.features = "baseline";
  cfg.min_df = 1;
  const auto pages = refs(mini());
  const auto labels = models::page_labels(pages);
  const auto fold = stratified_folds(labels, 5, cfg.seed);
  auto report = kfold_cv(pages, 5, cfg, dict());
  for (int f = 0; f < 5; ++f) {
    PageRefs train, test;
    for (std::size_t i = 0; i < pages.size(); ++i) (fold[i] == f ? test : train).push_back(pages[i]);
    auto pipe = models::fit_pipeline(train, cfg, dict());
    // vocabulary is exactly the training vocabulary
    models::TfidfVectorizer own;
    own.min_df = 1;
    std::vector<std::string> texts;
    for (const auto* p : train) texts.push_back(featureset::granularity_text(p->article, cfg.granularity));
    own.fit(texts);
    EXPECT_EQ(pipe.tfidf->vocabulary, own.vocabulary);
    // standardizer ignores the test fold
    auto dense = models::dense_columns(train, pipe.schema, dict());
    EXPECT_EQ(pipe.standardizer, featureset::standardize_fit(dense));
    // reported fold accuracy is reproduced from the training fold alone
    EXPECT_EQ(report.fold_accuracies[static_cast<std::size_t>(f)], train_test_accuracy(train, test, cfg, dict()));
  }
}

TEST(Temporal, SixYearsGiveThirtyCellsAndSixMeans) {
  std::vector<featureset::PageFeatures> pages = mini();
  std::map<Label, int> seen;
  for (auto& p : pages) p.year = 2011 + seen[*p.label]++ % 6;
  models::PipelineConfig cfg;
  cfg.classifier = "knn";
  cfg.k = 1;
  auto r = temporal_eval(refs(pages), cfg, dict());
  EXPECT_EQ(r.years.size(), 6u);
  EXPECT_EQ(r.cells.size(), 30u);
  EXPECT_EQ(r.filled(), 30u);
  ASSERT_EQ(r.means.size(), 6u);
  for (int a : r.years) {
    ASSERT_TRUE(r.means[a]);
    double sum = 0;
    for (int b : r.years)
      if (a != b) sum += *r.cells[{a, b}];
    EXPECT_NEAR(*r.means[a], sum / 5.0, 1e-12);
  }
  // each cell comes from a model trained on its year only
  std::map<int, PageRefs> by;
  for (const auto& p : pages) by[p.year].push_back(&p);
  EXPECT_EQ((*r.cells[{2012, 2015}]), train_test_accuracy(by[2012], by[2015], cfg, dict()));
  auto csv = temporal_report_csv(r);
  EXPECT_TRUE(starts_with_config(csv));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2 + 30 + 6);
}

TEST(Temporal, SingleClassYearIsSkippedWithWarning) {
  std::vector<featureset::PageFeatures> pages = mini();
  for (auto& p : pages) p.year = p.label == Label::reliable ? 2020 : (p.year == 2013 ? 2021 : 2022);
  for (auto& p : pages)
    if (p.year == 2021 && p.doc_id.back() % 2 == 0) p.year = 2022;
  models::PipelineConfig cfg;
  auto r = temporal_eval(refs(pages), cfg, dict());
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_LT(r.filled(), r.cells.size());
}

TEST(Temporal, DriftFreeYearsMatchWithinYearAccuracy) {
  models::PipelineConfig cfg;
  auto y13 = year_of(mini(), 2013), y14 = year_of(mini(), 2014);
  ASSERT_FALSE(y13.empty());
  const double within = kfold_cv(y13, 5, cfg, dict()).mean_accuracy;
  const double across = train_test_accuracy(y13, y14, cfg, dict());
  EXPECT_NEAR(across, within, 0.1);
}

TEST(CrossDomain, IdenticalCorpusIsAtLeastCvAndOverlapRejected) {
  std::vector<featureset::PageFeatures> copy = mini();
  for (auto& p : copy) p.doc_id += "-copy";
  models::PipelineConfig cfg;
  auto r = cross_domain_eval(refs(mini()), refs(copy), {"svm", "knn", "rf"}, cfg, dict(), "mini", "mini-copy");
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) {
    models::PipelineConfig c = cfg;
    c.classifier = row.classifier;
    EXPECT_GE(row.tag, kfold_cv(refs(mini()), 5, c, dict()).mean_accuracy) << row.classifier;
    c.features = "baseline";
    EXPECT_GE(row.baseline, kfold_cv(refs(mini()), 5, c, dict()).mean_accuracy) << row.classifier;
  }
  EXPECT_TRUE(starts_with_config(cross_domain_report_csv(r)));
  EXPECT_THROW(cross_domain_eval(refs(mini()), refs(mini()), {"svm"}, cfg, dict()), DataError);
}

TEST(Grid, FifteenCellsAndMarkupRowIdentical) {
  std::vector<featureset::GroupSet> rows;
  for (const char* s : {"W", "L", "N", "R", "L-N-R-W"}) rows.push_back(featureset::parse_groups(s));
  models::PipelineConfig cfg;
  auto cells = feature_grid_eval(refs(mini()), rows, {Granularity::H, Granularity::C, Granularity::HC}, 5, cfg, dict());
  ASSERT_EQ(cells.size(), 15u);
  std::vector<const GridCell*> w;
  for (const auto& c : cells)
    if (featureset::groups_label(c.groups) == "W") w.push_back(&c);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0]->report.fold_accuracies, w[1]->report.fold_accuracies);
  EXPECT_EQ(w[0]->report.fold_accuracies, w[2]->report.fold_accuracies);
  auto csv = grid_report_csv(cells, config_echo(cfg));
  EXPECT_TRUE(starts_with_config(csv));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 1 + 5);
}

TEST(Terms, CountsStopwordsAndTies) {
  auto uni = term_frequency_report({{2016, "trump trump vote"}}, 10, 1);
  ASSERT_EQ(uni.by_year.at(2016).size(), 2u);
  EXPECT_EQ(uni.by_year.at(2016)[0].term, "trump");
  EXPECT_EQ(uni.by_year.at(2016)[0].count, 2);
  EXPECT_EQ(uni.by_year.at(2016)[1].term, "vote");
  EXPECT_EQ(uni.by_year.at(2016)[1].count, 1);

  auto bi = term_frequency_report({{2016, "trump trump vote"}}, 10, 2);
  std::map<std::string, long> m;
  for (const auto& t : bi.by_year.at(2016)) m[t.term] = t.count;
  EXPECT_EQ(m, (std::map<std::string, long>{{"trump", 2}, {"trump trump", 1}, {"trump vote", 1}, {"vote", 1}}));

  auto r = term_frequency_report({{2015, "The senate and the House. The end of the vote."}, {2016, "the zeta alpha"}}, 50);
  for (const auto& [year, terms] : r.by_year)
    for (const auto& t : terms) {
      EXPECT_EQ(t.term.find("the"), std::string::npos) << t.term;
      EXPECT_NE(t.term, "and");
    }
  // equal counts come out in lexicographic order
  const auto& y16 = r.by_year.at(2016);
  ASSERT_EQ(y16.size(), 3u);
  EXPECT_EQ(y16[0].term, "alpha");
  EXPECT_EQ(y16[1].term, "zeta");
  EXPECT_EQ(y16[2].term, "zeta alpha");
  EXPECT_TRUE(starts_with_config(term_report_csv(r, nlohmann::ordered_json{{"top", 50}})));
}

TEST(Terms, BigramsStopAtSentenceBoundaries) {
  auto r = term_frequency_report({{2014, "Senate votes. Budget passes."}}, 10);
  std::set<std::string> terms;
  for (const auto& t : r.by_year.at(2014)) terms.insert(t.term);
  EXPECT_TRUE(terms.count("senate votes"));
  EXPECT_FALSE(terms.count("votes budget"));
}
