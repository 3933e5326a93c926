#include <algorithm>
#include <cmath>
#include <functional>
#include <tuple>
#include <map>

#include <gtest/gtest.h>

#include "support/paths.hpp"
#include "veritag/corpus/manifest.hpp"
#include "veritag/corpus/political_filter.hpp"
#include "veritag/corpus/sampling.hpp"
#include "veritag/util/strings.hpp"

using namespace veritag;
using namespace veritag::corpus;
using vt_test::TempDir;

namespace {

const SiteLabels two_sites = {{"a.com", Label::unreliable}, {"b.org", Label::reliable}};

std::string record(const std::string& id, const std::string& site, const std::string& label, int year = 2016) {
  return R"({"id":")" + id + R"(","url":"http://)" + site + "/" + id + R"(","site":")" + site + R"(","label":")" +
         label + R"(","year":)" + std::to_string(year) + R"(,"html_path":"pages/)" + id + R"(.html"})" + "\n";
}

void expect_data_error(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
    FAIL() << "expected DataError containing '" << needle << "'";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Manifest, ThreeDistinctIdsLoadInOrder) {
  auto text = record("x1", "a.com", "unreliable") + record("x2", "b.org", "reliable") + record("x3", "a.com", "unreliable");
  auto entries = parse_manifest_lines(text, two_sites, "m");
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].id, "x1");
  EXPECT_EQ(entries[1].label, Label::reliable);
  EXPECT_EQ(entries[2].html_path, "pages/x3.html");
}

TEST(Manifest, DuplicateIdNamesTheId) {
  auto text = record("a1", "a.com", "unreliable") + record("a1", "a.com", "unreliable");
  expect_data_error([&] { parse_manifest_lines(text, two_sites, "m"); }, "a1");
}

TEST(Manifest, LabelMismatchWithSiteTable) {
  expect_data_error([&] { parse_manifest_lines(record("q", "a.com", "reliable"), two_sites, "m"); }, "label mismatch");
}

TEST(Manifest, MalformedRecordReportsLineNumber) {
  auto text = record("ok", "a.com", "unreliable") + "{not json\n";
  expect_data_error([&] { parse_manifest_lines(text, two_sites, "m"); }, "m:2");
}

TEST(Manifest, YearOutsideRangeAndNonCanonicalSite) {
  expect_data_error([&] { parse_manifest_lines(record("y", "a.com", "unreliable", 1850), two_sites, "m"); }, "1850");
  expect_data_error([&] { parse_site_labels(R"({"A.com":"reliable"})", "labels"); }, "A.com");
}

TEST(Manifest, LoadFromDirectoryAndMissingDirectory) {
  TempDir dir("manifest");
  util::write_file(dir / "site_labels.json", R"({"a.com":"unreliable","b.org":"reliable"})");
  util::write_file(dir / "manifest.jsonl", record("p1", "a.com", "unreliable") + record("p2", "b.org", "reliable"));
  std::filesystem::create_directories(dir / "pages");
  util::write_file(dir / "pages/p1.html", "<p>one</p>");
  auto m = load_manifest(dir.str());
  EXPECT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(missing_html(m), std::vector<std::string>{"p2"});
  expect_data_error([] { load_manifest("/nonexistent/veritag/corpus"); }, "/nonexistent/veritag/corpus");
}

TEST(Projection, DirectProjectionAndUnknownSiteDropped) {
  std::vector<PageRecord> pages = {{"1", "u", "a.com", 2016, "", "<p/>"},
                                   {"2", "u", "a.com", 2016, "", "<p/>"},
                                   {"3", "u", "z.com", 2016, "", "<p/>"}};
  auto r = project_labels({{"a.com", Label::unreliable}}, pages);
  ASSERT_EQ(r.documents.size(), 2u);
  EXPECT_EQ(r.dropped_unknown_site, 1u);
  for (const auto& d : r.documents) EXPECT_EQ(d.label, Label::unreliable);
}

TEST(Projection, ManySitesAllLabeledBySite) {
  SiteLabels labels;
  std::vector<PageRecord> pages;
  for (int s = 0; s < 137; ++s) {
    std::string site = "site" + std::to_string(s) + ".com";
    labels[site] = s < 79 ? Label::unreliable : Label::reliable;
    for (int p = 0; p < 3; ++p) pages.push_back({site + std::to_string(p), "u", site, 2016, "", ""});
  }
  auto r = project_labels(labels, pages);
  ASSERT_EQ(r.documents.size(), pages.size());
  std::map<Label, int> count;
  for (const auto& d : r.documents) {
    EXPECT_EQ(d.label, labels.at(d.site));
    ++count[d.label];
  }
  EXPECT_EQ(count[Label::unreliable], 79 * 3);
  EXPECT_EQ(count[Label::reliable], 58 * 3);
}

TEST(Projection, Idempotent) {
  std::vector<PageRecord> pages = {{"1", "u", "a.com", 2016, "", "x"}, {"2", "u", "b.org", 2017, "", "y"}};
  auto once = project_labels(two_sites, pages);
  auto twice = project_labels(two_sites, once.documents);
  ASSERT_EQ(once.documents.size(), twice.documents.size());
  for (std::size_t i = 0; i < once.documents.size(); ++i) {
    EXPECT_EQ(once.documents[i].id, twice.documents[i].id);
    EXPECT_EQ(once.documents[i].label, twice.documents[i].label);
    EXPECT_EQ(once.documents[i].html, twice.documents[i].html);
  }
}

namespace {

PoliticalFilterModel two_doc_model() {
  return train_political_filter({{"tax vote senate", "politics"}, {"goal match league", "sports"}});
}

}  // namespace

TEST(PoliticalFilter, SenateVoteHandOracle) {
  // Independent computation: idf = ln(3/2) + 1, six-term vocabulary, alpha 1.
  auto d = apply_political_filter(two_doc_model(), "senate vote");
  EXPECT_TRUE(d.is_political);
  EXPECT_NEAR(d.score, 0.921815602523868, 1e-12);
}

TEST(PoliticalFilter, OutOfVocabularyAndEmptyGivePrior) {
  auto m = train_political_filter(
      {{"tax vote", "politics"}, {"senate bill", "politics"}, {"goal match", "sports"}, {"league cup", "sports"},
       {"new phone", "technology"}});
  auto oov = apply_political_filter(m, "zebra quantum");
  EXPECT_NEAR(oov.score, 2.0 / 5.0, 1e-12);
  EXPECT_FALSE(oov.empty_text);
  auto empty = apply_political_filter(m, "");
  EXPECT_NEAR(empty.score, 2.0 / 5.0, 1e-12);
  EXPECT_TRUE(empty.empty_text);
}

TEST(PoliticalFilter, DegenerateTrainingSets) {
  EXPECT_THROW(train_political_filter({}), DataError);
  EXPECT_THROW(train_political_filter({{"a b", "politics"}, {"c d", "politics"}}), DataError);
  EXPECT_THROW(apply_political_filter(PoliticalFilterModel{}, "x"), UsageError);
}

TEST(PoliticalFilter, PosteriorsSumToOne) {
  auto m = train_political_filter(load_topic_corpus(vt_test::data_path("topics.jsonl")));
  for (const char* text : {"", "senate", "goal goal goal", "the senate passed a law after the match",
                           "smartphone camera vote league tax", "unknown words only"}) {
    auto p = class_posteriors(m, text);
    double sum = 0;
    for (double x : p) {
      EXPECT_GE(x, 0.0);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9) << text;
  }
  double prior_sum = 0;
  for (double lp : m.class_log_priors) prior_sum += std::exp(lp);
  EXPECT_NEAR(prior_sum, 1.0, 1e-9);
}

TEST(PoliticalFilter, ScoreDependsOnlyOnTermMultiset) {
  auto m = train_political_filter(load_topic_corpus(vt_test::data_path("topics.jsonl")));
  auto a = apply_political_filter(m, "senate vote goal tax senate");
  auto b = apply_political_filter(m, "tax senate goal senate vote");
  EXPECT_EQ(a.score, b.score);
  auto copy = political_filter_from_json(to_json(m));
  EXPECT_EQ(apply_political_filter(copy, "senate vote goal").score, apply_political_filter(m, "senate vote goal").score);

  // training order permutes term discovery order; scores may move only by rounding
  auto examples = load_topic_corpus(vt_test::data_path("topics.jsonl"));
  std::reverse(examples.begin(), examples.end());
  auto reversed = train_political_filter(examples);
  EXPECT_EQ(reversed.vocabulary, m.vocabulary);
  for (const char* text : {"senate vote goal", "league tax camera", "the coach signed the budget"})
    EXPECT_NEAR(apply_political_filter(reversed, text).score, apply_political_filter(m, text).score, 1e-12) << text;
}

TEST(PoliticalFilter, ThresholdIsInclusive) {
  auto m = two_doc_model();
  const double score = apply_political_filter(m, "senate vote").score;
  EXPECT_TRUE(apply_political_filter(m, "senate vote", score).is_political);
  EXPECT_FALSE(apply_political_filter(m, "senate vote", 0.95).is_political);
}

namespace {

std::vector<RawDocument> site_pages(const std::string& site, int year, int n) {
  std::vector<RawDocument> out;
  for (int i = 0; i < n; ++i) {
    RawDocument d;
    d.id = site + "-" + std::to_string(year) + "-" + (i < 10 ? "0" : "") + std::to_string(i);
    d.site = site;
    d.year = year;
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(Sampling, CapAndUnderCapGroups) {
  auto docs = site_pages("big.com", 2016, 40);
  auto small = site_pages("small.com", 2016, 10);
  docs.insert(docs.end(), small.begin(), small.end());
  auto out = balanced_sample(docs, 32, 7);
  std::map<std::string, int> per_site;
  for (const auto& d : out) ++per_site[d.site];
  EXPECT_EQ(per_site["big.com"], 32);
  EXPECT_EQ(per_site["small.com"], 10);
}

TEST(Sampling, DeterministicSortedAndSeedOnlyChangesMembership) {
  std::vector<RawDocument> docs;
  for (int y : {2014, 2015})
    for (const char* s : {"a.com", "b.com", "c.com"}) {
      auto g = site_pages(s, y, 20 + y % 7);
      docs.insert(docs.end(), g.begin(), g.end());
    }
  auto a = balanced_sample(docs, 8, 1);
  auto b = balanced_sample(docs, 8, 1);
  auto c = balanced_sample(docs, 8, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].id, b[i].id);
  EXPECT_EQ(a.size(), c.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].id != c[i].id;
  EXPECT_TRUE(differs);
  for (std::size_t i = 1; i < a.size(); ++i) {
    auto key = [](const RawDocument& d) { return std::tie(d.site, d.year, d.id); };
    EXPECT_LT(key(a[i - 1]), key(a[i]));
  }
  EXPECT_THROW(balanced_sample(docs, 0, 1), UsageError);
}
