#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "support/paths.hpp"
#include "veritag/featureset/extract.hpp"
#include "veritag/featureset/matrix_io.hpp"
#include "veritag/featureset/pruning.hpp"
#include "veritag/featureset/schema.hpp"
#include "veritag/featureset/standardizer.hpp"
#include "veritag/markup/html.hpp"
#include "veritag/util/random.hpp"
#include "veritag/util/strings.hpp"

using namespace veritag;
using namespace veritag::featureset;

namespace {

const ExtractionContext& ctx() {
  static const ExtractionContext c = ExtractionContext::defaults();
  return c;
}

const GroupSet all = {Group::N, Group::L, Group::R, Group::W};

double value_of(const FeatureVector& v, const FeatureSchema& s, const std::string& name) {
  auto i = s.index_of(name);
  if (!i) throw std::runtime_error("no feature " + name);
  return v.values[*i];
}

const char* one_sentence_page =
    "<html><head><title>Cats</title></head><body><p>The cat sat on the mat.</p></body></html>";

}  // namespace

TEST(Schema, FullSchemaLayout) {
  auto s = full_schema(all, Granularity::HC, *ctx().dictionary);
  EXPECT_EQ(s.size(), 33 + ctx().dictionary->categories.size() + 19 + 14);
  EXPECT_EQ(s.names.front(), "N.WDT");
  EXPECT_EQ(s.names.back(), "W.AU");
  std::set<std::string> unique(s.names.begin(), s.names.end());
  EXPECT_EQ(unique.size(), s.size());
  EXPECT_NO_THROW(s.validate());
  auto bad = s;
  bad.groups = {Group::N};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Schema, JsonRoundTripAndHash) {
  auto s = full_schema({Group::R, Group::W}, Granularity::H, *ctx().dictionary);
  s.pruning = "paper";
  auto back = schema_from_json(nlohmann::json::parse(schema_file_text(s)));
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.hash(), s.hash());
  auto other = s;
  other.names.pop_back();
  EXPECT_NE(other.hash(), s.hash());
  EXPECT_EQ(groups_label(parse_groups("W-L-N")), "L-N-W");
  EXPECT_THROW(parse_groups("Q"), UsageError);
  EXPECT_THROW(parse_granularity("X"), UsageError);
}

TEST(Extract, EmptyArticleGivesZeroLinguisticVector) {
  const GroupSet text = {Group::N, Group::L, Group::R};
  for (auto g : {Granularity::H, Granularity::C, Granularity::HC}) {
    auto v = extract_tag_features(markup::Article{}, markup::parse_html(""), g, text, ctx());
    EXPECT_EQ(v.values.size(), full_schema(text, g, *ctx().dictionary).size());
    for (double x : v.values) EXPECT_EQ(x, 0.0);
  }
}

TEST(Extract, MarkupGroupIdenticalAcrossGranularities) {
  const GroupSet w = {Group::W};
  auto tree = markup::parse_html(util::read_file(vt_test::data_path("markup/12_realistic.html")));
  auto article = markup::extract_article(tree);
  auto h = extract_tag_features(article, tree, Granularity::H, w, ctx()).values;
  EXPECT_EQ(extract_tag_features(article, tree, Granularity::C, w, ctx()).values, h);
  EXPECT_EQ(extract_tag_features(article, tree, Granularity::HC, w, ctx()).values, h);
  EXPECT_EQ(h.size(), 14u);
}

TEST(Extract, OneSentencePageMatchesModuleOracles) {
  auto p = page_features("one", one_sentence_page, {Granularity::H, Granularity::C, Granularity::HC}, ctx());
  EXPECT_EQ(p.article.headline, "Cats");
  EXPECT_EQ(p.article.content, "The cat sat on the mat.");
  auto schema = full_schema(all, Granularity::C, *ctx().dictionary);
  auto v = assemble(p, Granularity::C, all);
  ASSERT_EQ(v.values.size(), schema.size());
  EXPECT_EQ(value_of(v, schema, "N.DT"), 2);
  EXPECT_EQ(value_of(v, schema, "N.NN"), 2);
  EXPECT_EQ(value_of(v, schema, "N.VBD"), 1);
  EXPECT_EQ(value_of(v, schema, "N.IN"), 1);
  EXPECT_EQ(value_of(v, schema, "R.W"), 6);
  EXPECT_EQ(value_of(v, schema, "R.STC"), 1);
  EXPECT_EQ(value_of(v, schema, "R.SY"), 6);
  EXPECT_EQ(value_of(v, schema, "R.CH"), 18);
  EXPECT_NEAR(value_of(v, schema, "R.FRI"), 116.145, 1e-9);
  EXPECT_NEAR(value_of(v, schema, "R.FKI"), -1.45, 1e-9);
  EXPECT_EQ(value_of(v, schema, "R.LX"), 5);
  EXPECT_EQ(value_of(v, schema, "W.BT"), 4);  // html title body p
  EXPECT_EQ(value_of(v, schema, "W.MT"), 1);  // head
  EXPECT_EQ(value_of(v, schema, "W.AU"), 0);

  // HC text is headline, newline, content: one more word and one more sentence
  auto hc = assemble(p, Granularity::HC, {Group::R});
  auto rs = full_schema({Group::R}, Granularity::HC, *ctx().dictionary);
  EXPECT_EQ(value_of(hc, rs, "R.W"), 7);
  EXPECT_EQ(value_of(hc, rs, "R.STC"), 2);
  EXPECT_EQ(granularity_text(p.article, Granularity::HC), "Cats\nThe cat sat on the mat.");
}

TEST(Extract, MissingGranularityIsInvariantError) {
  auto p = page_features("x", one_sentence_page, {Granularity::H}, ctx());
  EXPECT_THROW(assemble(p, Granularity::C, all), InvariantError);
  EXPECT_NO_THROW(assemble(p, Granularity::C, {Group::W}));
}

TEST(Extract, CorpusExtractionIsOrderIndependentAndJobIndependent) {
  std::vector<corpus::RawDocument> docs;
  for (const auto& f : {"02_basic.html", "06_author_meta.html", "12_realistic.html", "07_byline.html"}) {
    corpus::RawDocument d;
    d.id = f;
    d.html = util::read_file(vt_test::data_path(std::string("markup/") + f));
    docs.push_back(d);
  }
  const std::vector<Granularity> grans = {Granularity::HC};
  auto a = extract_corpus(docs, grans, ctx(), 1);
  std::vector<corpus::RawDocument> reversed(docs.rbegin(), docs.rend());
  auto b = extract_corpus(reversed, grans, ctx(), 3);
  auto schema = full_schema(all, Granularity::HC, *ctx().dictionary);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto va = assemble(a[i], Granularity::HC, all);
    auto vb = assemble(b[docs.size() - 1 - i], Granularity::HC, all);
    EXPECT_EQ(va.doc_id, vb.doc_id);
    EXPECT_EQ(va.values, vb.values);
    for (double x : va.values) EXPECT_TRUE(std::isfinite(x));
  }
}

TEST(Pruning, HeadlineDropsVbd) {
  auto s = full_schema(all, Granularity::H, *ctx().dictionary);
  ASSERT_TRUE(s.index_of("N.VBD"));
  auto r = apply_paper_pruning(s);
  EXPECT_FALSE(r.schema.index_of("N.VBD"));
  EXPECT_FALSE(r.schema.index_of("R.MSI"));
  EXPECT_FALSE(r.schema.index_of("R.CW.cap"));
  EXPECT_FALSE(r.schema.index_of("R.CW.complex"));
  EXPECT_FALSE(r.schema.index_of("W.TT"));
  EXPECT_EQ(r.schema.pruning, "paper");
}

TEST(Pruning, NoListedFeatureMeansUnchanged) {
  FeatureSchema s;
  s.granularity = Granularity::C;
  s.groups = {Group::R};
  s.names = {"R.FRI", "R.W", "R.PS"};
  auto r = apply_paper_pruning(s);
  EXPECT_EQ(r.schema.names, s.names);
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(r.warnings.size(), paper_pruning_list(Granularity::C).size());
}

TEST(Pruning, MarkupKeepSetExact) {
  for (auto g : {Granularity::H, Granularity::C, Granularity::HC}) {
    auto r = apply_paper_pruning(full_schema(all, g, *ctx().dictionary));
    std::set<std::string> w;
    for (const auto& n : r.schema.names)
      if (n[0] == 'W') w.insert(n.substr(2));
    EXPECT_EQ(w, (std::set<std::string>{"IT", "AVT", "AU", "LKT", "ADS", "ST", "BT"}));
  }
}

TEST(Pruning, SetAlgebraIsExact) {
  for (auto g : {Granularity::H, Granularity::C, Granularity::HC}) {
    auto in = full_schema(all, g, *ctx().dictionary);
    auto r = apply_paper_pruning(in);
    std::set<std::string> expected_removed;
    for (const auto& n : in.names) {
      bool listed = false;
      for (auto e : paper_pruning_list(g)) listed = listed || pruning_entry_matches(e, n);
      bool markup_dropped = n[0] == 'W' && !paper_markup_keep().count(std::string_view(n).substr(2));
      if (listed || markup_dropped) expected_removed.insert(n);
    }
    EXPECT_EQ(std::set<std::string>(r.removed.begin(), r.removed.end()), expected_removed);
    EXPECT_EQ(r.removed.size() + r.schema.size(), in.size());
    for (const auto& n : r.schema.names) EXPECT_FALSE(expected_removed.count(n)) << n;
    // survivors keep their relative order
    std::size_t pos = 0;
    for (const auto& n : r.schema.names) {
      auto at = std::find(in.names.begin() + static_cast<std::ptrdiff_t>(pos), in.names.end(), n);
      ASSERT_NE(at, in.names.end());
      pos = static_cast<std::size_t>(at - in.names.begin()) + 1;
    }
  }
}

TEST(Pruning, EntryMatchingRules) {
  EXPECT_TRUE(pruning_entry_matches("CW", "R.CW.cap"));
  EXPECT_TRUE(pruning_entry_matches("DT", "N.DT"));
  EXPECT_FALSE(pruning_entry_matches("DT", "N.WDT"));
  EXPECT_FALSE(pruning_entry_matches("TO", "N.TOTAL"));
  EXPECT_TRUE(pruning_entry_matches("PC.home", "L.PC.home"));
}

TEST(Pruning, ComputedKeepsOnlyListedInOrder) {
  auto in = full_schema({Group::R}, Granularity::HC, *ctx().dictionary);
  FeatureSchema keep = in;
  keep.names = {"R.PS", "R.FRI", "R.NOPE"};
  auto out = apply_computed_pruning(in, keep, "sel.json");
  EXPECT_EQ(out.names, (std::vector<std::string>{"R.FRI", "R.PS"}));
  EXPECT_EQ(out.pruning, "computed:sel.json");
}

TEST(Standardizer, Examples) {
  auto p = standardize_fit({{1.0}, {3.0}});
  EXPECT_EQ(p.mean[0], 2.0);
  EXPECT_EQ(p.stddev[0], 1.0);
  EXPECT_EQ(standardize_apply(p, std::vector<std::vector<double>>{{1.0}, {3.0}}),
            (std::vector<std::vector<double>>{{-1.0}, {1.0}}));
  auto c = standardize_fit({{5.0}, {5.0}, {5.0}});
  EXPECT_TRUE(c.zero_variance[0]);
  EXPECT_EQ(standardize_apply(c, std::vector<double>{5.0}), std::vector<double>{0.0});
  EXPECT_EQ(standardize_apply(c, std::vector<double>{1e300}), std::vector<double>{0.0});
  EXPECT_THROW(standardize_fit({}), DataError);
  EXPECT_THROW(standardize_apply(p, std::vector<double>{1.0, 2.0}), DataError);
}

TEST(Standardizer, RandomMatricesMeanZeroUnitStdAndInverse) {
  util::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + util::uniform_index(rng, 60), d = 1 + util::uniform_index(rng, 8);
    std::vector<std::vector<double>> X(n, std::vector<double>(d));
    for (auto& row : X)
      for (std::size_t j = 0; j < d; ++j)
        row[j] = j == 0 ? 7.25 : (util::uniform_real(rng) - 0.5) * std::pow(10.0, static_cast<double>(j % 4));
    auto p = standardize_fit(X);
    auto Z = standardize_apply(p, X);
    EXPECT_TRUE(p.zero_variance[0]);
    for (std::size_t j = 0; j < d; ++j) {
      double mean = 0, var = 0;
      for (const auto& r : Z) mean += r[j];
      mean /= static_cast<double>(n);
      for (const auto& r : Z) var += (r[j] - mean) * (r[j] - mean);
      const double sd = std::sqrt(var / static_cast<double>(n));
      EXPECT_LT(std::abs(mean), 1e-9);
      if (p.zero_variance[j]) EXPECT_EQ(sd, 0.0);
      else EXPECT_NEAR(sd, 1.0, 1e-9);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto back = standardize_inverse(p, Z[i]);
      for (std::size_t j = 0; j < d; ++j) EXPECT_NEAR(back[j], X[i][j], 1e-9 * std::max(1.0, std::abs(X[i][j])));
    }
    EXPECT_EQ(standardizer_from_json(to_json(p)), p);
  }
}

TEST(MatrixIo, CsvLayoutAndRoundTrip) {
  FeatureMatrix m;
  m.schema.groups = {Group::R};
  m.schema.granularity = Granularity::C;
  m.schema.names = {"R.FRI", "R.W"};
  m.rows.push_back({"d1", {1.0 / 3.0, 6}, Label::reliable});
  m.rows.push_back({"d,2", {-0.0, 1e-12}, Label::unreliable});
  auto text = feature_matrix_csv(m);
  EXPECT_EQ(text, "doc_id,R.FRI,R.W,label\nd1,0.333333333,6,reliable\n\"d,2\",0,1e-12,unreliable\n");

  vt_test::TempDir dir("matrix");
  write_feature_matrix(dir / "m.csv", m);
  auto back = read_feature_matrix(dir / "m.csv");
  EXPECT_EQ(back.schema, m.schema);
  ASSERT_EQ(back.rows.size(), 2u);
  EXPECT_EQ(back.rows[1].doc_id, "d,2");
  EXPECT_EQ(back.rows[0].label, Label::reliable);
  EXPECT_NEAR(back.rows[0].values[0], 1.0 / 3.0, 1e-9);

  FeatureMatrix unlabeled = m;
  for (auto& r : unlabeled.rows) r.label.reset();
  EXPECT_EQ(util::split(feature_matrix_csv(unlabeled), '\n').front(), "doc_id,R.FRI,R.W");
  EXPECT_THROW(parse_feature_matrix("doc_id,R.FRI\nx,notanumber\n"), DataError);
}
