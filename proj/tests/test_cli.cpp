#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "support/paths.hpp"
#include "veritag/cli/app.hpp"
#include "veritag/featureset/matrix_io.hpp"
#include "veritag/util/csv.hpp"
#include "veritag/util/strings.hpp"

using namespace veritag;
namespace fs = std::filesystem;

namespace {

const std::string mini_corpus = VERITAG_SOURCE_DIR "/data/mini_corpus";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "veritag");
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

int shell(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::size_t data_lines(const std::string& csv) {
  std::size_t n = 0;
  for (const auto& line : util::split(csv, '\n'))
    if (!line.empty() && line[0] != '#') ++n;
  return n - 1;  // header
}

}  // namespace

TEST(Cli, VersionAndUsageErrors) {
  auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(contains(v.out, version_string));
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"evaluate", "--protocol", "bogus", "--corpus", mini_corpus}).code, 1);
  EXPECT_EQ(run({"extract", "--corpus", mini_corpus, "--granularity", "X", "--out", "/dev/null"}).code, 1);
}

TEST(Cli, MissingCorpusIsDataErrorNamingThePath) {
  auto r = run({"extract", "--corpus", "/no/such/corpus", "--out", "/dev/null"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "/no/such/corpus")) << r.err;
}

TEST(Cli, UnknownConfigKeyIsUsageError) {
  vt_test::TempDir dir("cli-config");
  util::write_file(dir / "cfg.json", R"({"seed": 1, "sede": 2})");
  auto r = run({"evaluate", "--config", dir / "cfg.json", "--corpus", mini_corpus});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "sede")) << r.err;
  util::write_file(dir / "bad.json", R"({"folds": "five"})");
  EXPECT_EQ(run({"evaluate", "--config", dir / "bad.json", "--corpus", mini_corpus}).code, 1);
}

TEST(Cli, IngestReportsAndChecks) {
  auto r = run({"ingest", "--corpus", mini_corpus, "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["documents"], 40);
  EXPECT_EQ(j["reliable"], 20);
  EXPECT_TRUE(j["missing_html"].empty());

  vt_test::TempDir dir("cli-ingest");
  fs::copy(mini_corpus, dir.str(), fs::copy_options::recursive);
  fs::remove(dir / "pages/m003.html");
  auto broken = run({"ingest", "--corpus", dir.str(), "--check"});
  EXPECT_EQ(broken.code, 2);
  EXPECT_EQ(nlohmann::json::parse(broken.out)["missing_html"][0], "m003");
}

TEST(Cli, FullPipelineOnMiniCorpus) {
  vt_test::TempDir dir("cli-pipeline");
  auto e = run({"extract", "--corpus", mini_corpus, "--pruning", "paper", "--out", dir / "features.csv"});
  ASSERT_EQ(e.code, 0) << e.err;
  auto mat = featureset::read_feature_matrix(dir / "features.csv");
  EXPECT_EQ(mat.rows.size(), 40u);
  EXPECT_EQ(mat.schema.pruning, "paper");

  auto s = run({"select", "--features", dir / "features.csv", "--trees", "50", "--out", dir / "selected.json"});
  ASSERT_EQ(s.code, 0) << s.err;
  auto kept = featureset::load_schema(dir / "selected.json");
  EXPECT_GT(kept.size(), 0u);
  EXPECT_LE(kept.size(), mat.schema.size());
  auto report = util::read_file(dir / "selected.json.importance.csv");
  EXPECT_EQ(data_lines(report), mat.schema.size());

  for (const char* clf : {"svm", "knn", "rf"}) {
    auto t = run({"train", "--classifier", clf, "--features", dir / "features.csv", "--out", dir / "model.json"});
    ASSERT_EQ(t.code, 0) << t.err;
    auto p = run({"predict", "--model", dir / "model.json", "--corpus", mini_corpus});
    ASSERT_EQ(p.code, 0) << p.err;
    EXPECT_EQ(data_lines(p.out), 40u);
    EXPECT_EQ(util::split(p.out, '\n').front(), "doc_id,prediction,score");
    auto viaMatrix = run({"predict", "--model", dir / "model.json", "--features", dir / "features.csv"});
    // the matrix stores 9 significant digits: labels agree exactly, scores closely
    auto a = util::parse_csv(p.out), b = util::parse_csv(viaMatrix.out);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
      EXPECT_EQ(a[i][0], b[i][0]);
      EXPECT_EQ(a[i][1], b[i][1]) << clf << " " << a[i][0];
      EXPECT_NEAR(std::stod(a[i][2]), std::stod(b[i][2]), 1e-6);
    }
  }

  // training on the computed selection
  auto t = run({"train", "--classifier", "svm", "--corpus", mini_corpus, "--pruning", "computed:" + (dir / "selected.json"),
                "--out", dir / "sel_model.json"});
  ASSERT_EQ(t.code, 0) << t.err;
  auto p = run({"predict", "--model", dir / "sel_model.json", "--corpus", mini_corpus, "--out", dir / "pred.csv"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(data_lines(util::read_file(dir / "pred.csv")), 40u);

  auto b = run({"train", "--classifier", "baseline-svm", "--corpus", mini_corpus, "--min-df", "1", "--out",
                dir / "base.json"});
  ASSERT_EQ(b.code, 0) << b.err;
  auto bp = run({"predict", "--model", dir / "base.json", "--corpus", mini_corpus});
  ASSERT_EQ(bp.code, 0) << bp.err;
  EXPECT_EQ(data_lines(bp.out), 40u);
  EXPECT_EQ(run({"predict", "--model", dir / "base.json", "--features", dir / "features.csv"}).code, 1);
}

TEST(Cli, CorruptModelIsDataError) {
  vt_test::TempDir dir("cli-corrupt");
  util::write_file(dir / "m.json", "{\"format_version\":1,\"payl");
  auto r = run({"predict", "--model", dir / "m.json", "--corpus", mini_corpus});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "checksum")) << r.err;
}

TEST(Cli, OutputsDoNotDependOnJobs) {
  vt_test::TempDir dir("cli-jobs");
  ASSERT_EQ(run({"extract", "--corpus", mini_corpus, "--jobs", "1", "--out", dir / "a.csv"}).code, 0);
  ASSERT_EQ(run({"extract", "--corpus", mini_corpus, "--jobs", "4", "--out", dir / "b.csv"}).code, 0);
  EXPECT_EQ(util::read_file(dir / "a.csv"), util::read_file(dir / "b.csv"));

  for (const char* protocol : {"cv", "temporal"}) {
    auto one = run({"evaluate", "--protocol", protocol, "--corpus", mini_corpus, "--classifier", "rf", "--trees", "20",
                    "--jobs", "1"});
    auto four = run({"evaluate", "--protocol", protocol, "--corpus", mini_corpus, "--classifier", "rf", "--trees", "20",
                     "--jobs", "4"});
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out, four.out) << protocol;
  }
  ASSERT_EQ(run({"select", "--features", dir / "a.csv", "--trees", "30", "--jobs", "1", "--out", dir / "s1.json"}).code, 0);
  ASSERT_EQ(run({"select", "--features", dir / "a.csv", "--trees", "30", "--jobs", "4", "--out", dir / "s4.json"}).code, 0);
  EXPECT_EQ(util::read_file(dir / "s1.json.importance.csv"), util::read_file(dir / "s4.json.importance.csv"));
}

TEST(Cli, ReportsEchoResolvedConfig) {
  vt_test::TempDir dir("cli-echo");
  util::write_file(dir / "cfg.json", R"({"classifier": "knn", "k": 3, "folds": 4})");
  auto r = run({"evaluate", "--config", dir / "cfg.json", "--corpus", mini_corpus, "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto first = util::split(r.out, '\n').front();
  ASSERT_EQ(first.rfind("# config: ", 0), 0u);
  auto echo = nlohmann::json::parse(first.substr(10));
  EXPECT_EQ(echo["classifier"], "knn");
  EXPECT_EQ(echo["k"], 1);  // flag beats file
  EXPECT_EQ(echo["folds"], 4);
  EXPECT_FALSE(echo.contains("jobs"));
  EXPECT_EQ(data_lines(r.out), 4u + 1u);  // folds plus the mean row

  auto terms = run({"report-terms", "--corpus", mini_corpus, "--top", "3"});
  ASSERT_EQ(terms.code, 0) << terms.err;
  EXPECT_EQ(terms.out.rfind("# config: ", 0), 0u);
  EXPECT_EQ(data_lines(terms.out), 6u);  // two years, three terms each
}

TEST(Cli, GridAndCrossDomain) {
  vt_test::TempDir dir("cli-grid");
  util::write_file(dir / "cfg.json", R"({"grid_rows": ["W", "R"], "grid_granularities": ["H", "HC"]})");
  auto g = run({"evaluate", "--protocol", "grid", "--config", dir / "cfg.json", "--corpus", mini_corpus});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(data_lines(g.out), 2u);
  auto x = run({"evaluate", "--protocol", "cross-domain", "--corpus", mini_corpus, "--test-corpus",
                VERITAG_SOURCE_DIR "/data/drift_corpus"});
  ASSERT_EQ(x.code, 0) << x.err;
  EXPECT_EQ(data_lines(x.out), 3u);
  EXPECT_EQ(run({"evaluate", "--protocol", "cross-domain", "--corpus", mini_corpus}).code, 1);
}

TEST(Cli, SampleAndPoliticalFilter) {
  vt_test::TempDir dir("cli-corpus-ops");
  auto s = run({"sample", "--corpus", mini_corpus, "--cap", "2", "--seed", "3", "--out", dir / "sampled"});
  ASSERT_EQ(s.code, 0) << s.err;
  auto j = nlohmann::json::parse(run({"ingest", "--corpus", dir / "sampled", "--check"}).out);
  EXPECT_EQ(j["documents"], 16);  // 4 sites x 2 years x 2

  auto f = run({"filter-political", "--train-topics", vt_test::data_path("topics.jsonl"), "--model", dir / "filter.json",
                "--corpus", mini_corpus, "--out", dir / "political"});
  ASSERT_EQ(f.code, 0) << f.err;
  auto scores = util::read_file(dir / "political/political_scores.csv");
  EXPECT_EQ(data_lines(scores), 40u);
  auto reuse = run({"filter-political", "--model", dir / "filter.json", "--corpus", mini_corpus, "--out",
                    dir / "political2"});
  ASSERT_EQ(reuse.code, 0) << reuse.err;
  EXPECT_EQ(util::read_file(dir / "political2/political_scores.csv"), scores);
  EXPECT_EQ(run({"filter-political", "--model", dir / "missing.json", "--corpus", mini_corpus, "--out", dir / "x"}).code,
            2);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = VERITAG_CLI_BINARY;
  EXPECT_EQ(shell(bin + " --version > /dev/null"), 0);
  EXPECT_EQ(shell(bin + " extract --corpus /no/such/dir --out /dev/null 2> /dev/null"), 2);
  EXPECT_EQ(shell(bin + " nonsense 2> /dev/null > /dev/null"), 1);
}

TEST(Cli, FixtureGeneratorReproducesBundledData) {
  vt_test::TempDir dir("fixtures");
  ASSERT_EQ(shell(std::string(VERITAG_MAKE_FIXTURES) + " " + dir.str() + " > /dev/null"), 0);
  const fs::path bundled = VERITAG_SOURCE_DIR "/data";
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(bundled)) {
    if (!e.is_regular_file()) continue;
    auto rel = fs::relative(e.path(), bundled).string();
    ASSERT_TRUE(fs::exists(dir / rel)) << rel;
    EXPECT_EQ(util::read_file(dir / rel), util::read_file(e.path().string())) << rel;
    ++files;
  }
  std::size_t generated = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir.str())) generated += e.is_regular_file();
  EXPECT_EQ(generated, files);
  EXPECT_EQ(files, 2u * 2u + 40u + 80u);
}
