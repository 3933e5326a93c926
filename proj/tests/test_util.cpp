#include <atomic>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "veritag/label.hpp"
#include "veritag/util/csv.hpp"
#include "veritag/util/hash.hpp"
#include "veritag/util/numeric.hpp"
#include "veritag/util/parallel.hpp"
#include "veritag/util/random.hpp"
#include "veritag/util/strings.hpp"

using namespace veritag;

TEST(Strings, SplitTrimCollapse) {
  EXPECT_EQ(util::split("a,b,,c", ','), (std::vector<std::string>{"a", "b", "", "c"}));
  EXPECT_EQ(util::split_ws("  a \t b\n"), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(util::trim("  x y  "), "x y");
  EXPECT_EQ(util::to_lower("MiXeD"), "mixed");
  EXPECT_TRUE(util::iequals("Author", "aUTHOR"));
}

TEST(Strings, WordListSkipsCommentsAndBlanks) {
  EXPECT_EQ(util::parse_word_list("# header\nthe\n\n  and  \n"), (std::vector<std::string>{"the", "and"}));
}

TEST(Strings, SanitizeReplacesInvalidUtf8) {
  std::string bad = "ok\xff\xfe!";
  std::string clean = util::sanitize_utf8(bad);
  EXPECT_EQ(clean, "ok\xEF\xBF\xBD\xEF\xBF\xBD!");
  EXPECT_EQ(util::sanitize_utf8("caf\xC3\xA9"), "caf\xC3\xA9");
}

TEST(Strings, FormatG9) {
  EXPECT_EQ(util::format_g9(0.1), "0.1");
  EXPECT_EQ(util::format_g9(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(util::format_g9(-0.0), "0");
  EXPECT_EQ(util::format_g9(1234567891.0), "1.23456789e+09");
}

TEST(Csv, RoundTripWithQuotes) {
  std::vector<std::string> fields{"plain", "with,comma", "with \"quote\"", "line\nbreak", ""};
  auto rows = util::parse_csv(util::csv_row(fields) + util::csv_row({"x"}));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], fields);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"x"}));
}

TEST(Csv, UnterminatedQuoteIsDataError) { EXPECT_THROW(util::parse_csv("\"abc"), DataError); }

TEST(Numeric, PairwiseSumMatchesExactSmallIntegers) {
  std::vector<double> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(i);
  EXPECT_EQ(util::pairwise_sum(v), 500500.0);
  EXPECT_EQ(util::safe_div(1.0, 0.0), 0.0);
}

TEST(Hash, Fnv1aKnownVectors) {
  EXPECT_EQ(util::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(util::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(util::hex64(0xabcULL), "0000000000000abc");
}

TEST(Random, DeriveSeedIsDeterministicAndSpreads) {
  EXPECT_EQ(util::derive_seed(42, 7), util::derive_seed(42, 7));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(util::derive_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(util::derive_seed(1, 0), util::derive_seed(2, 0));
}

TEST(Random, UniformIndexStaysInRange) {
  util::Rng rng(3);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) ++hist.at(util::uniform_index(rng, 7));
  for (int h : hist) EXPECT_GT(h, 800);
  for (int i = 0; i < 1000; ++i) {
    double u = util::uniform_real(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Random, ShuffleIsAPermutation) {
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  util::Rng rng(11);
  util::shuffle(v, rng);
  std::multiset<int> s(v.begin(), v.end());
  EXPECT_EQ(s, (std::multiset<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(Parallel, EverySlotVisitedOnce) {
  std::vector<std::atomic<int>> hits(101);
  util::parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, RethrowsWorkerException) {
  EXPECT_THROW(util::parallel_for(10, 3,
                                  [](std::size_t i) {
                                    if (i == 5) throw DataError("boom");
                                  }),
               DataError);
}

TEST(Label, ParseAndIds) {
  EXPECT_EQ(parse_label("reliable"), Label::reliable);
  EXPECT_EQ(parse_label("fake"), std::nullopt);
  EXPECT_EQ(class_id(Label::unreliable), 0);
  EXPECT_THROW(label_from_id(2), InvariantError);
}
