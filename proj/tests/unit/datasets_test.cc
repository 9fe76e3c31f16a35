// Copyright 2026 The Split-Rephrase Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>

#include "splitrephrase/datasets.h"
#include "test_support.h"

namespace splitrephrase {
namespace {

using ::splitrephrase::testing::fixture_path;

LoadOptions tsv_options() {
  LoadOptions o;
  o.format = BenchmarkFormat::kTsvPairs;
  o.name = "toy";
  return o;
}

RatingRecord rating(const std::string& rewrite, const std::string& rater, bool ok) {
  RatingRecord r;
  r.rewrite_id = rewrite;
  r.rater_id = rater;
  r.sensical = 5;
  r.grammatical = ok ? 5 : 3;
  return r;
}

TEST(LoadBenchmark, TsvMergesRowsWithSameComplexText) {
  const auto b = parse_benchmark(
      "A and B .\tA.<::::>B.\n"
      "C , which D .\tC.<::::>C D.\n"
      "A and B .\tA. <::::> B.\n",
      tsv_options());
  EXPECT_EQ(b.name, "toy");
  ASSERT_EQ(b.pairs.size(), 2u);
  EXPECT_EQ(b.pairs[0].pair_id, "0");
  EXPECT_EQ(b.pairs[1].pair_id, "1");
  ASSERT_EQ(b.pairs[0].rewrites.size(), 2u);
  EXPECT_EQ(b.pairs[0].rewrites[1].rewrite_id, "0-1");
  EXPECT_EQ(b.pairs[0].rewrites[1].sentences, std::vector<std::string>({"A.", "B."}));
  EXPECT_EQ(b.pairs[0].rewrites[0].author, kHumanAuthor);
  ASSERT_NE(b.find_pair("1"), nullptr);
  EXPECT_EQ(b.find_pair("9"), nullptr);
}

TEST(LoadBenchmark, CustomSeparator) {
  LoadOptions o = tsv_options();
  o.separator = " || ";
  const auto b = parse_benchmark("X and Y .\tX. || Y.\n", o);
  EXPECT_EQ(b.pairs[0].rewrites[0].sentences.size(), 2u);
}

TEST(LoadBenchmark, MalformedInputNamesLine) {
  try {
    parse_benchmark("A .\tA.\nno tab here\n", tsv_options());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_benchmark("", tsv_options()), ParseError);
  EXPECT_THROW(parse_benchmark("{\"pair_id\": 3}\n", LoadOptions{}), ParseError);
}

TEST(LoadBenchmark, DuplicateIdsAreErrors) {
  const std::string line =
      R"({"pair_id": "p", "complex": "x", "rewrites": [{"rewrite_id": "r", "author": "human", "sentences": ["x."]}]})";
  EXPECT_THROW(parse_benchmark(line + "\n" +
                                   R"({"pair_id": "p", "complex": "y", "rewrites": []})",
                               LoadOptions{}),
               Error);
  EXPECT_THROW(parse_benchmark(line + "\n" +
                                   R"({"pair_id": "q", "complex": "y", "rewrites": [{"rewrite_id": "r", "author": "human", "sentences": ["y."]}]})",
                               LoadOptions{}),
               Error);
}

TEST(LoadBenchmark, FormatNames) {
  EXPECT_EQ(parse_benchmark_format("jsonl"), BenchmarkFormat::kCanonicalJsonl);
  EXPECT_EQ(parse_benchmark_format("tsv_pairs"), BenchmarkFormat::kTsvPairs);
  EXPECT_THROW(parse_benchmark_format("xml"), Error);
}

TEST(CanonicalJsonl, RoundTripsThroughDisk) {
  const auto b = load_benchmark(fixture_path("websplit_style_refs.jsonl"), LoadOptions{});
  EXPECT_EQ(b.name, "websplit_style_refs");
  EXPECT_EQ(b.pairs.size(), 12u);
  const std::string dir = testing::make_temp_dir("datasets");
  save_benchmark(b, dir + "/copy.jsonl");
  const auto back = load_benchmark(dir + "/copy.jsonl", LoadOptions{});
  EXPECT_EQ(back.pairs, b.pairs);
  EXPECT_EQ(serialize_benchmark(back), serialize_benchmark(b));
  std::filesystem::remove_all(dir);
}

TEST(DescriptiveStats, HandComputed) {
  const auto b = parse_benchmark(
      "A and B .\tA.<::::>B.\nC D E F .\tC D.<::::>E F.<::::>G.\n"
      "A and B .\tA and B.\n",
      tsv_options());
  const auto s = descriptive_stats(b);
  EXPECT_EQ(s.n_complex, 2u);
  EXPECT_EQ(s.n_simple, 3u);
  EXPECT_DOUBLE_EQ(s.toks_per_complex, 4.5);
  EXPECT_DOUBLE_EQ(s.sents_per_simple, 2.0);
  EXPECT_EQ(to_json(s)["n_simple"], 3);
}

TEST(BuildGold, KeepsOnlyUnanimouslyCorrectRewrites) {
  const auto b = parse_benchmark(
      "A and B .\tA.<::::>B.\nC and D .\tC.<::::>D.\nA and B .\tA and B.\n",
      tsv_options());
  const std::vector<RatingRecord> ratings = {
      rating("0-0", "u", true), rating("0-0", "v", true),
      rating("0-1", "u", true), rating("0-1", "v", false),
      rating("1-0", "u", false)};
  const auto gold = build_gold(b, ratings);
  ASSERT_EQ(gold.pairs.size(), 1u);
  ASSERT_EQ(gold.pairs[0].rewrites.size(), 1u);
  EXPECT_EQ(gold.pairs[0].rewrites[0].rewrite_id, "0-0");
  // Idempotent when re-run with the ratings of the kept rewrites, which is
  // what the unknown-rewrite check allows.
  std::vector<RatingRecord> kept_ratings;
  for (const auto& r : ratings) {
    if (r.rewrite_id == "0-0") kept_ratings.push_back(r);
  }
  const auto twice = build_gold(gold, kept_ratings);
  EXPECT_EQ(twice.pairs, gold.pairs);
  EXPECT_THROW(build_gold(b, std::vector{rating("nope", "u", true)}), Error);
}

TEST(Patterns, DetectedOnFixtures) {
  using testing::fixture_sentence;
  EXPECT_TRUE(detect_patterns(fixture_sentence("examples", "baymax")).count(PatternLabel::kRc));
  EXPECT_TRUE(detect_patterns(fixture_sentence("examples", "veil")).count(PatternLabel::kConj));
  EXPECT_TRUE(detect_patterns(fixture_sentence("examples", "serving")).count(PatternLabel::kPart));
  EXPECT_TRUE(detect_patterns(fixture_sentence("examples", "leila")).count(PatternLabel::kAppos));
  EXPECT_TRUE(detect_patterns(fixture_sentence("examples", "bob")).empty());
}

TEST(Patterns, ReportCountsAndMissingAnnotations) {
  const auto b = load_benchmark(fixture_path("websplit_style_refs.jsonl"), LoadOptions{});
  std::map<std::string, AnnotatedSentence> annotations;
  for (auto& s : testing::load_fixture("websplit_style")) annotations[s.sentence_id] = s;
  const auto report = pattern_report(b, annotations);
  EXPECT_EQ(report.sentences, 12u);
  EXPECT_EQ(report.counts.size(), kAllPatternLabels.size());
  size_t total = 0;
  for (const auto& [label, c] : report.counts) total += c;
  EXPECT_DOUBLE_EQ(report.patterns_per_sentence, total / 12.0);
  const std::string table = format_pattern_table("toy", report);
  for (auto label : kAllPatternLabels) {
    EXPECT_NE(table.find(to_string(label)), std::string::npos);
  }
  annotations.erase("ws03");
  try {
    pattern_report(b, annotations);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("ws03"), std::string::npos);
  }
}

}  // namespace
}  // namespace splitrephrase
