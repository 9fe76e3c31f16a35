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

// Benchmarks of complex sentences with simplified rewrites: loading, summary
// statistics, gold-standard filtering and syntactic pattern counts.

#ifndef SPLITREPHRASE_DATASETS_H_
#define SPLITREPHRASE_DATASETS_H_

#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "splitrephrase/annotation.h"
#include "splitrephrase/ratings.h"
#include "splitrephrase/rule_engine.h"

namespace splitrephrase {

inline constexpr char kHumanAuthor[] = "human";

struct Rewrite {
  std::string rewrite_id;
  std::string author;  // "human" or "model:<name>"
  std::vector<std::string> sentences;

  bool operator==(const Rewrite&) const = default;
};

struct ComplexSimplePair {
  std::string pair_id;
  std::string complex_text;
  std::vector<Rewrite> rewrites;

  bool operator==(const ComplexSimplePair&) const = default;
};

struct Benchmark {
  std::string name;
  std::vector<ComplexSimplePair> pairs;
  std::string provenance;

  const ComplexSimplePair* find_pair(std::string_view pair_id) const;
};

enum class BenchmarkFormat { kCanonicalJsonl, kTsvPairs };

// Accepts "canonical_jsonl"/"jsonl" and "tsv_pairs"/"tsv".
BenchmarkFormat parse_benchmark_format(std::string_view name);

struct LoadOptions {
  BenchmarkFormat format = BenchmarkFormat::kCanonicalJsonl;
  // Sentence separator inside a tsv rewrite field.
  std::string separator = "<::::>";
  // Author recorded for tsv rewrites.
  std::string author = kHumanAuthor;
  std::string name;  // defaults to the file stem
};

// Parses benchmark text. Rows whose complex text was already seen merge their
// rewrites into the earlier pair. TSV pair ids are the 0-based ordinal of the
// first occurrence; rewrite ids are "<pair_id>-<k>". Throws ParseError with the
// line number on malformed rows and on input without any row.
Benchmark parse_benchmark(std::string_view text, const LoadOptions& options);
Benchmark load_benchmark(const std::string& path, const LoadOptions& options);

// Canonical JSONL, one pair per line with keys in schema order.
std::string serialize_benchmark(const Benchmark& benchmark);
void save_benchmark(const Benchmark& benchmark, const std::string& path);

struct DatasetStats {
  size_t n_complex = 0;
  size_t n_simple = 0;  // rewrites
  double toks_per_complex = 0.0;
  double sents_per_simple = 0.0;
};

DatasetStats descriptive_stats(const Benchmark& benchmark);
nlohmann::json to_json(const DatasetStats& stats);

// Keeps only rewrites whose ratings are all correct, then drops pairs left
// without rewrites. Rewrites without ratings are dropped. Throws Error when a
// rating names a rewrite absent from the benchmark.
Benchmark build_gold(const Benchmark& benchmark,
                     std::span<const RatingRecord> ratings);

enum class PatternLabel { kRc, kConj, kPart, kPrep, kAdv, kAppos, kInf };
inline constexpr std::array<PatternLabel, 7> kAllPatternLabels = {
    PatternLabel::kRc,   PatternLabel::kConj,  PatternLabel::kPart,
    PatternLabel::kPrep, PatternLabel::kAdv,   PatternLabel::kAppos,
    PatternLabel::kInf};

std::string to_string(PatternLabel label);

// Annotation-only heuristic approximating manual pattern annotation.
std::set<PatternLabel> detect_patterns(const AnnotatedSentence& sentence,
                                       const EngineConfig& config = {});

struct PatternReport {
  std::map<PatternLabel, size_t> counts;  // every label present, maybe 0
  size_t sentences = 0;
  double patterns_per_sentence = 0.0;
};

// Counts over every pair of the benchmark, looking annotations up by pair_id.
// Throws Error listing the pair ids that have no annotation.
PatternReport pattern_report(
    const Benchmark& benchmark,
    const std::map<std::string, AnnotatedSentence>& annotations,
    const EngineConfig& config = {});

nlohmann::json to_json(const PatternReport& report);
std::string format_pattern_table(const std::string& name,
                                 const PatternReport& report);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_DATASETS_H_
