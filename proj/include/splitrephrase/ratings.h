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

// Six-criteria human ratings of a rewrite and their aggregation.

#ifndef SPLITREPHRASE_RATINGS_H_
#define SPLITREPHRASE_RATINGS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace splitrephrase {

inline constexpr int kTopScore = 5;

// One rater's answers for one rewrite. The four booleans are the yes/no
// defect questions, so `false` is the favorable answer.
struct RatingRecord {
  std::string rewrite_id;
  std::string rater_id;
  int sensical = 0;     // 0..5
  int grammatical = 0;  // 0..5
  bool miss_fact = false;
  bool new_fact = false;
  bool wrong_split = false;
  bool need_more_split = false;

  bool operator==(const RatingRecord&) const = default;
};

// Throws ValidationError when a scale answer is outside 0..5.
void validate(const RatingRecord& record);

// 5 on both scales and "no" on all four defect questions.
bool is_correct(const RatingRecord& record);

// Non-empty and every rating correct.
bool is_perfect(std::span<const RatingRecord> records);

// Percentages are 0..100, means 0..5.
struct CriteriaSummary {
  size_t count = 0;
  double sensical_top = 0;  // share of 5s
  double sensical_mean = 0;
  double grammatical_top = 0;
  double grammatical_mean = 0;
  double no_miss_fact = 0;
  double no_new_fact = 0;
  double correct_split = 0;  // answered "no" to wrong_split
  double enough_split = 0;   // answered "no" to need_more_split
  double correct_rate = 0;
};

// Throws Error on empty input.
CriteriaSummary aggregate_ratings(std::span<const RatingRecord> records);

nlohmann::json to_json(const RatingRecord& record);
RatingRecord rating_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CriteriaSummary& summary);

// Ratings JSONL, one record per line. Parse errors name the line.
std::vector<RatingRecord> parse_ratings_jsonl(std::string_view text);
std::string serialize_ratings_jsonl(std::span<const RatingRecord> records);

// "71.6%/4.55"
std::string format_top_mean(double percent, double mean);

// Aligned text table of criteria summaries, one row per model:
// sensical, grammatical, no miss fact, no new fact, correct split,
// enough split, correct, BLEU.
struct CriteriaRow {
  std::string label;
  CriteriaSummary summary;
  std::optional<double> bleu;
};
std::string format_criteria_table(std::string_view title,
                                  const std::vector<CriteriaRow>& rows);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_RATINGS_H_
