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

#include "splitrephrase/ratings.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "splitrephrase/annotation.h"

namespace splitrephrase {

using nlohmann::json;

void validate(const RatingRecord& r) {
  auto check = [&](int v, const char* name) {
    if (v < 0 || v > kTopScore) {
      throw ValidationError("rating of '" + r.rewrite_id + "' by '" +
                            r.rater_id + "': " + name + " = " +
                            std::to_string(v) + " outside 0..5");
    }
  };
  check(r.sensical, "sensical");
  check(r.grammatical, "grammatical");
}

bool is_correct(const RatingRecord& r) {
  return r.sensical == kTopScore && r.grammatical == kTopScore &&
         !r.miss_fact && !r.new_fact && !r.wrong_split && !r.need_more_split;
}

bool is_perfect(std::span<const RatingRecord> records) {
  return !records.empty() &&
         std::all_of(records.begin(), records.end(), is_correct);
}

CriteriaSummary aggregate_ratings(std::span<const RatingRecord> records) {
  if (records.empty()) throw Error("cannot aggregate zero ratings");
  CriteriaSummary s;
  s.count = records.size();
  for (const auto& r : records) {
    s.sensical_top += r.sensical == kTopScore;
    s.sensical_mean += r.sensical;
    s.grammatical_top += r.grammatical == kTopScore;
    s.grammatical_mean += r.grammatical;
    s.no_miss_fact += !r.miss_fact;
    s.no_new_fact += !r.new_fact;
    s.correct_split += !r.wrong_split;
    s.enough_split += !r.need_more_split;
    s.correct_rate += is_correct(r);
  }
  const double n = static_cast<double>(s.count);
  const double to_percent = 100.0 / n;
  s.sensical_top *= to_percent;
  s.grammatical_top *= to_percent;
  s.no_miss_fact *= to_percent;
  s.no_new_fact *= to_percent;
  s.correct_split *= to_percent;
  s.enough_split *= to_percent;
  s.correct_rate *= to_percent;
  s.sensical_mean /= n;
  s.grammatical_mean /= n;
  return s;
}

json to_json(const RatingRecord& r) {
  return {{"rewrite_id", r.rewrite_id},   {"rater_id", r.rater_id},
          {"sensical", r.sensical},       {"grammatical", r.grammatical},
          {"miss_fact", r.miss_fact},     {"new_fact", r.new_fact},
          {"wrong_split", r.wrong_split}, {"need_more_split", r.need_more_split}};
}

RatingRecord rating_from_json(const json& j) {
  RatingRecord r;
  r.rewrite_id = j.at("rewrite_id").get<std::string>();
  r.rater_id = j.at("rater_id").get<std::string>();
  r.sensical = j.at("sensical").get<int>();
  r.grammatical = j.at("grammatical").get<int>();
  r.miss_fact = j.at("miss_fact").get<bool>();
  r.new_fact = j.at("new_fact").get<bool>();
  r.wrong_split = j.at("wrong_split").get<bool>();
  r.need_more_split = j.at("need_more_split").get<bool>();
  return r;
}

json to_json(const CriteriaSummary& s) {
  return {{"count", s.count},
          {"sensical_top", s.sensical_top},
          {"sensical_mean", s.sensical_mean},
          {"grammatical_top", s.grammatical_top},
          {"grammatical_mean", s.grammatical_mean},
          {"no_miss_fact", s.no_miss_fact},
          {"no_new_fact", s.no_new_fact},
          {"correct_split", s.correct_split},
          {"enough_split", s.enough_split},
          {"correct_rate", s.correct_rate}};
}

std::vector<RatingRecord> parse_ratings_jsonl(std::string_view text) {
  std::vector<RatingRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(rating_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError("ratings line " + std::to_string(line_no) + ": " +
                       e.what());
    }
    validate(out.back());
  }
  return out;
}

std::string serialize_ratings_jsonl(std::span<const RatingRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string format_top_mean(double percent, double mean) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f%%/%.2f", percent, mean);
  return buf;
}

std::string format_criteria_table(std::string_view title,
                                  const std::vector<CriteriaRow>& rows) {
  const std::vector<std::string> header = {
      std::string(title), "sensical",    "grammatical",  "no miss fact",
      "no new fact",      "correct split", "enough split", "correct",
      "BLEU"};
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& row : rows) {
    const auto& s = row.summary;
    char buf[7][32];
    std::snprintf(buf[0], 32, "%.2f%%", s.no_miss_fact);
    std::snprintf(buf[1], 32, "%.2f%%", s.no_new_fact);
    std::snprintf(buf[2], 32, "%.2f%%", s.correct_split);
    std::snprintf(buf[3], 32, "%.2f%%", s.enough_split);
    std::snprintf(buf[4], 32, "%.1f%%", s.correct_rate);
    if (row.bleu) {
      std::snprintf(buf[5], 32, "%.1f", *row.bleu);
    } else {
      std::snprintf(buf[5], 32, "-");
    }
    cells.push_back({row.label, format_top_mean(s.sensical_top, s.sensical_mean),
                     format_top_mean(s.grammatical_top, s.grammatical_mean),
                     buf[0], buf[1], buf[2], buf[3], buf[4], buf[5]});
  }
  std::vector<size_t> width(header.size(), 0);
  for (const auto& r : cells) {
    for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : cells) {
    for (size_t c = 0; c < r.size(); ++c) {
      if (c == 0) {
        out += r[c] + std::string(width[c] - r[c].size(), ' ');
      } else {
        out += "  " + std::string(width[c] - r[c].size(), ' ') + r[c];
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace splitrephrase
