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

#include <algorithm>
#include <cstdio>

#include "splitrephrase/datasets.h"
#include "splitrephrase/text.h"

namespace splitrephrase {
namespace {

bool is_finite(const AnnotatedSentence& s, int index) {
  for (int c : s.children(index)) {
    if (deprel_in(s.token(c).deprel,
                  {"nsubj", "nsubjpass", "aux", "auxpass", "cop"})) {
      return true;
    }
  }
  return false;
}

bool has_to_marker(const AnnotatedSentence& s, int index) {
  for (int c : s.children(index)) {
    if (c < index && to_lower(s.token(c).surface) == "to") return true;
  }
  return false;
}

bool is_adverbial_argument(const std::string& label) {
  return label == "ARGM-ADV" || label == "ARGM-TMP" || label == "ARGM-DIS";
}

// An adverbial argument that opens its frame, ahead of the verb, and does not
// start with a verb (those count as participles).
bool has_initial_adverbial(const AnnotatedSentence& s) {
  for (const auto& f : s.frames) {
    const SrlArgument* first = nullptr;
    for (const auto& a : f.arguments) {
      if (!first || a.start < first->start) first = &a;
    }
    if (first && is_adverbial_argument(first->label) &&
        first->start < f.verb().start &&
        s.token(first->start).pos != "VERB") {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(PatternLabel label) {
  switch (label) {
    case PatternLabel::kRc:
      return "rc";
    case PatternLabel::kConj:
      return "conj";
    case PatternLabel::kPart:
      return "part";
    case PatternLabel::kPrep:
      return "prep";
    case PatternLabel::kAdv:
      return "adv";
    case PatternLabel::kAppos:
      return "appos";
    case PatternLabel::kInf:
      return "inf";
  }
  return "unknown";
}

std::set<PatternLabel> detect_patterns(const AnnotatedSentence& s,
                                       const EngineConfig& config) {
  std::set<PatternLabel> out;
  for (const auto& f : s.frames) {
    for (const auto& a : f.arguments) {
      if (a.is_relational()) out.insert(PatternLabel::kRc);
    }
  }
  if (has_initial_adverbial(s)) out.insert(PatternLabel::kAdv);

  for (const auto& t : s.tokens) {
    const std::string& d = t.deprel;
    const bool relative = deprel_in(d, config.relative_clause_labels);
    if (relative) out.insert(PatternLabel::kRc);
    if (to_lower(t.surface) == "and" && is_clause_level_and(s, t.index)) {
      out.insert(PatternLabel::kConj);
    }
    const bool participial =
        !relative && deprel_in(d, config.participle_labels) &&
        t.pos == "VERB" && !is_finite(s, t.index) &&
        !has_to_marker(s, t.index);
    if (participial) out.insert(PatternLabel::kPart);
    if (deprel_in(d, config.prepositional_labels) &&
        static_cast<int>(subtree(s, t.index).size()) >= config.minimum_span) {
      out.insert(PatternLabel::kPrep);
    }
    if (deprel_matches(d, "advcl") && !participial) {
      out.insert(PatternLabel::kAdv);
    }
    if (deprel_in(d, config.appositional_labels)) {
      out.insert(PatternLabel::kAppos);
    }
    if (!relative && deprel_in(d, {"xcomp", "ccomp", "acl", "advcl"}) &&
        t.pos == "VERB" && has_to_marker(s, t.index)) {
      out.insert(PatternLabel::kInf);
    }
  }
  return out;
}

PatternReport pattern_report(
    const Benchmark& benchmark,
    const std::map<std::string, AnnotatedSentence>& annotations,
    const EngineConfig& config) {
  std::vector<std::string> missing;
  for (const auto& p : benchmark.pairs) {
    if (!annotations.count(p.pair_id)) missing.push_back(p.pair_id);
  }
  if (!missing.empty()) {
    throw Error("no annotations for pair_ids: " + join(missing, ", "));
  }
  PatternReport report;
  for (PatternLabel l : kAllPatternLabels) report.counts[l] = 0;
  size_t total = 0;
  for (const auto& p : benchmark.pairs) {
    const auto labels = detect_patterns(annotations.at(p.pair_id), config);
    for (PatternLabel l : labels) ++report.counts[l];
    total += labels.size();
    ++report.sentences;
  }
  if (report.sentences > 0) {
    report.patterns_per_sentence =
        static_cast<double>(total) / static_cast<double>(report.sentences);
  }
  return report;
}

nlohmann::json to_json(const PatternReport& report) {
  nlohmann::json counts;
  for (PatternLabel l : kAllPatternLabels) {
    counts[to_string(l)] = report.counts.at(l);
  }
  nlohmann::json j;
  j["counts"] = counts;
  j["sentences"] = report.sentences;
  j["patterns_per_sentence"] = report.patterns_per_sentence;
  return j;
}

std::string format_pattern_table(const std::string& name,
                                 const PatternReport& report) {
  std::string header = "dataset";
  std::string row = name;
  auto cell = [&](const std::string& h, const std::string& v) {
    const size_t w = std::max(h.size(), v.size());
    header += "  " + std::string(w - h.size(), ' ') + h;
    row += "  " + std::string(w - v.size(), ' ') + v;
  };
  if (row.size() < header.size()) row.resize(header.size(), ' ');
  if (header.size() < row.size()) header.resize(row.size(), ' ');
  for (PatternLabel l : kAllPatternLabels) {
    cell(to_string(l), std::to_string(report.counts.at(l)));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", report.patterns_per_sentence);
  cell("patterns/sent", buf);
  return header + "\n" + row + "\n";
}

}  // namespace splitrephrase
