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

#include "splitrephrase/bleu.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "splitrephrase/annotation.h"

namespace splitrephrase {
namespace {

using Words = std::vector<std::string>;
using NgramCounts = std::map<Words, int64_t>;

NgramCounts count_ngrams(const Words& words, int n) {
  NgramCounts counts;
  for (size_t i = 0; i + n <= words.size(); ++i) {
    ++counts[Words(words.begin() + i, words.begin() + i + n)];
  }
  return counts;
}

struct PairStats {
  std::array<int64_t, kBleuOrder> matches{};
  std::array<int64_t, kBleuOrder> totals{};
  int64_t hypothesis_length = 0;
  int64_t reference_length = 0;
};

PairStats pair_stats(const Words& hyp, const std::vector<Words>& refs) {
  PairStats stats;
  stats.hypothesis_length = static_cast<int64_t>(hyp.size());
  // Closest reference length; the shorter one on a tie.
  int64_t best = -1;
  for (const auto& r : refs) {
    const auto len = static_cast<int64_t>(r.size());
    const auto diff = std::llabs(len - stats.hypothesis_length);
    const auto best_diff = std::llabs(best - stats.hypothesis_length);
    if (best < 0 || diff < best_diff || (diff == best_diff && len < best)) {
      best = len;
    }
  }
  stats.reference_length = best;

  for (int n = 1; n <= kBleuOrder; ++n) {
    const NgramCounts hyp_counts = count_ngrams(hyp, n);
    NgramCounts max_ref;
    for (const auto& r : refs) {
      for (const auto& [gram, c] : count_ngrams(r, n)) {
        max_ref[gram] = std::max(max_ref[gram], c);
      }
    }
    for (const auto& [gram, c] : hyp_counts) {
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) stats.matches[n - 1] += std::min(c, it->second);
      stats.totals[n - 1] += c;
    }
  }
  return stats;
}

double brevity_penalty(int64_t hyp_len, int64_t ref_len) {
  if (hyp_len == 0) return 0.0;
  if (hyp_len > ref_len) return 1.0;
  return std::exp(1.0 - static_cast<double>(ref_len) / hyp_len);
}

void finish(BleuReport& report) {
  report.brevity_penalty =
      brevity_penalty(report.hypothesis_length, report.reference_length);
  double log_sum = 0.0;
  bool any_zero = false;
  for (int i = 0; i < kBleuOrder; ++i) {
    if (report.precisions[i] <= 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(report.precisions[i]) / kBleuOrder;
    }
  }
  report.score = (any_zero || report.brevity_penalty == 0.0)
                     ? 0.0
                     : 100.0 * report.brevity_penalty * std::exp(log_sum);
}

std::vector<Words> tokenize_all(const std::vector<std::string>& texts,
                                const Tokenizer& tokenizer) {
  std::vector<Words> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(tokenizer.split(t));
  return out;
}

}  // namespace

BleuReport bleu_corpus(const std::vector<std::string>& hypotheses,
                       const std::vector<std::vector<std::string>>& references,
                       const Tokenizer& tokenizer) {
  if (hypotheses.empty()) throw Error("BLEU: empty hypothesis list");
  if (hypotheses.size() != references.size()) {
    throw Error("BLEU: " + std::to_string(hypotheses.size()) +
                " hypotheses but " + std::to_string(references.size()) +
                " reference sets");
  }
  BleuReport report;
  report.tokenizer = tokenizer.name;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    if (references[i].empty()) {
      throw Error("BLEU: hypothesis " + std::to_string(i) +
                  " has no reference");
    }
    const PairStats s = pair_stats(tokenizer.split(hypotheses[i]),
                                   tokenize_all(references[i], tokenizer));
    for (int n = 0; n < kBleuOrder; ++n) {
      report.matches[n] += s.matches[n];
      report.totals[n] += s.totals[n];
    }
    report.hypothesis_length += s.hypothesis_length;
    report.reference_length += s.reference_length;
  }
  for (int n = 0; n < kBleuOrder; ++n) {
    report.precisions[n] =
        report.totals[n] == 0
            ? 0.0
            : static_cast<double>(report.matches[n]) / report.totals[n];
  }
  finish(report);
  return report;
}

SentenceBleu bleu_sentence(const std::string& hypothesis,
                           const std::vector<std::string>& references,
                           const Tokenizer& tokenizer) {
  if (references.empty()) throw Error("BLEU: hypothesis has no reference");
  SentenceBleu out;
  out.report.tokenizer = tokenizer.name;
  out.report.smoothing = kAddOneSmoothing;
  const Words hyp = tokenizer.split(hypothesis);
  if (hyp.empty()) {
    out.empty_hypothesis = true;
    return out;
  }
  const PairStats s = pair_stats(hyp, tokenize_all(references, tokenizer));
  out.report.matches = s.matches;
  out.report.totals = s.totals;
  out.report.hypothesis_length = s.hypothesis_length;
  out.report.reference_length = s.reference_length;
  out.report.precisions[0] =
      static_cast<double>(s.matches[0]) / static_cast<double>(s.totals[0]);
  for (int n = 1; n < kBleuOrder; ++n) {
    out.report.precisions[n] = (s.matches[n] + 1.0) / (s.totals[n] + 1.0);
  }
  finish(out.report);
  out.score = out.report.score;
  return out;
}

}  // namespace splitrephrase
