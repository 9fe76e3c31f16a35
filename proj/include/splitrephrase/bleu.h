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

// BLEU-4 with multiple references (Papineni et al., 2002).

#ifndef SPLITREPHRASE_BLEU_H_
#define SPLITREPHRASE_BLEU_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "splitrephrase/text.h"

namespace splitrephrase {

inline constexpr int kBleuOrder = 4;
inline constexpr char kNoSmoothing[] = "none";
inline constexpr char kAddOneSmoothing[] = "add-one(n>=2)";

struct BleuReport {
  std::array<double, kBleuOrder> precisions{};  // p_1..p_4
  std::array<int64_t, kBleuOrder> matches{};     // clipped counts
  std::array<int64_t, kBleuOrder> totals{};
  double brevity_penalty = 0.0;
  int64_t hypothesis_length = 0;
  int64_t reference_length = 0;  // closest reference lengths, summed
  double score = 0.0;            // 0..100
  std::string tokenizer;
  std::string smoothing = kNoSmoothing;
};

// Corpus BLEU. Clipped n-gram counts are taken per hypothesis against the
// max count over its references and summed corpus-wide; the brevity penalty
// uses the closest reference length (shorter wins ties). Any zero precision
// gives a score of 0. Throws Error on an empty corpus, a length mismatch or a
// hypothesis without references.
BleuReport bleu_corpus(const std::vector<std::string>& hypotheses,
                       const std::vector<std::vector<std::string>>& references,
                       const Tokenizer& tokenizer = default_tokenizer());

struct SentenceBleu {
  double score = 0.0;
  bool empty_hypothesis = false;  // scored 0, not an error
  BleuReport report;
};

// Single-pair BLEU with add-one smoothing on numerator and denominator for
// n >= 2.
SentenceBleu bleu_sentence(const std::string& hypothesis,
                           const std::vector<std::string>& references,
                           const Tokenizer& tokenizer = default_tokenizer());

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_BLEU_H_
