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

// Unsupervised rule-based split-and-rephrase.
//
// Three handlers run once each, in order, over a dependency parse plus SRL
// frames:
//
//   wh_handling          relative argument (R-ARG) -> copy of the argument
//                        that precedes it
//   conjunction_handling clause-level "and"
//   insertion_handling   participial / relative / prepositional / adjectival
//                        / appositional modifier subtree, prefixed with the
//                        subject (and a copula when the clause needs one)
//
// After a split, the next handler sees the longest clause produced so far
// (by source-token count, earliest on a tie).

#ifndef SPLITREPHRASE_RULE_ENGINE_H_
#define SPLITREPHRASE_RULE_ENGINE_H_

#include <optional>
#include <string>
#include <vector>

#include "splitrephrase/annotation.h"

namespace splitrephrase {

struct EngineConfig {
  // Smallest modifier subtree insertion_handling will extract.
  int minimum_span = 3;
  bool copula_insertion = true;

  std::vector<std::string> participle_labels{"acl", "partmod", "vmod",
                                             "advcl"};
  std::vector<std::string> relative_clause_labels{"acl:relcl", "rcmod",
                                                  "relcl"};
  std::vector<std::string> prepositional_labels{"nmod", "prep", "obl"};
  std::vector<std::string> adjectival_labels{"amod"};
  std::vector<std::string> appositional_labels{"appos"};

  std::vector<std::string> modifier_labels() const;
};

// A token placed in front of a clause: either a copy of a source token
// (source_index >= 1) or an inserted copula (source_index == 0).
struct InsertedToken {
  std::string text;
  int source_index = 0;

  bool is_copula() const { return source_index == 0; }
  bool operator==(const InsertedToken&) const = default;
};

struct ClauseDraft {
  std::vector<int> token_indices;  // strictly ascending
  std::vector<InsertedToken> prefix_tokens;
  std::string source_id;

  bool operator==(const ClauseDraft&) const = default;
};

// One handler firing: `kept` carries the scope's existing prefix (the main
// clause, the part before "and", or the insertion remainder); `split_off` is
// the new clause.
struct HandlerSplit {
  ClauseDraft kept;
  ClauseDraft split_off;
  int trigger_index = 0;
};

struct TraceEntry {
  std::string handler;
  int trigger_index = 0;

  bool operator==(const TraceEntry&) const = default;
};

struct SplitResult {
  std::vector<std::string> sentences;
  std::vector<TraceEntry> trace;
  bool changed = false;
  // Final drafts, in the same order as `sentences`.
  std::vector<ClauseDraft> clauses;
};

inline constexpr char kWhHandling[] = "wh_handling";
inline constexpr char kConjunctionHandling[] = "conjunction_handling";
inline constexpr char kInsertionHandling[] = "insertion_handling";

// Every token of the sentence, no prefix.
ClauseDraft whole_sentence(const AnnotatedSentence& sentence);

// Handlers over a whole sentence.
std::optional<HandlerSplit> wh_handling(const AnnotatedSentence& sentence,
                                        const EngineConfig& config = {});
std::optional<HandlerSplit> conjunction_handling(
    const AnnotatedSentence& sentence, const EngineConfig& config = {});
std::optional<HandlerSplit> insertion_handling(
    const AnnotatedSentence& sentence, const EngineConfig& config = {});

// Handlers restricted to the tokens of `scope`.
std::optional<HandlerSplit> wh_handling(const AnnotatedSentence& sentence,
                                        const ClauseDraft& scope,
                                        const EngineConfig& config);
std::optional<HandlerSplit> conjunction_handling(
    const AnnotatedSentence& sentence, const ClauseDraft& scope,
    const EngineConfig& config);
std::optional<HandlerSplit> insertion_handling(
    const AnnotatedSentence& sentence, const ClauseDraft& scope,
    const EngineConfig& config);

// True if the "and" at `and_index` passes the conjunction trigger test (the
// next token starts an SRL argument, or is a V or an auxiliary of a V).
bool is_clause_level_and(const AnnotatedSentence& sentence, int and_index);

// Surface realization. Throws Error for a draft with no source tokens.
std::string realize(const ClauseDraft& draft,
                    const AnnotatedSentence& source);

// Single-space detokenization: no space before , . ; : ' ’ or closing
// brackets, none after opening brackets.
std::string detokenize(const std::vector<std::string>& words);

SplitResult split_and_rephrase(const AnnotatedSentence& sentence,
                               const EngineConfig& config = {});

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_RULE_ENGINE_H_
