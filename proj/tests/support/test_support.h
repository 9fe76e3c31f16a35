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

// Shared helpers for unit and acceptance tests: fixture access, a random
// annotation generator and independent oracles.

#ifndef SPLITREPHRASE_TESTS_TEST_SUPPORT_H_
#define SPLITREPHRASE_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "splitrephrase/annotation.h"
#include "splitrephrase/rule_engine.h"

namespace splitrephrase::testing {

std::string fixture_path(const std::string& name);
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& content);

// Fresh empty directory under the system temp dir.
std::string make_temp_dir(const std::string& tag);

// Sentences from a CoNLL-U fixture joined with its SRL file.
std::vector<AnnotatedSentence> load_fixture(const std::string& stem);
AnnotatedSentence fixture_sentence(const std::string& stem,
                                   const std::string& sentence_id);

// A random valid sentence: random tree, random labels and surfaces drawn to
// hit every handler, and up to three frames with disjoint argument spans.
AnnotatedSentence random_sentence(std::mt19937_64& rng, int id);

// Checks the token-conservation invariant of one split. Returns an empty
// string when it holds, otherwise a description of the violation.
std::string conservation_violation(const AnnotatedSentence& input,
                                   const SplitResult& result);

// Brute-force BLEU pieces: enumerate every n-gram by position and count
// matches pair by pair, with no maps shared with the library.
struct OracleStats {
  double matches[4] = {0, 0, 0, 0};
  double totals[4] = {0, 0, 0, 0};
  double hyp_len = 0;
  double ref_len = 0;
};
OracleStats oracle_stats(const std::vector<std::string>& hyp,
                         const std::vector<std::vector<std::string>>& refs);
double oracle_corpus_bleu(
    const std::vector<std::vector<std::string>>& hyps,
    const std::vector<std::vector<std::vector<std::string>>>& refs);
double oracle_sentence_bleu(const std::vector<std::string>& hyp,
                            const std::vector<std::vector<std::string>>& refs);

// Exact two-sided permutation p-value of Spearman's rho via
// std::next_permutation over index orderings.
double oracle_permutation_p(const std::vector<double>& x,
                            const std::vector<double>& y);

}  // namespace splitrephrase::testing

#endif  // SPLITREPHRASE_TESTS_TEST_SUPPORT_H_
