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

#include "splitrephrase/rule_engine.h"
#include "test_support.h"

namespace splitrephrase {
namespace {

using ::splitrephrase::testing::fixture_sentence;
using Sentences = std::vector<std::string>;

SplitResult split_fixture(const std::string& id, const EngineConfig& config = {}) {
  return split_and_rephrase(fixture_sentence("examples", id), config);
}

TEST(SplitAndRephrase, RelativeClauseWithWhSubject) {
  const auto r = split_fixture("baymax");
  EXPECT_EQ(r.sentences, Sentences({"Scott Adsit voiced Baymax.",
                                    "Baymax was created by Duncan Rouleau."}));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].handler, kWhHandling);
  EXPECT_TRUE(r.changed);
}

TEST(SplitAndRephrase, CoordinatedClausesShareSubject) {
  const auto r = split_fixture("veil");
  EXPECT_EQ(r.sentences,
            Sentences({"Above the Veil is from Australia.",
                       "Above the Veil was preceded by Aenir and Castle."}));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].handler, kConjunctionHandling);
}

TEST(SplitAndRephrase, FrontedParticipleGetsCopula) {
  const auto r = split_fixture("serving");
  EXPECT_EQ(r.sentences, Sentences({"The 1st runway is serving the city of Alderney.",
                                    "The 1st runway is made from Poaceae."}));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].handler, kInsertionHandling);
  EXPECT_EQ(r.trace[0].trigger_index, 1);
}

TEST(SplitAndRephrase, AppositionBecomesCopularSentence) {
  const auto r = split_fixture("leila");
  EXPECT_EQ(r.sentences, Sentences({"Leila married the movie director Ruy Guerra.",
                                    "Ruy Guerra is father of her only daughter."}));
}

TEST(SplitAndRephrase, PlainClauseConjunctionAndIdentity) {
  EXPECT_EQ(split_fixture("alice").sentences, Sentences({"Alice sings.", "Bob dances."}));
  const auto bob = split_fixture("bob");
  EXPECT_EQ(bob.sentences, Sentences({"Bob runs."}));
  EXPECT_FALSE(bob.changed);
  EXPECT_TRUE(bob.trace.empty());
}

TEST(SplitAndRephrase, KaguyaAndMausoleumSplitOnce) {
  const auto kaguya = split_fixture("kaguya");
  EXPECT_EQ(kaguya.sentences.size(), 2u);
  EXPECT_EQ(kaguya.sentences[0], "Kaguya is voiced by Aoi Koga.");
  const auto mausoleum = split_fixture("mausoleum");
  EXPECT_EQ(mausoleum.sentences,
            Sentences({"The mausoleum was built in 1894.",
                       "The mausoleum was along the lines specified by Frazer."}));
}

TEST(SplitAndRephrase, DeterministicAcrossCalls) {
  for (const auto& s : testing::load_fixture("examples")) {
    const auto a = split_and_rephrase(s);
    const auto b = split_and_rephrase(s);
    EXPECT_EQ(a.sentences, b.sentences);
    EXPECT_EQ(a.trace, b.trace);
  }
}

TEST(SplitAndRephrase, ChainsHandlersOnLongestClause) {
  const auto s = fixture_sentence("websplit_style", "ws01");
  const auto r = split_and_rephrase(s);
  EXPECT_EQ(r.sentences, Sentences({"Alan Bean was born.", "Alan Bean was in Wheeler, Texas.",
                                    "Alan Bean was a crew member of Apollo 12."}));
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].handler, kConjunctionHandling);
  EXPECT_EQ(r.trace[1].handler, kInsertionHandling);
}

TEST(Config, MinimumSpanGatesInsertion) {
  EngineConfig config;
  config.minimum_span = 50;
  const auto r = split_fixture("serving", config);
  EXPECT_FALSE(r.changed);
  EXPECT_EQ(r.sentences.size(), 1u);
}

TEST(Config, CopulaInsertionCanBeDisabled) {
  EngineConfig config;
  config.copula_insertion = false;
  const auto r = split_fixture("serving", config);
  for (const auto& c : r.clauses) {
    for (const auto& t : c.prefix_tokens) EXPECT_FALSE(t.is_copula());
  }
}

TEST(Handlers, NoTriggerGivesNullopt) {
  const auto bob = fixture_sentence("examples", "bob");
  EXPECT_FALSE(wh_handling(bob).has_value());
  EXPECT_FALSE(conjunction_handling(bob).has_value());
  EXPECT_FALSE(insertion_handling(bob).has_value());
}

TEST(Handlers, VeilAndIsClauseLevel) {
  const auto veil = fixture_sentence("examples", "veil");
  int and_index = 0;
  for (int i = 1; i <= veil.size(); ++i) {
    if (veil.token(i).surface == "and" && is_clause_level_and(veil, i)) {
      and_index = i;
    }
  }
  EXPECT_EQ(and_index, 7);
  // The "and" inside "Aenir and Castle" joins nouns, not clauses.
  for (int i = and_index + 1; i <= veil.size(); ++i) {
    if (veil.token(i).surface == "and") EXPECT_FALSE(is_clause_level_and(veil, i));
  }
}

TEST(Handlers, SplitPartsAreDisjointAndAscending) {
  const auto s = fixture_sentence("examples", "baymax");
  const auto h = wh_handling(s);
  ASSERT_TRUE(h.has_value());
  const auto& a = h->kept.token_indices;
  const auto& b = h->split_off.token_indices;
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
  for (int t : a) EXPECT_EQ(std::count(b.begin(), b.end(), t), 0);
}

TEST(Realize, CapitalizesAndEndsWithPeriod) {
  const auto s = fixture_sentence("examples", "bob");
  EXPECT_EQ(realize(whole_sentence(s), s), "Bob runs.");
}

TEST(Detokenize, AttachesPunctuation) {
  EXPECT_EQ(detokenize({"Wheeler", ",", "Texas", "."}), "Wheeler, Texas.");
  EXPECT_EQ(detokenize({"the", "series", "'", "hero"}), "the series' hero");
  EXPECT_EQ(detokenize({}), "");
}

}  // namespace
}  // namespace splitrephrase
