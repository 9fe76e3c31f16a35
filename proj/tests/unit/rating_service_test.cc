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
#include <random>

#include "splitrephrase/annotation.h"
#include "splitrephrase/rating_service.h"
#include "test_support.h"

namespace splitrephrase {
namespace {

ServiceConfig memory_config() {
  ServiceConfig c;
  c.clock = [] { return std::string("2026-01-01T00:00:00Z"); };
  return c;
}

ComplexSimplePair pair(const std::string& id, const std::string& text) {
  return {id, text, {}};
}

Submission rewrite_submission(const Task& t, const std::string& worker,
                              std::vector<std::string> sentences,
                              RewriteFlag flag = RewriteFlag::kNone) {
  return {t.task_id, worker, RewritePayload{std::move(sentences), flag}};
}

Submission rating_submission(const Task& t, const std::string& worker, int score = 5) {
  RatingPayload p;
  p.sensical = score;
  p.grammatical = 5;
  return {t.task_id, worker, p};
}

TEST(RatingService, RewriteTaskLifecycle) {
  RatingService s(memory_config());
  s.add_pair(pair("p1", "A , which B , C ."));
  s.register_worker("w1");
  s.register_worker("w1");  // idempotent
  const auto t = s.next_task("w1", TaskKind::kRewrite);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->task_id, "rewrite/p1");
  EXPECT_EQ(t->original_text, "A , which B , C .");
  // The open assignment is returned again until submitted.
  EXPECT_EQ(s.next_task("w1", TaskKind::kRewrite)->task_id, "rewrite/p1");
  const auto r = s.submit(rewrite_submission(*t, "w1", {"A C.", "A B."}));
  EXPECT_TRUE(r.accepted) << r.reason;
  EXPECT_EQ(r.rewrite_id, "p1-w1");
  const auto b = s.export_rewrites();
  ASSERT_EQ(b.pairs.size(), 1u);
  EXPECT_EQ(b.pairs[0].rewrites[0].sentences, std::vector<std::string>({"A C.", "A B."}));
  // Fulfilled: no more rewrite work for this worker.
  EXPECT_FALSE(s.next_task("w1", TaskKind::kRewrite).has_value());
}

TEST(RatingService, RejectionsInOrder) {
  RatingService s(memory_config());
  s.add_pair(pair("p1", "x"));
  s.register_worker("w1");
  s.register_worker("w2");
  const auto t = *s.next_task("w1", TaskKind::kRewrite);
  EXPECT_NE(s.submit(rewrite_submission(t, "ghost", {"a.", "b."})).reason.find("unknown worker"),
            std::string::npos);
  Submission bad = rewrite_submission(t, "w1", {"a.", "b."});
  bad.task_id = "rewrite/zz";
  EXPECT_NE(s.submit(bad).reason.find("unknown task"), std::string::npos);
  EXPECT_NE(s.submit(rewrite_submission(t, "w2", {"a.", "b."})).reason.find("not assigned"),
            std::string::npos);
  EXPECT_NE(s.submit(rating_submission(t, "w1")).reason.find("payload"), std::string::npos);
  EXPECT_NE(s.submit(rewrite_submission(t, "w1", {"a."})).reason.find("two sentences"),
            std::string::npos);
  EXPECT_NE(s.submit(rewrite_submission(t, "w1", {"a.", ""})).reason.find("empty"),
            std::string::npos);
  EXPECT_TRUE(s.submit(rewrite_submission(t, "w1", {"a.", "b."})).accepted);
  EXPECT_NE(s.submit(rewrite_submission(t, "w1", {"a.", "b."})).reason.find("double"),
            std::string::npos);
  // Rejections are not recorded.
  EXPECT_EQ(s.progress()["rewrites"], 1);
}

TEST(RatingService, FlaggedRewriteNeedsNoSentences) {
  RatingService s(memory_config());
  s.add_pair(pair("p1", "Bob runs ."));
  s.register_worker("w1");
  const auto t = *s.next_task("w1", TaskKind::kRewrite);
  const auto r = s.submit(rewrite_submission(t, "w1", {}, RewriteFlag::kTooSimple));
  EXPECT_TRUE(r.accepted) << r.reason;
  EXPECT_TRUE(r.rewrite_id.empty());
  EXPECT_EQ(s.progress()["flags"], 1);
  EXPECT_TRUE(s.export_rewrites().pairs.empty());
}

TEST(RatingService, NoSelfRatingAndQuota) {
  ServiceConfig c = memory_config();
  c.ratings_per_rewrite = 2;
  RatingService s(c);
  s.add_pair(pair("p1", "x"));
  for (const char* w : {"author", "r1", "r2", "r3"}) s.register_worker(w);
  const auto t = *s.next_task("author", TaskKind::kRewrite);
  ASSERT_TRUE(s.submit(rewrite_submission(t, "author", {"a.", "b."})).accepted);
  EXPECT_FALSE(s.next_task("author", TaskKind::kRate).has_value());
  const auto r1 = *s.next_task("r1", TaskKind::kRate);
  const auto r2 = *s.next_task("r2", TaskKind::kRate);
  EXPECT_EQ(r1.rewrite_id, "p1-w1");
  EXPECT_EQ(r1.rewritten_sentences, std::vector<std::string>({"a.", "b."}));
  // Two open assignments fill the quota of two.
  EXPECT_FALSE(s.next_task("r3", TaskKind::kRate).has_value());
  EXPECT_TRUE(s.submit(rating_submission(r1, "r1")).accepted);
  EXPECT_FALSE(s.submit(rating_submission(r2, "r2", 7)).accepted);
  EXPECT_TRUE(s.submit(rating_submission(r2, "r2", 4)).accepted);
  const auto ratings = s.export_ratings();
  ASSERT_EQ(ratings.size(), 2u);
  EXPECT_EQ(ratings[0].rater_id, "r1");
  EXPECT_EQ(ratings[1].sensical, 4);
  EXPECT_EQ(s.progress()["rate"]["complete_tasks"], 1);
}

TEST(RatingService, PreloadedRewritesAreRateable) {
  RatingService s(memory_config());
  ComplexSimplePair p = pair("p1", "x");
  p.rewrites.push_back({"p1-rule", "model:rule", {"a.", "b."}});
  s.add_pair(p);
  EXPECT_THROW(s.add_pair(p), Error);
  s.register_worker("w");
  const auto t = s.next_task("w", TaskKind::kRate);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->task_id, "rate/p1-rule");
  EXPECT_THROW(s.next_task("nobody", TaskKind::kRate), Error);
}

TEST(RatingService, LeastCoveredTaskFirst) {
  ServiceConfig c = memory_config();
  c.rewrites_per_pair = 2;
  RatingService s(c);
  s.add_pair(pair("b", "x"));
  s.add_pair(pair("a", "y"));
  for (const char* w : {"w1", "w2", "w3"}) s.register_worker(w);
  EXPECT_EQ(s.next_task("w1", TaskKind::kRewrite)->pair_id, "a");
  EXPECT_EQ(s.next_task("w2", TaskKind::kRewrite)->pair_id, "b");
  EXPECT_EQ(s.next_task("w3", TaskKind::kRewrite)->pair_id, "a");
}

TEST(RatingService, ReplayReproducesSnapshot) {
  const std::string dir = testing::make_temp_dir("service");
  ServiceConfig c = memory_config();
  c.log_path = dir + "/events.jsonl";
  nlohmann::json before;
  {
    RatingService s(c);
    s.add_pair(pair("p1", "x"));
    s.add_pair(pair("p2", "y"));
    for (const char* w : {"w1", "w2", "w3"}) s.register_worker(w);
    for (const char* w : {"w1", "w2"}) {
      const auto t = *s.next_task(w, TaskKind::kRewrite);
      ASSERT_TRUE(s.submit(rewrite_submission(t, w, {"a.", "b."})).accepted);
    }
    const auto t = *s.next_task("w3", TaskKind::kRate);
    ASSERT_TRUE(s.submit(rating_submission(t, "w3")).accepted);
    s.next_task("w3", TaskKind::kRate);  // left open
    before = s.snapshot();
  }
  RatingService replayed(c);
  EXPECT_EQ(replayed.snapshot(), before);
  // The replayed service keeps appending to the same log.
  replayed.register_worker("w4");
  RatingService again(c);
  EXPECT_EQ(again.snapshot(), replayed.snapshot());
  std::filesystem::remove_all(dir);
}

TEST(RatingService, CorruptLogIsAnError) {
  const std::string dir = testing::make_temp_dir("service-bad");
  testing::write_text(dir + "/events.jsonl", "{\"event\": \"bogus\"}\n");
  ServiceConfig c = memory_config();
  c.log_path = dir + "/events.jsonl";
  EXPECT_THROW(RatingService s(c), Error);
  std::filesystem::remove_all(dir);
}

TEST(Submission, ParsesBothPayloadKinds) {
  const auto rw = submission_from_json(nlohmann::json::parse(
      R"({"task_id": "rewrite/p", "worker_id": "w", "payload": {"sentences": ["a.", "b."], "flag": "none"}})"));
  EXPECT_TRUE(std::holds_alternative<RewritePayload>(rw.payload));
  const auto rt = submission_from_json(nlohmann::json::parse(
      R"({"task_id": "rate/r", "worker_id": "w", "payload": {"sensical": 4, "grammatical": 5, "miss_fact": false, "new_fact": true, "wrong_split": false, "need_more_split": false}})"));
  ASSERT_TRUE(std::holds_alternative<RatingPayload>(rt.payload));
  EXPECT_TRUE(std::get<RatingPayload>(rt.payload).new_fact);
  EXPECT_EQ(parse_task_kind("rate"), TaskKind::kRate);
  EXPECT_THROW(parse_task_kind("review"), Error);
  EXPECT_EQ(parse_rewrite_flag("problematic"), RewriteFlag::kProblematic);
}

}  // namespace
}  // namespace splitrephrase
