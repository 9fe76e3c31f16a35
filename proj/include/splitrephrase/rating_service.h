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

// Local task pool for collecting rewrites (phase 1) and ratings (phase 2)
// from human workers. State is an append-only JSONL event log replayed on
// startup.

#ifndef SPLITREPHRASE_RATING_SERVICE_H_
#define SPLITREPHRASE_RATING_SERVICE_H_

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "splitrephrase/datasets.h"
#include "splitrephrase/ratings.h"

namespace splitrephrase {

enum class TaskKind { kRewrite, kRate };
std::string to_string(TaskKind kind);
// Throws Error on anything but "rewrite" or "rate".
TaskKind parse_task_kind(std::string_view name);

enum class RewriteFlag { kNone, kTooSimple, kProblematic };
std::string to_string(RewriteFlag flag);
RewriteFlag parse_rewrite_flag(std::string_view name);

struct Task {
  std::string task_id;  // "rewrite/<pair_id>" or "rate/<rewrite_id>"
  TaskKind kind = TaskKind::kRewrite;
  std::string pair_id;
  std::string rewrite_id;  // rate only
  std::string original_text;
  std::vector<std::string> rewritten_sentences;  // rate only
  std::string assigned_to;
};
nlohmann::json to_json(const Task& task);

struct RewritePayload {
  std::vector<std::string> sentences;
  RewriteFlag flag = RewriteFlag::kNone;
};

struct RatingPayload {
  int sensical = 0;
  int grammatical = 0;
  bool miss_fact = false;
  bool new_fact = false;
  bool wrong_split = false;
  bool need_more_split = false;
};

struct Submission {
  std::string task_id;
  std::string worker_id;
  std::variant<RewritePayload, RatingPayload> payload;
};

// Parses {"task_id", "worker_id", "payload": {...}}. A payload carrying
// "sentences" is a rewrite; anything else is read as a rating.
Submission submission_from_json(const nlohmann::json& j);

struct SubmitResult {
  bool accepted = false;
  std::string reason;      // set when rejected
  std::string rewrite_id;  // set for accepted, unflagged rewrites
};

struct ServiceConfig {
  int rewrites_per_pair = 3;
  // 2 when building a gold benchmark, 3 when rating model outputs.
  int ratings_per_rewrite = 2;
  // Empty keeps the log in memory only.
  std::string log_path;
  // Timestamp source for submissions; UTC ISO-8601 by default.
  std::function<std::string()> clock;
};

class RatingService {
 public:
  // Replays the log at config.log_path when it exists.
  explicit RatingService(ServiceConfig config);

  RatingService(const RatingService&) = delete;
  RatingService& operator=(const RatingService&) = delete;

  // Adds a complex sentence and any rewrites it already has (for example
  // model outputs to be rated). Throws Error on a duplicate pair or rewrite.
  void add_pair(const ComplexSimplePair& pair);
  void add_benchmark(const Benchmark& benchmark);
  // Idempotent.
  void register_worker(const std::string& worker_id);

  // The worker's open assignment of this kind if any; otherwise assigns the
  // least-covered eligible task, ties broken by pair_id then rewrite_id.
  // Throws Error for an unknown worker.
  //
  // TODO(lease): open assignments never expire, so an abandoned task holds a
  // quota slot until the worker submits; add a lease timeout.
  std::optional<Task> next_task(const std::string& worker_id, TaskKind kind);

  // Validates and records a submission. Rejections leave the log unchanged.
  SubmitResult submit(const Submission& submission);

  std::vector<RatingRecord> export_ratings() const;
  Benchmark export_rewrites() const;
  nlohmann::json progress() const;
  // Full state dump; equal snapshots mean equal state.
  nlohmann::json snapshot() const;

  const ServiceConfig& config() const { return config_; }

 private:
  struct RewriteState {
    std::string pair_id;
    std::string author;
    std::string author_worker;  // empty for preloaded rewrites
    std::vector<std::string> sentences;
  };
  struct PairState {
    std::string complex_text;
    std::vector<std::string> rewrite_ids;  // creation order
    int worker_rewrites = 0;
  };
  struct TaskState {
    std::set<std::string> fulfilled_by;
    std::set<std::string> open;  // assigned, not yet submitted
  };
  struct FlagRecord {
    std::string pair_id;
    std::string worker_id;
    std::string flag;
  };

  int quota(TaskKind kind) const;
  std::optional<Task> describe(const std::string& task_id,
                               const std::string& worker) const;
  std::string reject_reason(const Submission& s, TaskKind& kind) const;

  void append(const nlohmann::json& event);
  void apply(const nlohmann::json& event);

  ServiceConfig config_;
  mutable std::shared_mutex mutex_;
  std::ofstream log_;

  std::map<std::string, PairState> pairs_;
  std::map<std::string, RewriteState> rewrites_;
  std::set<std::string> workers_;
  std::map<std::string, TaskState> tasks_;
  std::vector<RatingRecord> ratings_;  // submission order
  std::vector<FlagRecord> flags_;
  std::vector<std::string> submitted_at_;
  size_t events_ = 0;
};

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_RATING_SERVICE_H_
