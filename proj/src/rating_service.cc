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

#include "splitrephrase/rating_service.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <tuple>

#include "splitrephrase/annotation.h"

namespace splitrephrase {
namespace {

using nlohmann::json;

constexpr char kRewritePrefix[] = "rewrite/";
constexpr char kRatePrefix[] = "rate/";

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

json payload_to_json(const RatingPayload& p) {
  return {{"sensical", p.sensical},       {"grammatical", p.grammatical},
          {"miss_fact", p.miss_fact},     {"new_fact", p.new_fact},
          {"wrong_split", p.wrong_split}, {"need_more_split", p.need_more_split}};
}

}  // namespace

std::string to_string(TaskKind kind) {
  return kind == TaskKind::kRewrite ? "rewrite" : "rate";
}

TaskKind parse_task_kind(std::string_view name) {
  if (name == "rewrite") return TaskKind::kRewrite;
  if (name == "rate") return TaskKind::kRate;
  throw Error("unknown task kind '" + std::string(name) +
              "' (expected rewrite or rate)");
}

std::string to_string(RewriteFlag flag) {
  switch (flag) {
    case RewriteFlag::kNone:
      return "none";
    case RewriteFlag::kTooSimple:
      return "too_simple";
    case RewriteFlag::kProblematic:
      return "problematic";
  }
  return "none";
}

RewriteFlag parse_rewrite_flag(std::string_view name) {
  if (name == "none") return RewriteFlag::kNone;
  if (name == "too_simple") return RewriteFlag::kTooSimple;
  if (name == "problematic") return RewriteFlag::kProblematic;
  throw Error("unknown rewrite flag '" + std::string(name) + "'");
}

json to_json(const Task& t) {
  json j = {{"task_id", t.task_id},
            {"kind", to_string(t.kind)},
            {"pair_id", t.pair_id},
            {"original_text", t.original_text},
            {"assigned_to", t.assigned_to}};
  if (t.kind == TaskKind::kRate) {
    std::string joined;
    for (const auto& s : t.rewritten_sentences) {
      if (!joined.empty()) joined += ' ';
      joined += s;
    }
    j["rewrite_id"] = t.rewrite_id;
    j["rewritten_text"] = joined;
    j["rewritten_sentences"] = t.rewritten_sentences;
  }
  return j;
}

Submission submission_from_json(const json& j) {
  Submission s;
  try {
    s.task_id = j.at("task_id").get<std::string>();
    s.worker_id = j.at("worker_id").get<std::string>();
    const json& p = j.at("payload");
    if (p.contains("sentences")) {
      RewritePayload r;
      r.sentences = p.at("sentences").get<std::vector<std::string>>();
      r.flag = parse_rewrite_flag(p.value("flag", std::string("none")));
      s.payload = std::move(r);
    } else {
      RatingPayload r;
      r.sensical = p.at("sensical").get<int>();
      r.grammatical = p.at("grammatical").get<int>();
      r.miss_fact = p.at("miss_fact").get<bool>();
      r.new_fact = p.at("new_fact").get<bool>();
      r.wrong_split = p.at("wrong_split").get<bool>();
      r.need_more_split = p.at("need_more_split").get<bool>();
      s.payload = r;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed submission: ") + e.what());
  }
  return s;
}

RatingService::RatingService(ServiceConfig config) : config_(std::move(config)) {
  if (config_.rewrites_per_pair < 1 || config_.ratings_per_rewrite < 1) {
    throw Error("task quotas must be positive");
  }
  if (!config_.clock) config_.clock = utc_now;
  if (config_.log_path.empty()) return;
  if (std::filesystem::exists(config_.log_path)) {
    std::ifstream in(config_.log_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        apply(json::parse(line));
      } catch (const std::exception& e) {
        throw ParseError("event log " + config_.log_path + " line " +
                         std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  log_.open(config_.log_path, std::ios::app);
  if (!log_) throw Error("cannot open event log '" + config_.log_path + "'");
}

int RatingService::quota(TaskKind kind) const {
  return kind == TaskKind::kRewrite ? config_.rewrites_per_pair
                                    : config_.ratings_per_rewrite;
}

void RatingService::append(const json& event) {
  if (log_.is_open()) {
    log_ << event.dump() << '\n';
    log_.flush();
    if (!log_) throw Error("event log write failed");
  }
  apply(event);
}

void RatingService::apply(const json& e) {
  const std::string type = e.at("event").get<std::string>();
  if (type == "pair_added") {
    const std::string pair_id = e.at("pair_id").get<std::string>();
    PairState& p = pairs_[pair_id];
    p.complex_text = e.at("complex").get<std::string>();
    tasks_[kRewritePrefix + pair_id];
    for (const auto& r : e.at("rewrites")) {
      const std::string id = r.at("rewrite_id").get<std::string>();
      rewrites_[id] = {pair_id, r.at("author").get<std::string>(), "",
                       r.at("sentences").get<std::vector<std::string>>()};
      p.rewrite_ids.push_back(id);
      tasks_[kRatePrefix + id];
    }
  } else if (type == "worker_registered") {
    workers_.insert(e.at("worker_id").get<std::string>());
  } else if (type == "task_assigned") {
    tasks_.at(e.at("task_id").get<std::string>())
        .open.insert(e.at("worker_id").get<std::string>());
  } else if (type == "submission") {
    const std::string task_id = e.at("task_id").get<std::string>();
    const std::string worker = e.at("worker_id").get<std::string>();
    TaskState& t = tasks_.at(task_id);
    t.open.erase(worker);
    t.fulfilled_by.insert(worker);
    submitted_at_.push_back(e.at("submitted_at").get<std::string>());
    const json& p = e.at("payload");
    if (starts_with(task_id, kRatePrefix)) {
      json record = p;
      record["rewrite_id"] = task_id.substr(std::string(kRatePrefix).size());
      record["rater_id"] = worker;
      ratings_.push_back(rating_from_json(record));
    } else {
      const std::string pair_id =
          task_id.substr(std::string(kRewritePrefix).size());
      const std::string flag = p.at("flag").get<std::string>();
      if (flag != "none") {
        flags_.push_back({pair_id, worker, flag});
      } else {
        const std::string id = e.at("rewrite_id").get<std::string>();
        PairState& pair = pairs_.at(pair_id);
        ++pair.worker_rewrites;
        pair.rewrite_ids.push_back(id);
        rewrites_[id] = {pair_id, kHumanAuthor, worker,
                         p.at("sentences").get<std::vector<std::string>>()};
        tasks_[kRatePrefix + id];
      }
    }
  } else {
    throw Error("unknown event '" + type + "'");
  }
  ++events_;
}

void RatingService::add_pair(const ComplexSimplePair& pair) {
  std::unique_lock lock(mutex_);
  if (pairs_.count(pair.pair_id)) {
    throw Error("duplicate pair_id '" + pair.pair_id + "'");
  }
  json rewrites = json::array();
  for (const auto& r : pair.rewrites) {
    if (rewrites_.count(r.rewrite_id)) {
      throw Error("duplicate rewrite_id '" + r.rewrite_id + "'");
    }
    rewrites.push_back({{"rewrite_id", r.rewrite_id},
                        {"author", r.author},
                        {"sentences", r.sentences}});
  }
  append({{"event", "pair_added"},
          {"pair_id", pair.pair_id},
          {"complex", pair.complex_text},
          {"rewrites", rewrites}});
}

void RatingService::add_benchmark(const Benchmark& benchmark) {
  for (const auto& p : benchmark.pairs) add_pair(p);
}

void RatingService::register_worker(const std::string& worker_id) {
  if (worker_id.empty()) throw Error("empty worker_id");
  std::unique_lock lock(mutex_);
  if (workers_.count(worker_id)) return;
  append({{"event", "worker_registered"}, {"worker_id", worker_id}});
}

std::optional<Task> RatingService::describe(const std::string& task_id,
                                            const std::string& worker) const {
  Task t;
  t.task_id = task_id;
  t.assigned_to = worker;
  if (starts_with(task_id, kRewritePrefix)) {
    t.kind = TaskKind::kRewrite;
    t.pair_id = task_id.substr(std::string(kRewritePrefix).size());
  } else {
    t.kind = TaskKind::kRate;
    t.rewrite_id = task_id.substr(std::string(kRatePrefix).size());
    const RewriteState& r = rewrites_.at(t.rewrite_id);
    t.pair_id = r.pair_id;
    t.rewritten_sentences = r.sentences;
  }
  t.original_text = pairs_.at(t.pair_id).complex_text;
  return t;
}

std::optional<Task> RatingService::next_task(const std::string& worker_id,
                                             TaskKind kind) {
  std::unique_lock lock(mutex_);
  if (!workers_.count(worker_id)) {
    throw Error("unknown worker '" + worker_id + "'");
  }
  const std::string prefix = kind == TaskKind::kRewrite ? kRewritePrefix
                                                        : kRatePrefix;
  for (const auto& [id, state] : tasks_) {
    if (starts_with(id, prefix) && state.open.count(worker_id)) {
      return describe(id, worker_id);
    }
  }

  // (coverage, pair_id, rewrite_id, task_id) of the best candidate so far.
  std::optional<std::tuple<size_t, std::string, std::string, std::string>> best;
  for (const auto& [id, state] : tasks_) {
    if (!starts_with(id, prefix)) continue;
    if (state.fulfilled_by.count(worker_id)) continue;
    const size_t coverage = state.fulfilled_by.size() + state.open.size();
    if (coverage >= static_cast<size_t>(quota(kind))) continue;
    std::string pair_id;
    std::string rewrite_id;
    if (kind == TaskKind::kRewrite) {
      pair_id = id.substr(prefix.size());
    } else {
      rewrite_id = id.substr(prefix.size());
      const RewriteState& r = rewrites_.at(rewrite_id);
      if (r.author_worker == worker_id) continue;
      pair_id = r.pair_id;
    }
    auto candidate = std::make_tuple(coverage, pair_id, rewrite_id, id);
    if (!best || candidate < *best) best = std::move(candidate);
  }
  if (!best) return std::nullopt;
  const std::string task_id = std::get<3>(*best);
  append({{"event", "task_assigned"},
          {"task_id", task_id},
          {"worker_id", worker_id}});
  return describe(task_id, worker_id);
}

std::string RatingService::reject_reason(const Submission& s,
                                         TaskKind& kind) const {
  if (!workers_.count(s.worker_id)) return "unknown worker '" + s.worker_id + "'";
  auto it = tasks_.find(s.task_id);
  if (it == tasks_.end()) return "unknown task '" + s.task_id + "'";
  kind = starts_with(s.task_id, kRewritePrefix) ? TaskKind::kRewrite
                                                : TaskKind::kRate;
  if (it->second.fulfilled_by.count(s.worker_id)) {
    return "double submission by '" + s.worker_id + "'";
  }
  if (!it->second.open.count(s.worker_id)) {
    return "task '" + s.task_id + "' is not assigned to '" + s.worker_id + "'";
  }
  const bool rewrite_payload =
      std::holds_alternative<RewritePayload>(s.payload);
  if (rewrite_payload != (kind == TaskKind::kRewrite)) {
    return "payload does not match a " + to_string(kind) + " task";
  }
  if (rewrite_payload) {
    const auto& p = std::get<RewritePayload>(s.payload);
    if (p.flag == RewriteFlag::kNone && p.sentences.size() < 2) {
      return "a rewrite needs at least two sentences unless flagged";
    }
    for (const auto& sentence : p.sentences) {
      if (sentence.find_first_not_of(" \t\r\n") == std::string::npos) {
        return "empty sentence in rewrite";
      }
    }
  } else {
    const auto& p = std::get<RatingPayload>(s.payload);
    for (int v : {p.sensical, p.grammatical}) {
      if (v < 0 || v > kTopScore) return "rating outside 0..5";
    }
  }
  return "";
}

SubmitResult RatingService::submit(const Submission& s) {
  std::unique_lock lock(mutex_);
  SubmitResult result;
  TaskKind kind = TaskKind::kRewrite;
  result.reason = reject_reason(s, kind);
  if (!result.reason.empty()) return result;

  json event = {{"event", "submission"},
                {"task_id", s.task_id},
                {"worker_id", s.worker_id},
                {"submitted_at", config_.clock()}};
  if (kind == TaskKind::kRewrite) {
    const auto& p = std::get<RewritePayload>(s.payload);
    event["payload"] = {{"sentences", p.sentences},
                        {"flag", to_string(p.flag)}};
    if (p.flag == RewriteFlag::kNone) {
      const std::string pair_id =
          s.task_id.substr(std::string(kRewritePrefix).size());
      int k = pairs_.at(pair_id).worker_rewrites + 1;
      std::string id;
      do {
        id = pair_id + "-w" + std::to_string(k++);
      } while (rewrites_.count(id));
      event["rewrite_id"] = id;
      result.rewrite_id = id;
    }
  } else {
    event["payload"] = payload_to_json(std::get<RatingPayload>(s.payload));
  }
  append(event);
  result.accepted = true;
  return result;
}

std::vector<RatingRecord> RatingService::export_ratings() const {
  std::shared_lock lock(mutex_);
  return ratings_;
}

Benchmark RatingService::export_rewrites() const {
  std::shared_lock lock(mutex_);
  Benchmark b;
  b.name = "collected";
  b.provenance = "rating service export";
  for (const auto& [pair_id, pair] : pairs_) {
    if (pair.rewrite_ids.empty()) continue;
    ComplexSimplePair out{pair_id, pair.complex_text, {}};
    for (const auto& id : pair.rewrite_ids) {
      const RewriteState& r = rewrites_.at(id);
      out.rewrites.push_back({id, r.author, r.sentences});
    }
    b.pairs.push_back(std::move(out));
  }
  return b;
}

json RatingService::progress() const {
  std::shared_lock lock(mutex_);
  auto pool = [&](TaskKind kind) {
    const std::string prefix =
        kind == TaskKind::kRewrite ? kRewritePrefix : kRatePrefix;
    size_t tasks = 0, fulfilled = 0, open = 0, complete = 0;
    for (const auto& [id, state] : tasks_) {
      if (!starts_with(id, prefix)) continue;
      ++tasks;
      fulfilled += state.fulfilled_by.size();
      open += state.open.size();
      complete +=
          state.fulfilled_by.size() >= static_cast<size_t>(quota(kind));
    }
    return json{{"quota", quota(kind)},
                {"tasks", tasks},
                {"fulfilled", fulfilled},
                {"open", open},
                {"complete_tasks", complete}};
  };
  return {{"pairs", pairs_.size()},
          {"rewrites", rewrites_.size()},
          {"ratings", ratings_.size()},
          {"flags", flags_.size()},
          {"workers", workers_.size()},
          {"rewrite", pool(TaskKind::kRewrite)},
          {"rate", pool(TaskKind::kRate)}};
}

json RatingService::snapshot() const {
  std::shared_lock lock(mutex_);
  json pairs = json::object();
  for (const auto& [id, p] : pairs_) {
    pairs[id] = {{"complex", p.complex_text},
                 {"rewrite_ids", p.rewrite_ids},
                 {"worker_rewrites", p.worker_rewrites}};
  }
  json rewrites = json::object();
  for (const auto& [id, r] : rewrites_) {
    rewrites[id] = {{"pair_id", r.pair_id},
                    {"author", r.author},
                    {"author_worker", r.author_worker},
                    {"sentences", r.sentences}};
  }
  json tasks = json::object();
  for (const auto& [id, t] : tasks_) {
    tasks[id] = {{"fulfilled_by", t.fulfilled_by}, {"open", t.open}};
  }
  json ratings = json::array();
  for (const auto& r : ratings_) ratings.push_back(to_json(r));
  json flags = json::array();
  for (const auto& f : flags_) {
    flags.push_back({{"pair_id", f.pair_id},
                     {"worker_id", f.worker_id},
                     {"flag", f.flag}});
  }
  return {{"pairs", pairs},         {"rewrites", rewrites},
          {"workers", workers_},    {"tasks", tasks},
          {"ratings", ratings},     {"flags", flags},
          {"submitted_at", submitted_at_}, {"events", events_}};
}

}  // namespace splitrephrase
