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
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "splitrephrase/beta.h"
#include "splitrephrase/bleu.h"
#include "splitrephrase/cli.h"
#include "splitrephrase/correlation.h"
#include "splitrephrase/datasets.h"
#include "splitrephrase/manifest.h"
#include "splitrephrase/rating_server.h"
#include "splitrephrase/rating_service.h"
#include "splitrephrase/ratings.h"
#include "splitrephrase/rule_engine.h"

namespace splitrephrase {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw MissingInputError("input file not found: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInputError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

// Writes to the --out file, or to `out` when none was given.
void emit(const std::string& path, const std::string& content,
          std::ostream& out) {
  if (to_stdout(path)) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

void finish(RunManifest& m, const std::string& manifest_flag,
            const std::string& primary_output) {
  if (!to_stdout(primary_output)) m.outputs.push_back(primary_output);
  write_manifest(m, manifest_path(manifest_flag, primary_output, m.command));
}

std::string stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

Benchmark read_benchmark(const std::string& path,
                         const BenchmarkInputOptions& b, size_t position,
                         RunManifest& m) {
  const std::string text = read_file(path);
  m.add_input(path);
  LoadOptions lo;
  lo.format = parse_benchmark_format(b.format);
  lo.separator = b.separator;
  lo.name = position < b.names.size() ? b.names[position] : stem(path);
  Benchmark bench;
  try {
    bench = parse_benchmark(text, lo);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  bench.provenance = "loaded from " + path;
  return bench;
}

json bench_config(const BenchmarkInputOptions& b) {
  return {{"format", b.format}, {"separator", b.separator}, {"names", b.names}};
}

std::vector<AnnotatedSentence> read_annotations(const std::string& conllu,
                                                const std::string& srl,
                                                RunManifest& m) {
  const std::string text = read_file(conllu);
  m.add_input(conllu);
  std::vector<AnnotatedSentence> sentences;
  try {
    sentences = parse_conllu(text);
  } catch (const Error& e) {
    throw ParseError(conllu + ": " + e.what());
  }
  if (!srl.empty()) {
    const std::string srl_text = read_file(srl);
    m.add_input(srl);
    try {
      attach_frames(sentences, parse_srl(srl_text));
    } catch (const Error& e) {
      throw ParseError(srl + ": " + e.what());
    }
  }
  return sentences;
}

std::vector<RatingRecord> read_ratings(const std::string& path,
                                       RunManifest& m) {
  const std::string text = read_file(path);
  m.add_input(path);
  try {
    return parse_ratings_jsonl(text);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string join_sentences(const std::vector<std::string>& sentences) {
  return join(sentences, " ");
}

std::string model_of(const std::string& author) {
  const std::string prefix = "model:";
  if (author.rfind(prefix, 0) == 0) return author.substr(prefix.size());
  return author;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// ---- evaluate --------------------------------------------------------------

struct Hypothesis {
  std::string pair_id;
  std::string rewrite_id;
  std::string model;
  std::string text;
};

// Split output lines, or canonical benchmark lines whose model-authored
// rewrites become hypotheses.
std::vector<Hypothesis> read_hypotheses(const std::string& path,
                                        const std::string& model_override,
                                        RunManifest& m) {
  const std::string text = read_file(path);
  m.add_input(path);
  std::vector<Hypothesis> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      const std::string pair_id = j.at("pair_id").get<std::string>();
      if (j.contains("rewrites")) {
        for (const auto& r : j.at("rewrites")) {
          const std::string author = r.at("author").get<std::string>();
          if (author == kHumanAuthor) continue;
          out.push_back({pair_id, r.at("rewrite_id").get<std::string>(),
                         model_override.empty() ? model_of(author)
                                                : model_override,
                         join_sentences(r.at("sentences")
                                            .get<std::vector<std::string>>())});
        }
      } else {
        Hypothesis h;
        h.pair_id = pair_id;
        h.rewrite_id = j.value("rewrite_id", pair_id);
        h.model = model_override.empty()
                      ? model_of(j.value("author", std::string("model:rule")))
                      : model_override;
        h.text = join_sentences(
            j.at("sentences").get<std::vector<std::string>>());
        out.push_back(std::move(h));
      }
    } catch (const json::exception& e) {
      throw ParseError(path + " line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return out;
}

// References for a rewrite: every other rewrite of the same pair.
std::vector<std::string> references_for(const ComplexSimplePair& pair,
                                        const std::string& exclude_id,
                                        bool human_only) {
  std::vector<std::string> refs;
  for (const auto& r : pair.rewrites) {
    if (r.rewrite_id == exclude_id) continue;
    if (human_only && r.author != kHumanAuthor) continue;
    refs.push_back(join_sentences(r.sentences));
  }
  return refs;
}

json report_json(const BleuReport& r) {
  return {{"score", r.score},
          {"precisions", r.precisions},
          {"matches", r.matches},
          {"totals", r.totals},
          {"brevity_penalty", r.brevity_penalty},
          {"hypothesis_length", r.hypothesis_length},
          {"reference_length", r.reference_length},
          {"tokenizer", r.tokenizer},
          {"smoothing", r.smoothing}};
}

void evaluate_bleu(const EvaluateOptions& o, std::ostream& out,
                   std::ostream& err, RunManifest& m) {
  if (o.inputs.empty()) throw Error("evaluate: --input is required");
  if (o.refs.empty()) throw Error("evaluate --mode bleu: --refs is required");
  if (o.refs.size() != 1 && o.refs.size() != o.inputs.size()) {
    throw Error("evaluate: give one --refs, or one per --input");
  }
  json per_sentence = json::array();
  json corpora = json::array();
  std::string text;
  for (size_t i = 0; i < o.inputs.size(); ++i) {
    const size_t ref_pos = o.refs.size() == 1 ? 0 : i;
    const Benchmark bench =
        read_benchmark(o.refs[ref_pos], o.bench, ref_pos, m);
    const auto hyps = read_hypotheses(o.inputs[i], o.model, m);
    std::vector<std::string> orphans;
    std::map<std::string, std::pair<std::vector<std::string>,
                                    std::vector<std::vector<std::string>>>>
        by_model;
    for (const auto& h : hyps) {
      const ComplexSimplePair* pair = bench.find_pair(h.pair_id);
      std::vector<std::string> refs;
      if (pair) refs = references_for(*pair, h.rewrite_id, false);
      if (refs.empty()) {
        orphans.push_back(h.pair_id);
        continue;
      }
      const SentenceBleu sb = bleu_sentence(h.text, refs);
      if (sb.empty_hypothesis) {
        err << "warning: empty hypothesis for " << h.rewrite_id << "\n";
      }
      per_sentence.push_back({{"rewrite_id", h.rewrite_id},
                              {"pair_id", h.pair_id},
                              {"benchmark", bench.name},
                              {"model", h.model},
                              {"bleu", sb.score},
                              {"empty_hypothesis", sb.empty_hypothesis},
                              {"smoothing", sb.report.smoothing}});
      by_model[h.model].first.push_back(h.text);
      by_model[h.model].second.push_back(std::move(refs));
    }
    if (!orphans.empty()) {
      throw Error("evaluate: hypotheses without references in " +
                  o.refs[ref_pos] + ": " + join(orphans, ", "));
    }
    for (const auto& [model, data] : by_model) {
      const BleuReport r = bleu_corpus(data.first, data.second);
      json entry = report_json(r);
      entry["benchmark"] = bench.name;
      entry["model"] = model;
      entry["sentences"] = data.first.size();
      corpora.push_back(entry);
      text += bench.name + "  " + model + "  BLEU " + fixed(r.score, 2) +
              "  (BP " + fixed(r.brevity_penalty, 3) + ", " +
              std::to_string(data.first.size()) + " sentences)\n";
    }
  }
  const json report = {{"mode", "bleu"},
                       {"corpus", corpora},
                       {"per_sentence", per_sentence}};
  if (to_stdout(o.out)) {
    out << report.dump(2) << '\n';
  } else {
    emit(o.out, report.dump(2) + "\n", out);
    out << text;
  }
}

void evaluate_ratings(const EvaluateOptions& o, std::ostream& out,
                      std::ostream& err, RunManifest& m) {
  if (o.inputs.empty()) throw Error("evaluate: --input is required");
  if (o.ratings.empty()) {
    throw Error("evaluate --mode ratings: --ratings is required");
  }
  if (!o.refs.empty() && o.refs.size() != o.inputs.size()) {
    throw Error("evaluate: give one --refs per --input");
  }
  const auto ratings = read_ratings(o.ratings, m);
  std::map<std::string, std::vector<RatingRecord>> by_rewrite;
  for (const auto& r : ratings) by_rewrite[r.rewrite_id].push_back(r);

  std::set<std::string> joined;
  json groups = json::array();
  std::string text;
  for (size_t i = 0; i < o.inputs.size(); ++i) {
    const Benchmark pool = read_benchmark(o.inputs[i], o.bench, i, m);
    std::optional<Benchmark> gold;
    if (!o.refs.empty()) {
      gold = read_benchmark(o.refs[i], o.bench, o.bench.names.size(), m);
    }
    // author -> (ratings, hypotheses, references)
    struct Group {
      std::vector<RatingRecord> ratings;
      std::vector<std::string> hyps;
      std::vector<std::vector<std::string>> refs;
    };
    std::map<std::string, Group> by_author;
    for (const auto& pair : pool.pairs) {
      for (const auto& rw : pair.rewrites) {
        auto it = by_rewrite.find(rw.rewrite_id);
        if (it == by_rewrite.end()) continue;
        joined.insert(rw.rewrite_id);
        Group& g = by_author[rw.author];
        g.ratings.insert(g.ratings.end(), it->second.begin(), it->second.end());
        std::vector<std::string> refs;
        if (gold) {
          if (const auto* gp = gold->find_pair(pair.pair_id)) {
            refs = references_for(*gp, rw.rewrite_id, false);
          }
        } else {
          refs = references_for(pair, rw.rewrite_id, true);
        }
        if (!refs.empty()) {
          g.hyps.push_back(join_sentences(rw.sentences));
          g.refs.push_back(std::move(refs));
        }
      }
    }
    std::vector<CriteriaRow> rows;
    for (const auto& [author, g] : by_author) {
      CriteriaRow row{model_of(author), aggregate_ratings(g.ratings), {}};
      if (!g.hyps.empty()) row.bleu = bleu_corpus(g.hyps, g.refs).score;
      json entry = {{"benchmark", pool.name},
                    {"author", author},
                    {"summary", to_json(row.summary)},
                    {"bleu_sentences", g.hyps.size()}};
      entry["bleu"] = row.bleu ? json(*row.bleu) : json(nullptr);
      groups.push_back(entry);
      rows.push_back(std::move(row));
    }
    text += format_criteria_table(pool.name, rows) + "\n";
  }
  std::vector<std::string> orphans;
  for (const auto& [id, unused] : by_rewrite) {
    if (!joined.count(id)) orphans.push_back(id);
  }
  if (!orphans.empty()) {
    throw Error("evaluate: ratings for unknown rewrite_ids: " +
                join(orphans, ", "));
  }
  (void)err;
  const json report = {{"mode", "ratings"}, {"groups", groups}};
  if (!to_stdout(o.out)) emit(o.out, report.dump(2) + "\n", out);
  out << text;
}

// ---- correlate -------------------------------------------------------------

constexpr int kCriteria = 7;
const char* const kCriterionNames[kCriteria] = {
    "sensical",    "grammatical",     "miss_fact", "new_fact",
    "wrong_split", "need_more_split", "correct"};

// Per-rewrite means; boolean criteria as the share answering "no".
std::array<double, kCriteria> criterion_means(
    const std::vector<RatingRecord>& records) {
  std::array<double, kCriteria> v{};
  for (const auto& r : records) {
    v[0] += r.sensical;
    v[1] += r.grammatical;
    v[2] += !r.miss_fact;
    v[3] += !r.new_fact;
    v[4] += !r.wrong_split;
    v[5] += !r.need_more_split;
    v[6] += is_correct(r);
  }
  for (double& x : v) x /= static_cast<double>(records.size());
  return v;
}

struct SentenceScore {
  std::string benchmark;
  std::string model;
  double bleu = 0.0;
  std::array<double, kCriteria> criteria{};
};

json read_per_sentence(const std::string& path, RunManifest& m) {
  const std::string text = read_file(path);
  m.add_input(path);
  try {
    const json whole = json::parse(text);
    if (whole.is_object() && whole.contains("per_sentence")) {
      return whole.at("per_sentence");
    }
  } catch (const json::exception&) {
    // Not a single document; read as JSONL below.
  }
  json rows = json::array();
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError(path + " line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return rows;
}

}  // namespace

void cmd_split(const SplitOptions& o, std::ostream& out, std::ostream& err) {
  RunManifest m;
  m.command = "split";
  if (o.annotations.empty()) throw Error("split: --annotations is required");
  const auto sentences = read_annotations(o.annotations, o.srl, m);
  EngineConfig config;
  config.minimum_span = o.min_span;
  config.copula_insertion = !o.no_copula;
  m.config = {{"minimum_span", config.minimum_span},
              {"copula_insertion", config.copula_insertion},
              {"model", o.model},
              {"modifier_labels", config.modifier_labels()}};
  std::string lines;
  size_t changed = 0;
  for (const auto& s : sentences) {
    const SplitResult r = split_and_rephrase(s, config);
    changed += r.changed;
    ordered_json j;
    j["pair_id"] = s.sentence_id;
    j["rewrite_id"] = s.sentence_id + "-" + o.model;
    j["author"] = "model:" + o.model;
    j["sentences"] = r.sentences;
    j["changed"] = r.changed;
    j["trace"] = ordered_json::array();
    for (const auto& t : r.trace) {
      j["trace"].push_back(
          {{"handler", t.handler}, {"trigger_index", t.trigger_index}});
    }
    lines += j.dump() + "\n";
  }
  emit(o.out, lines, out);
  if (!sentences.empty()) {
    err << "split: " << changed << "/" << sentences.size()
        << " sentences changed ("
        << fixed(100.0 * changed / sentences.size(), 1) << "%)\n";
  }
  finish(m, o.manifest, o.out);
}

void cmd_evaluate(const EvaluateOptions& o, std::ostream& out,
                  std::ostream& err) {
  RunManifest m;
  m.command = "evaluate";
  m.config = {{"mode", o.mode},
              {"tokenizer", default_tokenizer().name},
              {"sentence_smoothing", kAddOneSmoothing},
              {"model", o.model},
              {"benchmark", bench_config(o.bench)}};
  if (o.mode == "bleu") {
    evaluate_bleu(o, out, err, m);
  } else if (o.mode == "ratings") {
    evaluate_ratings(o, out, err, m);
  } else {
    throw Error("evaluate: --mode must be bleu or ratings");
  }
  finish(m, o.manifest, o.out);
}

void cmd_reliability(const ReliabilityOptions& o, std::ostream& out,
                     std::ostream& err) {
  RunManifest m;
  m.command = "reliability";
  if (o.ratings.empty() || o.expert.empty()) {
    throw Error("reliability: --ratings and --expert are required");
  }
  std::map<std::string, std::vector<RatingRecord>> crowd;
  for (auto& r : read_ratings(o.ratings, m)) {
    crowd[r.rewrite_id].push_back(std::move(r));
  }
  const std::string expert_text = read_file(o.expert);
  m.add_input(o.expert);
  std::map<std::string, bool> expert;
  {
    std::istringstream in(expert_text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        const json j = json::parse(line);
        const std::string id = j.at("rewrite_id").get<std::string>();
        const bool correct = j.contains("correct")
                                 ? j.at("correct").get<bool>()
                                 : is_correct(rating_from_json(j));
        if (!expert.emplace(id, correct).second) {
          throw Error("duplicate expert verdict for '" + id + "'");
        }
      } catch (const json::exception& e) {
        throw ParseError(o.expert + " line " + std::to_string(line_no) +
                         ": " + e.what());
      }
    }
  }
  const auto fits = bucket_and_fit(crowd, expert);

  json buckets = json::array();
  std::string table =
      "bucket  n   k   alpha  beta   mean    10%     90%\n";
  for (const auto& f : fits) {
    const double lo = beta_quantile(f, 0.10);
    const double hi = beta_quantile(f, 0.90);
    json j = to_json(f);
    j["mean"] = f.mean();
    j["quantile_10"] = lo;
    j["quantile_90"] = hi;
    buckets.push_back(j);
    char row[160];
    std::snprintf(row, sizeof(row),
                  "%-6d  %-3d %-3d %-6.0f %-6.0f %.4f  %.4f  %.4f\n", f.bucket,
                  f.support_count, f.success_count, f.alpha, f.beta, f.mean(),
                  lo, hi);
    table += row;
  }

  std::string csv = "x";
  for (const auto& f : fits) csv += ",bucket_" + std::to_string(f.bucket);
  csv += '\n';
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    char cell[64];
    std::snprintf(cell, sizeof(cell), "%.3f", x);
    csv += cell;
    for (const auto& f : fits) {
      std::snprintf(cell, sizeof(cell), ",%.12g", beta_pdf(f, x));
      csv += cell;
    }
    csv += '\n';
  }

  std::string curves = o.curves;
  if (curves.empty()) {
    curves = to_stdout(o.out) ? "reliability.curves.csv"
                              : o.out + ".curves.csv";
  }
  std::ofstream cf(curves, std::ios::binary);
  if (!cf) throw Error("cannot write '" + curves + "'");
  cf << csv;
  m.outputs.push_back(curves);
  m.config = {{"confidence_quantiles", {0.10, 0.90}},
              {"prior", "Beta(1,1)"},
              {"curve_step", 0.001}};
  const json report = {{"buckets", buckets}, {"curves", curves}};
  if (to_stdout(o.out)) {
    out << report.dump(2) << '\n';
  } else {
    emit(o.out, report.dump(2) + "\n", out);
    out << table;
  }
  (void)err;
  finish(m, o.manifest, o.out);
}

void cmd_correlate(const CorrelateOptions& o, std::ostream& out,
                   std::ostream& err) {
  RunManifest m;
  m.command = "correlate";
  if (o.ratings.empty() || o.input.empty()) {
    throw Error("correlate: --ratings and --input are required");
  }
  std::map<std::string, std::vector<RatingRecord>> by_rewrite;
  for (auto& r : read_ratings(o.ratings, m)) {
    by_rewrite[r.rewrite_id].push_back(std::move(r));
  }
  const json rows_in = read_per_sentence(o.input, m);

  std::vector<SentenceScore> scores;
  size_t unrated = 0;
  std::set<std::string> seen;
  for (const auto& row : rows_in) {
    const std::string id = row.at("rewrite_id").get<std::string>();
    auto it = by_rewrite.find(id);
    if (it == by_rewrite.end()) {
      ++unrated;
      continue;
    }
    if (!seen.insert(id).second) {
      throw Error("correlate: duplicate BLEU row for '" + id + "'");
    }
    scores.push_back({row.value("benchmark", std::string("-")),
                      row.value("model", std::string("-")),
                      row.at("bleu").get<double>(),
                      criterion_means(it->second)});
  }
  if (unrated > 0) {
    err << "correlate: " << unrated << " BLEU rows have no ratings\n";
  }
  const size_t unmatched = by_rewrite.size() - seen.size();
  if (unmatched > 0) {
    err << "correlate: " << unmatched << " rated rewrites have no BLEU row\n";
  }

  std::vector<std::string> levels = o.group_by;
  if (levels.empty()) levels = {"benchmark+model", "benchmark", "model", "all"};
  for (const auto& l : levels) {
    if (l != "benchmark+model" && l != "benchmark" && l != "model" &&
        l != "all") {
      throw Error("correlate: unknown --group-by '" + l + "'");
    }
  }
  m.config = {{"group_by", levels},
              {"alpha", kSignificanceLevel},
              {"p_value", "exact permutation for n<=10, t-approximation above"},
              {"boolean_criteria", "share answering no"}};

  json table_rows = json::array();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"group", "n"};
  for (const char* c : kCriterionNames) header.push_back(c);
  cells.push_back(header);
  for (const auto& level : levels) {
    const bool by_bench = level == "benchmark+model" || level == "benchmark";
    const bool by_model = level == "benchmark+model" || level == "model";
    std::map<std::pair<std::string, std::string>, std::vector<const SentenceScore*>>
        groups;
    for (const auto& s : scores) {
      groups[{by_bench ? s.benchmark : "all", by_model ? s.model : "all"}]
          .push_back(&s);
    }
    for (const auto& [key, members] : groups) {
      json row = {{"benchmark", key.first},
                  {"model", key.second},
                  {"level", level},
                  {"n", members.size()}};
      std::vector<std::string> line = {key.first + " / " + key.second,
                                       std::to_string(members.size())};
      std::vector<double> bleu;
      for (const auto* s : members) bleu.push_back(s->bleu);
      for (int c = 0; c < kCriteria; ++c) {
        std::vector<double> y;
        for (const auto* s : members) y.push_back(s->criteria[c]);
        json cell;
        if (members.size() < 3) {
          cell = {{"status", "insufficient"}};
          line.push_back("insufficient");
        } else {
          try {
            const CorrelationResult r = spearman(bleu, y);
            cell = {{"rho", r.rho},
                    {"p_value", r.p_value},
                    {"significant", r.significant},
                    {"n", r.n},
                    {"method", to_string(r.method)}};
            line.push_back(fixed(r.rho, 3) + (r.significant ? "" : "†"));
          } catch (const Error&) {
            cell = {{"status", "undefined"}};
            line.push_back("undefined");
          }
        }
        row[kCriterionNames[c]] = cell;
      }
      table_rows.push_back(row);
      cells.push_back(std::move(line));
    }
  }

  // Display widths count the dagger as one column.
  auto width = [](const std::string& s) {
    size_t w = 0;
    for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
    return w;
  };
  std::vector<size_t> widths(header.size(), 0);
  for (const auto& r : cells) {
    for (size_t c = 0; c < r.size(); ++c) {
      widths[c] = std::max(widths[c], width(r[c]));
    }
  }
  std::string text;
  for (const auto& r : cells) {
    for (size_t c = 0; c < r.size(); ++c) {
      const std::string pad(widths[c] - width(r[c]), ' ');
      text += c == 0 ? r[c] + pad : "  " + pad + r[c];
    }
    text += '\n';
  }
  text += "† p >= .05\n";

  const json report = {{"rows", table_rows}, {"criteria", kCriterionNames}};
  if (to_stdout(o.out)) {
    out << report.dump(2) << '\n';
  } else {
    emit(o.out, report.dump(2) + "\n", out);
    out << text;
  }
  finish(m, o.manifest, o.out);
}

void cmd_stats(const StatsOptions& o, std::ostream& out, std::ostream& err) {
  RunManifest m;
  m.command = "stats";
  if (o.inputs.empty()) throw Error("stats: --input is required");
  m.config = {{"tokenizer", "split-terminal-punct+whitespace"},
              {"benchmark", bench_config(o.bench)}};
  json rows = json::array();
  std::string text = "dataset  #complex  #simple  #toks/complex  #sents/simple\n";
  for (size_t i = 0; i < o.inputs.size(); ++i) {
    const Benchmark b = read_benchmark(o.inputs[i], o.bench, i, m);
    const DatasetStats s = descriptive_stats(b);
    json j = to_json(s);
    j["name"] = b.name;
    rows.push_back(j);
    text += b.name + "  " + std::to_string(s.n_complex) + "  " +
            std::to_string(s.n_simple) + "  " + fixed(s.toks_per_complex, 1) +
            "  " + fixed(s.sents_per_simple, 1) + "\n";
  }
  m.config["observed"] = rows;
  const json report = {{"datasets", rows}};
  if (to_stdout(o.out)) {
    out << report.dump(2) << '\n';
  } else {
    emit(o.out, report.dump(2) + "\n", out);
    out << text;
  }
  (void)err;
  finish(m, o.manifest, o.out);
}

void cmd_patterns(const PatternsOptions& o, std::ostream& out,
                  std::ostream& err) {
  RunManifest m;
  m.command = "patterns";
  if (o.inputs.empty()) throw Error("patterns: --input is required");
  if (o.annotations.size() != o.inputs.size()) {
    throw Error("patterns: give one --annotations per --input");
  }
  if (!o.srl.empty() && o.srl.size() != o.inputs.size()) {
    throw Error("patterns: give one --srl per --input");
  }
  EngineConfig config;
  config.minimum_span = o.min_span;
  m.config = {{"minimum_span", config.minimum_span},
              {"detector", "heuristic approximation of manual annotation"},
              {"benchmark", bench_config(o.bench)}};
  json reports = json::array();
  std::string text;
  for (size_t i = 0; i < o.inputs.size(); ++i) {
    const Benchmark b = read_benchmark(o.inputs[i], o.bench, i, m);
    std::map<std::string, AnnotatedSentence> by_id;
    for (auto& s : read_annotations(o.annotations[i],
                                    o.srl.empty() ? "" : o.srl[i], m)) {
      by_id.emplace(s.sentence_id, std::move(s));
    }
    const PatternReport r = pattern_report(b, by_id, config);
    json j = to_json(r);
    j["name"] = b.name;
    reports.push_back(j);
    text += format_pattern_table(b.name, r);
  }
  const json report = {{"datasets", reports}};
  if (to_stdout(o.out)) {
    out << report.dump(2) << '\n';
  } else {
    emit(o.out, report.dump(2) + "\n", out);
    out << text;
  }
  (void)err;
  finish(m, o.manifest, o.out);
}

void cmd_build_gold(const BuildGoldOptions& o, std::ostream& out,
                    std::ostream& err) {
  RunManifest m;
  m.command = "build-gold";
  if (o.input.empty() || o.ratings.empty()) {
    throw Error("build-gold: --input and --ratings are required");
  }
  const Benchmark b = read_benchmark(o.input, o.bench, 0, m);
  const auto ratings = read_ratings(o.ratings, m);
  const Benchmark gold = build_gold(b, ratings);
  m.config = {{"rule", "keep rewrites whose every rating is correct"},
              {"benchmark", bench_config(o.bench)}};
  size_t before = 0, after = 0;
  for (const auto& p : b.pairs) before += p.rewrites.size();
  for (const auto& p : gold.pairs) after += p.rewrites.size();
  if (gold.pairs.empty()) {
    err << "warning: no perfect rewrites, gold benchmark is empty\n";
  }
  err << "build-gold: kept " << after << "/" << before << " rewrites in "
      << gold.pairs.size() << " pairs\n";
  emit(o.out, serialize_benchmark(gold), out);
  finish(m, o.manifest, o.out);
}

void cmd_serve(const ServeOptions& o, std::ostream& out, std::ostream& err) {
  RunManifest m;
  m.command = "serve";
  ServiceConfig sc;
  sc.ratings_per_rewrite = o.quota;
  sc.rewrites_per_pair = o.rewrite_quota;
  sc.log_path = o.log;
  const bool fresh = !std::filesystem::exists(o.log) ||
                     std::filesystem::file_size(o.log) == 0;
  RatingService service(sc);
  if (fresh) {
    for (size_t i = 0; i < o.inputs.size(); ++i) {
      service.add_benchmark(read_benchmark(o.inputs[i], o.bench, i, m));
    }
  } else if (!o.inputs.empty()) {
    err << "serve: existing log " << o.log << " replayed, --input ignored\n";
  }
  m.config = {{"ratings_per_rewrite", o.quota},
              {"rewrites_per_pair", o.rewrite_quota},
              {"log", o.log},
              {"host", o.host},
              {"port", o.port},
              {"ui", o.ui}};
  finish(m, o.manifest, o.log);
  ServerOptions so;
  so.host = o.host;
  so.port = o.port;
  so.ui_dir = o.ui;
  RatingServer server(service, so);
  const int port = server.bind();
  out << "serving on http://" << o.host << ":" << port << std::endl;
  server.serve();
}

}  // namespace splitrephrase
