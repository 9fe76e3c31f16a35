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

#include <iostream>

#include "CLI11.hpp"
#include "splitrephrase/cli.h"
#include "splitrephrase/manifest.h"

namespace splitrephrase {
namespace {

void add_bench_flags(CLI::App* cmd, BenchmarkInputOptions& b) {
  cmd->add_option("--format", b.format,
                  "benchmark format: canonical_jsonl or tsv_pairs")
      ->capture_default_str();
  cmd->add_option("--separator", b.separator,
                  "sentence separator inside tsv rewrites")
      ->capture_default_str();
  cmd->add_option("--name", b.names,
                  "benchmark names, one per --input (default: file stem)");
}

void add_output_flags(CLI::App* cmd, std::string& out, std::string& manifest) {
  cmd->add_option("--out", out, "output file (default: standard output)");
  cmd->add_option("--manifest", manifest,
                  "run manifest path (default: <out>.manifest.json)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Rule-based split-and-rephrase and its evaluation toolkit",
               "splitrephrase"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  SplitOptions split;
  auto* c_split = app.add_subcommand("split", "split annotated sentences");
  c_split->add_option("--annotations", split.annotations, "CoNLL-U file")
      ->required();
  c_split->add_option("--srl", split.srl, "SRL frames, JSONL");
  c_split->add_option("--min-span", split.min_span,
                      "smallest modifier subtree to extract")
      ->capture_default_str();
  c_split->add_flag("--no-copula", split.no_copula,
                    "never insert a copula after the copied subject");
  c_split->add_option("--model", split.model, "model name for rewrite ids")
      ->capture_default_str();
  add_output_flags(c_split, split.out, split.manifest);

  EvaluateOptions eval;
  auto* c_eval =
      app.add_subcommand("evaluate", "BLEU or crowd-rating evaluation");
  c_eval->add_option("--mode", eval.mode, "bleu or ratings")
      ->check(CLI::IsMember({"bleu", "ratings"}))
      ->capture_default_str();
  c_eval->add_option("--input", eval.inputs,
                     "hypotheses (bleu) or rated rewrite pools (ratings)")
      ->required();
  c_eval->add_option("--refs", eval.refs, "reference benchmarks");
  c_eval->add_option("--ratings", eval.ratings, "RatingRecord JSONL");
  c_eval->add_option("--model", eval.model, "override hypothesis model name");
  add_bench_flags(c_eval, eval.bench);
  add_output_flags(c_eval, eval.out, eval.manifest);

  ReliabilityOptions rel;
  auto* c_rel = app.add_subcommand(
      "reliability", "bucket crowd agreement and fit Beta distributions");
  c_rel->add_option("--ratings", rel.ratings, "crowd ratings, 3 per rewrite")
      ->required();
  c_rel->add_option("--expert", rel.expert, "expert verdicts JSONL")
      ->required();
  c_rel->add_option("--curves", rel.curves, "density curve CSV path");
  add_output_flags(c_rel, rel.out, rel.manifest);

  CorrelateOptions cor;
  auto* c_cor = app.add_subcommand(
      "correlate", "Spearman correlation of sentence BLEU and ratings");
  c_cor->add_option("--ratings", cor.ratings, "RatingRecord JSONL")
      ->required();
  c_cor->add_option("--input", cor.input, "per-sentence BLEU from evaluate")
      ->required();
  c_cor->add_option("--group-by", cor.group_by,
                    "benchmark+model, benchmark, model, all (repeatable)")
      ->check(CLI::IsMember({"benchmark+model", "benchmark", "model", "all"}));
  add_output_flags(c_cor, cor.out, cor.manifest);

  StatsOptions stats;
  auto* c_stats = app.add_subcommand("stats", "benchmark statistics");
  c_stats->add_option("--input", stats.inputs, "benchmark files")->required();
  add_bench_flags(c_stats, stats.bench);
  add_output_flags(c_stats, stats.out, stats.manifest);

  PatternsOptions pat;
  auto* c_pat =
      app.add_subcommand("patterns", "heuristic syntactic pattern counts");
  c_pat->add_option("--input", pat.inputs, "benchmark files")->required();
  c_pat->add_option("--annotations", pat.annotations,
                    "CoNLL-U per input, sentence ids = pair ids")
      ->required();
  c_pat->add_option("--srl", pat.srl, "SRL JSONL per input");
  c_pat->add_option("--min-span", pat.min_span,
                    "smallest prepositional subtree counted")
      ->capture_default_str();
  add_bench_flags(c_pat, pat.bench);
  add_output_flags(c_pat, pat.out, pat.manifest);

  BuildGoldOptions gold;
  auto* c_gold = app.add_subcommand(
      "build-gold", "keep only rewrites whose ratings are all correct");
  c_gold->add_option("--input", gold.input, "benchmark file")->required();
  c_gold->add_option("--ratings", gold.ratings, "RatingRecord JSONL")
      ->required();
  add_bench_flags(c_gold, gold.bench);
  add_output_flags(c_gold, gold.out, gold.manifest);

  ServeOptions serve;
  auto* c_serve =
      app.add_subcommand("serve", "run the rewrite and rating task server");
  c_serve->add_option("--input", serve.inputs,
                      "benchmarks loaded into a fresh log");
  c_serve->add_option("--log", serve.log, "event log path")
      ->capture_default_str();
  c_serve->add_option("--host", serve.host, "bind address")
      ->capture_default_str();
  c_serve->add_option("--port", serve.port, "port, 0 for any free port")
      ->capture_default_str();
  c_serve->add_option("--quota", serve.quota, "ratings per rewrite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_serve->add_option("--rewrite-quota", serve.rewrite_quota,
                      "rewrites per complex sentence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_serve->add_option("--ui", serve.ui, "static UI directory");
  add_bench_flags(c_serve, serve.bench);
  c_serve->add_option("--manifest", serve.manifest, "run manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (e.get_exit_code() == 0) return kExitOk;
    return kExitUsage;
  }

  try {
    if (*c_split) cmd_split(split, out, err);
    else if (*c_eval) cmd_evaluate(eval, out, err);
    else if (*c_rel) cmd_reliability(rel, out, err);
    else if (*c_cor) cmd_correlate(cor, out, err);
    else if (*c_stats) cmd_stats(stats, out, err);
    else if (*c_pat) cmd_patterns(pat, out, err);
    else if (*c_gold) cmd_build_gold(gold, out, err);
    else if (*c_serve) cmd_serve(serve, out, err);
  } catch (const MissingInputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace splitrephrase
