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

// The splitrephrase command line: one subcommand per workflow.

#ifndef SPLITREPHRASE_CLI_H_
#define SPLITREPHRASE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "splitrephrase/annotation.h"

namespace splitrephrase {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;  // bad flags or a missing input file

class MissingInputError : public Error {
 public:
  using Error::Error;
};

struct BenchmarkInputOptions {
  std::string format = "canonical_jsonl";
  std::string separator = "<::::>";
  std::vector<std::string> names;  // positional overrides of file stems
};

struct SplitOptions {
  std::string annotations;  // CoNLL-U
  std::string srl;          // SRL JSONL, optional
  std::string model = "rule";
  int min_span = 3;
  bool no_copula = false;
  std::string out;
  std::string manifest;
};

struct EvaluateOptions {
  std::string mode = "bleu";        // bleu | ratings
  std::vector<std::string> inputs;  // hypotheses (bleu) or rated pools
  std::vector<std::string> refs;    // benchmarks, paired with inputs
  std::string ratings;
  std::string model;                // overrides hypothesis authors
  BenchmarkInputOptions bench;
  std::string out;
  std::string manifest;
};

struct ReliabilityOptions {
  std::string ratings;  // crowd RatingRecord JSONL, 3 per rewrite
  std::string expert;   // {"rewrite_id", "correct"} or RatingRecord JSONL
  std::string out;
  std::string curves;   // defaults to "<out>.curves.csv"
  std::string manifest;
};

struct CorrelateOptions {
  std::string ratings;
  std::string input;  // per-sentence BLEU from evaluate
  std::vector<std::string> group_by;  // benchmark+model, benchmark, model, all
  std::string out;
  std::string manifest;
};

struct StatsOptions {
  std::vector<std::string> inputs;
  BenchmarkInputOptions bench;
  std::string out;
  std::string manifest;
};

struct PatternsOptions {
  std::vector<std::string> inputs;
  std::vector<std::string> annotations;  // one CoNLL-U per input
  std::vector<std::string> srl;          // optional, one per input
  BenchmarkInputOptions bench;
  int min_span = 3;
  std::string out;
  std::string manifest;
};

struct BuildGoldOptions {
  std::string input;
  std::string ratings;
  BenchmarkInputOptions bench;
  std::string out;
  std::string manifest;
};

struct ServeOptions {
  std::vector<std::string> inputs;  // pools loaded into a fresh log
  BenchmarkInputOptions bench;
  std::string log = "events.jsonl";
  std::string host = "127.0.0.1";
  int port = 8080;
  int quota = 2;  // ratings per rewrite
  int rewrite_quota = 3;
  std::string ui;
  std::string manifest;
};

// Each command writes its data to `out` (or the --out file) and diagnostics
// to `err`. Errors are thrown.
void cmd_split(const SplitOptions& o, std::ostream& out, std::ostream& err);
void cmd_evaluate(const EvaluateOptions& o, std::ostream& out,
                  std::ostream& err);
void cmd_reliability(const ReliabilityOptions& o, std::ostream& out,
                     std::ostream& err);
void cmd_correlate(const CorrelateOptions& o, std::ostream& out,
                   std::ostream& err);
void cmd_stats(const StatsOptions& o, std::ostream& out, std::ostream& err);
void cmd_patterns(const PatternsOptions& o, std::ostream& out,
                  std::ostream& err);
void cmd_build_gold(const BuildGoldOptions& o, std::ostream& out,
                    std::ostream& err);
void cmd_serve(const ServeOptions& o, std::ostream& out, std::ostream& err);

// Parses arguments and dispatches. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_CLI_H_
