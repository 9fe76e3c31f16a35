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

#include "splitrephrase/datasets.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "splitrephrase/text.h"

namespace splitrephrase {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string line_error(int line_no, const std::string& what) {
  return "benchmark line " + std::to_string(line_no) + ": " + what;
}

std::vector<std::string> split_on(std::string_view text, std::string_view sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    const size_t next = text.find(sep, pos);
    parts.emplace_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return parts;
}

std::string trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Accumulates pairs, merging by complex text and enforcing id uniqueness.
class Builder {
 public:
  explicit Builder(Benchmark& out) : out_(out) {}

  void add(int line_no, ComplexSimplePair pair) {
    if (pair.complex_text.empty()) {
      throw ParseError(line_error(line_no, "empty complex sentence"));
    }
    for (const auto& r : pair.rewrites) {
      if (r.sentences.empty()) {
        throw ParseError(line_error(
            line_no, "rewrite '" + r.rewrite_id + "' has no sentences"));
      }
      if (!rewrite_ids_.insert(r.rewrite_id).second) {
        throw ParseError(line_error(
            line_no, "duplicate rewrite_id '" + r.rewrite_id + "'"));
      }
    }
    auto it = by_text_.find(pair.complex_text);
    if (it != by_text_.end()) {
      auto& existing = out_.pairs[it->second].rewrites;
      existing.insert(existing.end(), pair.rewrites.begin(),
                      pair.rewrites.end());
      return;
    }
    if (!pair_ids_.insert(pair.pair_id).second) {
      throw ParseError(
          line_error(line_no, "duplicate pair_id '" + pair.pair_id + "'"));
    }
    by_text_.emplace(pair.complex_text, out_.pairs.size());
    out_.pairs.push_back(std::move(pair));
  }

  // Index of the pair holding this complex text, if any.
  const ComplexSimplePair* existing(const std::string& text) const {
    auto it = by_text_.find(text);
    return it == by_text_.end() ? nullptr : &out_.pairs[it->second];
  }

 private:
  Benchmark& out_;
  std::unordered_map<std::string, size_t> by_text_;
  std::unordered_set<std::string> pair_ids_;
  std::unordered_set<std::string> rewrite_ids_;
};

ComplexSimplePair pair_from_json(const json& j) {
  ComplexSimplePair pair;
  pair.pair_id = j.at("pair_id").get<std::string>();
  pair.complex_text = j.at("complex").get<std::string>();
  for (const auto& r : j.at("rewrites")) {
    Rewrite rw;
    rw.rewrite_id = r.at("rewrite_id").get<std::string>();
    rw.author = r.at("author").get<std::string>();
    rw.sentences = r.at("sentences").get<std::vector<std::string>>();
    pair.rewrites.push_back(std::move(rw));
  }
  return pair;
}

void parse_canonical(std::string_view text, Builder& builder, int& rows) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    ComplexSimplePair pair;
    try {
      pair = pair_from_json(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError(line_error(line_no, e.what()));
    }
    builder.add(line_no, std::move(pair));
    ++rows;
  }
}

void parse_tsv(std::string_view text, const LoadOptions& options,
               Builder& builder, int& rows) {
  if (options.separator.empty()) throw Error("empty sentence separator");
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  size_t next_pair = 0;
  std::unordered_map<std::string, int> rewrites_per_pair;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_on(line, "\t");
    if (fields.size() != 2) {
      throw ParseError(line_error(
          line_no, "expected 2 tab-separated fields, found " +
                       std::to_string(fields.size())));
    }
    const std::string complex_text = trim(fields[0]);
    if (complex_text.empty()) {
      throw ParseError(line_error(line_no, "empty complex sentence"));
    }
    Rewrite rw;
    rw.author = options.author;
    for (const auto& s : split_on(fields[1], options.separator)) {
      std::string sentence = trim(s);
      if (!sentence.empty()) rw.sentences.push_back(std::move(sentence));
    }
    if (rw.sentences.empty()) {
      throw ParseError(line_error(line_no, "empty rewrite field"));
    }
    ComplexSimplePair pair;
    pair.complex_text = complex_text;
    if (const auto* seen = builder.existing(complex_text)) {
      pair.pair_id = seen->pair_id;
    } else {
      pair.pair_id = std::to_string(next_pair++);
    }
    const int k = rewrites_per_pair[pair.pair_id]++;
    rw.rewrite_id = pair.pair_id + "-" + std::to_string(k);
    pair.rewrites.push_back(std::move(rw));
    builder.add(line_no, std::move(pair));
    ++rows;
  }
}

}  // namespace

const ComplexSimplePair* Benchmark::find_pair(std::string_view pair_id) const {
  for (const auto& p : pairs) {
    if (p.pair_id == pair_id) return &p;
  }
  return nullptr;
}

BenchmarkFormat parse_benchmark_format(std::string_view name) {
  if (name == "canonical_jsonl" || name == "jsonl") {
    return BenchmarkFormat::kCanonicalJsonl;
  }
  if (name == "tsv_pairs" || name == "tsv") return BenchmarkFormat::kTsvPairs;
  throw Error("unknown benchmark format '" + std::string(name) +
              "' (expected canonical_jsonl or tsv_pairs)");
}

Benchmark parse_benchmark(std::string_view text, const LoadOptions& options) {
  Benchmark out;
  out.name = options.name;
  Builder builder(out);
  int rows = 0;
  if (options.format == BenchmarkFormat::kCanonicalJsonl) {
    parse_canonical(text, builder, rows);
  } else {
    parse_tsv(text, options, builder, rows);
  }
  if (rows == 0) throw ParseError("benchmark has no rows");
  return out;
}

Benchmark load_benchmark(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open benchmark '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadOptions opts = options;
  if (opts.name.empty()) opts.name = std::filesystem::path(path).stem().string();
  Benchmark b;
  try {
    b = parse_benchmark(buf.str(), opts);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  b.provenance = "loaded from " + path;
  return b;
}

std::string serialize_benchmark(const Benchmark& benchmark) {
  std::string out;
  for (const auto& p : benchmark.pairs) {
    ordered_json j;
    j["pair_id"] = p.pair_id;
    j["complex"] = p.complex_text;
    j["rewrites"] = ordered_json::array();
    for (const auto& r : p.rewrites) {
      ordered_json rj;
      rj["rewrite_id"] = r.rewrite_id;
      rj["author"] = r.author;
      rj["sentences"] = r.sentences;
      j["rewrites"].push_back(std::move(rj));
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

void save_benchmark(const Benchmark& benchmark, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write benchmark '" + path + "'");
  out << serialize_benchmark(benchmark);
}

DatasetStats descriptive_stats(const Benchmark& benchmark) {
  DatasetStats s;
  size_t tokens = 0;
  size_t sentences = 0;
  for (const auto& p : benchmark.pairs) {
    ++s.n_complex;
    tokens += split_terminal_punctuation(p.complex_text).size();
    for (const auto& r : p.rewrites) {
      ++s.n_simple;
      sentences += r.sentences.size();
    }
  }
  if (s.n_complex > 0) {
    s.toks_per_complex = static_cast<double>(tokens) / s.n_complex;
  }
  if (s.n_simple > 0) {
    s.sents_per_simple = static_cast<double>(sentences) / s.n_simple;
  }
  return s;
}

nlohmann::json to_json(const DatasetStats& s) {
  return {{"n_complex", s.n_complex},
          {"n_simple", s.n_simple},
          {"toks_per_complex", s.toks_per_complex},
          {"sents_per_simple", s.sents_per_simple}};
}

Benchmark build_gold(const Benchmark& benchmark,
                     std::span<const RatingRecord> ratings) {
  std::unordered_set<std::string> known;
  for (const auto& p : benchmark.pairs) {
    for (const auto& r : p.rewrites) known.insert(r.rewrite_id);
  }
  std::unordered_map<std::string, std::vector<RatingRecord>> by_rewrite;
  for (const auto& r : ratings) {
    if (!known.count(r.rewrite_id)) {
      throw Error("rating references unknown rewrite_id '" + r.rewrite_id +
                  "'");
    }
    by_rewrite[r.rewrite_id].push_back(r);
  }
  Benchmark gold;
  gold.name = benchmark.name;
  gold.provenance = benchmark.provenance;
  if (!gold.provenance.empty()) gold.provenance += "; ";
  gold.provenance += "gold: perfect rewrites only";
  for (const auto& p : benchmark.pairs) {
    ComplexSimplePair kept{p.pair_id, p.complex_text, {}};
    for (const auto& r : p.rewrites) {
      auto it = by_rewrite.find(r.rewrite_id);
      if (it != by_rewrite.end() && is_perfect(it->second)) {
        kept.rewrites.push_back(r);
      }
    }
    if (!kept.rewrites.empty()) gold.pairs.push_back(std::move(kept));
  }
  return gold;
}

}  // namespace splitrephrase
