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

// SRL interchange: one JSON object per line,
//   {"sentence_id": str,
//    "frames": [{"predicate_index": int,
//                "arguments": [{"label": str, "start": int, "end": int}]}]}

#include <sstream>
#include <string>

#include "json.hpp"
#include "splitrephrase/annotation.h"

namespace splitrephrase {

using nlohmann::json;

std::map<std::string, std::vector<SrlFrame>> parse_srl(std::string_view text) {
  std::map<std::string, std::vector<SrlFrame>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string at = "SRL line " + std::to_string(line_no);
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(at + ": " + e.what());
    }
    std::string id;
    std::vector<SrlFrame> frames;
    try {
      id = record.at("sentence_id").get<std::string>();
      for (const auto& f : record.at("frames")) {
        SrlFrame frame;
        frame.predicate_index = f.at("predicate_index").get<int>();
        for (const auto& a : f.at("arguments")) {
          frame.arguments.push_back({a.at("label").get<std::string>(),
                                     a.at("start").get<int>(),
                                     a.at("end").get<int>()});
        }
        frames.push_back(std::move(frame));
      }
    } catch (const json::exception& e) {
      throw ParseError(at + ": " + e.what());
    }
    for (const auto& frame : frames) validate_frame(frame, -1, id);
    if (out.count(id)) {
      throw ParseError(at + ": duplicate sentence_id '" + id + "'");
    }
    out.emplace(std::move(id), std::move(frames));
  }
  return out;
}

std::string serialize_srl(const std::vector<AnnotatedSentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    json frames = json::array();
    for (const auto& f : s.frames) {
      json args = json::array();
      for (const auto& a : f.arguments) {
        args.push_back({{"label", a.label}, {"start", a.start}, {"end", a.end}});
      }
      frames.push_back(
          {{"predicate_index", f.predicate_index}, {"arguments", args}});
    }
    json line = {{"sentence_id", s.sentence_id}, {"frames", frames}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

void attach_frames(std::vector<AnnotatedSentence>& sentences,
                   const std::map<std::string, std::vector<SrlFrame>>& frames) {
  std::map<std::string, AnnotatedSentence*> by_id;
  for (auto& s : sentences) by_id[s.sentence_id] = &s;
  for (const auto& [id, list] : frames) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ValidationError("SRL record for unknown sentence '" + id + "'");
    }
    it->second->frames = list;
    validate(*it->second);
  }
}

}  // namespace splitrephrase
