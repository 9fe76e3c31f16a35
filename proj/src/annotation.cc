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

#include "splitrephrase/annotation.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace splitrephrase {
namespace {

std::string where(std::string_view sentence_id) {
  return "sentence '" + std::string(sentence_id) + "'";
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

const SrlArgument& SrlFrame::verb() const {
  for (const auto& arg : arguments) {
    if (arg.is_verb()) return arg;
  }
  throw ValidationError("frame at predicate " +
                        std::to_string(predicate_index) + " has no V argument");
}

int AnnotatedSentence::root() const {
  for (const auto& t : tokens) {
    if (t.head == 0) return t.index;
  }
  return 0;
}

std::vector<int> AnnotatedSentence::children(int index) const {
  std::vector<int> out;
  for (const auto& t : tokens) {
    if (t.head == index) out.push_back(t.index);
  }
  return out;
}

void validate_frame(const SrlFrame& frame, int sentence_length,
                    std::string_view sentence_id) {
  int verbs = 0;
  for (const auto& arg : frame.arguments) {
    if (arg.label.empty()) {
      throw ValidationError(where(sentence_id) + ": empty argument label");
    }
    if (arg.start < 1 || arg.start > arg.end) {
      throw ValidationError(where(sentence_id) + ": bad span [" +
                            std::to_string(arg.start) + "," +
                            std::to_string(arg.end) + "] for " + arg.label);
    }
    if (sentence_length >= 0 && arg.end > sentence_length) {
      throw ValidationError(where(sentence_id) + ": span [" +
                            std::to_string(arg.start) + "," +
                            std::to_string(arg.end) + "] of " + arg.label +
                            " out of range for " +
                            std::to_string(sentence_length) + " tokens");
    }
    if (arg.is_verb()) {
      ++verbs;
      if (!arg.contains(frame.predicate_index)) {
        throw ValidationError(where(sentence_id) +
                              ": V span does not contain predicate " +
                              std::to_string(frame.predicate_index));
      }
    }
  }
  if (verbs != 1) {
    throw ValidationError(where(sentence_id) + ": frame at predicate " +
                          std::to_string(frame.predicate_index) + " has " +
                          std::to_string(verbs) + " V arguments, expected 1");
  }
  std::vector<SrlArgument> sorted = frame.arguments;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].start <= sorted[i - 1].end) {
      throw ValidationError(where(sentence_id) + ": overlapping spans " +
                            sorted[i - 1].label + " and " + sorted[i].label);
    }
  }
}

void validate(const AnnotatedSentence& sentence) {
  const int n = sentence.size();
  const std::string at = where(sentence.sentence_id);
  if (n == 0) throw ValidationError(at + ": no tokens");
  int roots = 0;
  for (int i = 1; i <= n; ++i) {
    const Token& t = sentence.token(i);
    if (t.index != i) {
      throw ValidationError(at + ": token " + std::to_string(i) +
                            " has index " + std::to_string(t.index));
    }
    if (t.surface.empty()) {
      throw ValidationError(at + ": empty surface at token " +
                            std::to_string(i));
    }
    if (t.head == t.index) {
      throw ValidationError(at + ": self-headed token " + std::to_string(i));
    }
    if (t.head < 0 || t.head > n) {
      throw ValidationError(at + ": head " + std::to_string(t.head) +
                            " of token " + std::to_string(i) +
                            " out of range");
    }
    if (t.head == 0) ++roots;
  }
  if (roots != 1) {
    throw ValidationError(at + ": " + std::to_string(roots) +
                          " root tokens, expected exactly 1");
  }
  // A walk longer than n steps can only happen on a cycle.
  for (int i = 1; i <= n; ++i) {
    int cursor = i;
    int steps = 0;
    while (cursor != 0) {
      if (++steps > n) {
        throw ValidationError(at + ": cyclic head graph through token " +
                              std::to_string(i));
      }
      cursor = sentence.token(cursor).head;
    }
  }
  for (const auto& frame : sentence.frames) {
    validate_frame(frame, n, sentence.sentence_id);
  }
}

std::vector<int> subtree(const AnnotatedSentence& sentence, int root_index) {
  std::vector<std::vector<int>> kids(sentence.size() + 1);
  for (const auto& t : sentence.tokens) {
    if (t.head > 0) kids[t.head].push_back(t.index);
  }
  std::vector<int> out;
  std::vector<int> stack{root_index};
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    out.push_back(node);
    for (int k : kids[node]) stack.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool deprel_matches(std::string_view deprel, std::string_view spelling) {
  if (iequals(deprel, spelling)) return true;
  const size_t colon = deprel.find(':');
  return colon != std::string_view::npos &&
         iequals(deprel.substr(0, colon), spelling);
}

bool deprel_in(std::string_view deprel,
               const std::vector<std::string>& spellings) {
  return std::any_of(spellings.begin(), spellings.end(),
                     [&](const auto& s) { return deprel_matches(deprel, s); });
}

bool deprel_in(std::string_view deprel,
               std::initializer_list<std::string_view> spellings) {
  return std::any_of(spellings.begin(), spellings.end(),
                     [&](auto s) { return deprel_matches(deprel, s); });
}

}  // namespace splitrephrase
