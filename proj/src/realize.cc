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

// Surface realization of clause drafts.

#include <cctype>
#include <set>

#include "splitrephrase/rule_engine.h"
#include "splitrephrase/text.h"

namespace splitrephrase {
namespace {

struct Word {
  std::string text;
  int source_index = 0;
};

bool is_terminal(const std::string& w) {
  return w == "." || w == "!" || w == "?";
}

bool is_lower_tail(const std::string& w) {
  for (size_t i = 1; i < w.size(); ++i) {
    if (std::isupper(static_cast<unsigned char>(w[i]))) return false;
  }
  return true;
}

// A sentence-initial capital that is only there because of its position:
// not a proper noun, not "I", not an acronym.
bool positional_capital(const Token& t) {
  const std::string& w = t.surface;
  return t.index == 1 && !t.pos.empty() && t.pos != "PROPN" && w != "I" &&
         !w.empty() && std::isupper(static_cast<unsigned char>(w[0])) &&
         is_lower_tail(w);
}

bool attaches_left(const std::string& w) {
  static const std::string kLeft = ",.;:')]}";
  if (w.empty()) return false;
  if (kLeft.find(w[0]) != std::string::npos) return true;
  return w.rfind("\xE2\x80\x99", 0) == 0;  // ’
}

bool opens(const std::string& w) {
  return w == "(" || w == "[" || w == "{";
}

}  // namespace

std::string detokenize(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0 && !attaches_left(words[i]) && !opens(words[i - 1])) out += ' ';
    out += words[i];
  }
  return out;
}

std::string realize(const ClauseDraft& draft,
                    const AnnotatedSentence& source) {
  if (draft.token_indices.empty()) {
    throw Error("cannot realize an empty clause of sentence '" +
                source.sentence_id + "'");
  }
  static const std::set<std::string> kLeadingDrop = {"and", "or", "but",
                                                     "nor"};
  std::vector<Word> body;
  for (int i : draft.token_indices) body.push_back({source.token(i).surface, i});

  while (!body.empty() && (body.front().text == "," ||
                           kLeadingDrop.count(to_lower(body.front().text)))) {
    body.erase(body.begin());
  }
  while (!body.empty()) {
    if (body.back().text == ",") {
      body.pop_back();
    } else if (body.size() >= 2 && is_terminal(body.back().text) &&
               body[body.size() - 2].text == ",") {
      body.erase(body.end() - 2);
    } else {
      break;
    }
  }

  std::vector<Word> words;
  for (const auto& p : draft.prefix_tokens) {
    words.push_back({p.text, p.source_index});
  }
  words.insert(words.end(), body.begin(), body.end());
  if (words.empty()) {
    throw Error("clause of sentence '" + source.sentence_id +
                "' is empty after punctuation stripping");
  }

  for (size_t i = 1; i < words.size(); ++i) {
    const int src = words[i].source_index;
    if (src >= 1 && positional_capital(source.token(src))) {
      words[i].text[0] = static_cast<char>(
          std::tolower(static_cast<unsigned char>(words[i].text[0])));
    }
  }
  bool capitalized = false;
  for (auto& w : words) {
    for (char& c : w.text) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        capitalized = true;
        break;
      }
    }
    if (capitalized) break;
  }
  if (!is_terminal(words.back().text)) words.push_back({".", 0});

  std::vector<std::string> texts;
  for (auto& w : words) texts.push_back(std::move(w.text));
  return detokenize(texts);
}

}  // namespace splitrephrase
