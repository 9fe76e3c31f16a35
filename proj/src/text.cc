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

#include "splitrephrase/text.h"

#include <cctype>
#include <sstream>

namespace splitrephrase {

std::vector<std::string> split_terminal_punctuation(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    const char last = word.back();
    if (word.size() > 1 && (last == '.' || last == '!' || last == '?')) {
      out.push_back(word.substr(0, word.size() - 1));
      out.emplace_back(1, last);
    } else {
      out.push_back(std::move(word));
    }
  }
  return out;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const Tokenizer& default_tokenizer() {
  static const Tokenizer tokenizer{
      "lower+split-terminal-punct", [](std::string_view text) {
        return split_terminal_punctuation(to_lower(text));
      }};
  return tokenizer;
}

bool is_plain_sentence(std::string_view text) {
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && !std::isspace(u) && c != ',' && c != '.') {
      return false;
    }
  }
  return true;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace splitrephrase
