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

#ifndef SPLITREPHRASE_TEXT_H_
#define SPLITREPHRASE_TEXT_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace splitrephrase {

// Whitespace split, then a trailing '.', '!' or '?' is detached from any
// longer token ("Rouleau." -> "Rouleau", ".").
std::vector<std::string> split_terminal_punctuation(std::string_view text);

std::string to_lower(std::string_view text);

// A named tokenizer. The name is recorded in every report that used it.
struct Tokenizer {
  std::string name;
  std::function<std::vector<std::string>(std::string_view)> split;
};

// Lowercase + split_terminal_punctuation.
const Tokenizer& default_tokenizer();

// True iff every character is alphanumeric, whitespace, ',' or '.'; the
// corpus-preparation filter for candidate complex sentences. Never applied
// implicitly.
bool is_plain_sentence(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_TEXT_H_
