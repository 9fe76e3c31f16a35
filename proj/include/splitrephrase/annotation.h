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

// Typed dependency + semantic-role annotations for one sentence, and the
// readers for the CoNLL-U and SRL-JSONL interchange formats.

#ifndef SPLITREPHRASE_ANNOTATION_H_
#define SPLITREPHRASE_ANNOTATION_H_

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace splitrephrase {

// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. The message names the sentence and, when known, the
// 1-based input line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input whose content breaks an annotation invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

struct Token {
  int index = 0;  // 1-based
  std::string surface;
  int head = 0;  // 0 = root
  std::string deprel;
  std::string pos;  // coarse tag, may be empty
};

struct SrlArgument {
  std::string label;  // "ARG0", "R-ARG1", "ARGM-TMP", "V", ...
  int start = 0;      // inclusive, 1-based
  int end = 0;        // inclusive

  bool contains(int index) const { return start <= index && index <= end; }
  bool is_verb() const { return label == "V"; }
  bool is_relational() const { return label.rfind("R-ARG", 0) == 0; }
  bool is_continuation() const { return label.rfind("C-ARG", 0) == 0; }
};

struct SrlFrame {
  int predicate_index = 0;
  std::vector<SrlArgument> arguments;

  // The "V" argument. Only valid on a validated frame.
  const SrlArgument& verb() const;
};

struct AnnotatedSentence {
  std::string sentence_id;
  std::vector<Token> tokens;
  std::vector<SrlFrame> frames;

  int size() const { return static_cast<int>(tokens.size()); }
  // 1-based access.
  const Token& token(int index) const { return tokens.at(index - 1); }
  bool valid_index(int index) const { return index >= 1 && index <= size(); }
  // The token with head 0.
  int root() const;
  // Indices of the direct dependents of `index`, ascending.
  std::vector<int> children(int index) const;
};

// Throws ValidationError unless the token graph is a single-rooted tree with
// in-range heads and every frame satisfies the V and span invariants.
void validate(const AnnotatedSentence& sentence);

// Checks one frame against a sentence of `sentence_length` tokens.
void validate_frame(const SrlFrame& frame, int sentence_length,
                    std::string_view sentence_id);

// Reads CoNLL-U. Multiword-token and empty-node lines are skipped. Sentences
// without a `# sent_id` comment get their 0-based ordinal as id. Frames are
// left empty.
std::vector<AnnotatedSentence> parse_conllu(std::string_view text);

// Writes the columns this model keeps; the rest are "_".
std::string serialize_conllu(const std::vector<AnnotatedSentence>& sentences);

// Reads SRL JSONL: one {"sentence_id", "frames": [...]} object per line.
// Frames are checked for the V and non-overlap invariants here; span range
// is checked by attach_frames once the token count is known.
std::map<std::string, std::vector<SrlFrame>> parse_srl(std::string_view text);

std::string serialize_srl(const std::vector<AnnotatedSentence>& sentences);

// Joins SRL frames onto parsed sentences by sentence_id and validates the
// result. Sentences with no SRL record keep no frames; SRL records naming an
// unknown sentence are an error.
void attach_frames(std::vector<AnnotatedSentence>& sentences,
                   const std::map<std::string, std::vector<SrlFrame>>& frames);

// `root_index` plus all transitive dependents, ascending.
std::vector<int> subtree(const AnnotatedSentence& sentence, int root_index);

// Case-insensitive label match that also accepts a subtype, so "acl:relcl"
// matches both "acl:relcl" and "acl".
bool deprel_matches(std::string_view deprel, std::string_view spelling);
bool deprel_in(std::string_view deprel,
               const std::vector<std::string>& spellings);
bool deprel_in(std::string_view deprel,
               std::initializer_list<std::string_view> spellings);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_ANNOTATION_H_
