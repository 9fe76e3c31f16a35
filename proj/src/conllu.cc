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

// CoNLL-U reader and writer.

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "splitrephrase/annotation.h"

namespace splitrephrase {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_int(std::string_view s, int* out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

struct PendingSentence {
  AnnotatedSentence sentence;
  std::vector<int> lines;  // input line of each token
  int first_line = 0;
  bool has_id = false;
};

class Reader {
 public:
  std::vector<AnnotatedSentence> read(std::string_view text) {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      std::string_view line = nl == std::string_view::npos
                                  ? text.substr(pos)
                                  : text.substr(pos, nl - pos);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      consume(line, line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    close();
    return std::move(out_);
  }

 private:
  void consume(std::string_view line, int line_no) {
    if (trim(line).empty()) {
      close();
      return;
    }
    if (!open_) {
      pending_ = PendingSentence{};
      pending_.first_line = line_no;
      open_ = true;
    }
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.rfind("sent_id", 0) == 0) {
        std::string_view rest = trim(body.substr(7));
        if (!rest.empty() && rest.front() == '=') {
          pending_.sentence.sentence_id = std::string(trim(rest.substr(1)));
          pending_.has_id = true;
        }
      }
      return;
    }
    auto fields = split_tabs(line);
    if (fields.size() != 10) {
      fail(line_no, "expected 10 tab-separated columns, found " +
                        std::to_string(fields.size()));
    }
    if (fields[0].find('-') != std::string_view::npos ||
        fields[0].find('.') != std::string_view::npos) {
      return;  // multiword token or empty node
    }
    Token token;
    if (!parse_int(fields[0], &token.index)) {
      fail(line_no, "non-numeric ID '" + std::string(fields[0]) + "'");
    }
    if (!parse_int(fields[6], &token.head)) {
      fail(line_no, "non-numeric HEAD '" + std::string(fields[6]) + "'");
    }
    token.surface = std::string(fields[1]);
    token.pos = fields[3] == "_" ? "" : std::string(fields[3]);
    token.deprel = fields[7] == "_" ? "" : std::string(fields[7]);
    const int expected = pending_.sentence.size() + 1;
    if (token.index != expected) {
      fail(line_no, "token ID " + std::to_string(token.index) +
                        " out of sequence, expected " +
                        std::to_string(expected));
    }
    if (token.head == token.index) fail(line_no, "self-headed token");
    if (token.head < 0) fail(line_no, "negative HEAD");
    if (token.surface.empty()) fail(line_no, "empty FORM");
    pending_.sentence.tokens.push_back(std::move(token));
    pending_.lines.push_back(line_no);
  }

  void close() {
    if (!open_) return;
    open_ = false;
    if (pending_.sentence.tokens.empty()) return;  // comment-only block
    if (!pending_.has_id) {
      pending_.sentence.sentence_id = std::to_string(ordinal_);
    }
    ++ordinal_;
    const auto& s = pending_.sentence;
    const int n = s.size();
    int roots = 0;
    for (int i = 0; i < n; ++i) {
      if (s.tokens[i].head > n) {
        fail(pending_.lines[i], "HEAD " + std::to_string(s.tokens[i].head) +
                                    " out of range");
      }
      if (s.tokens[i].head == 0) ++roots;
    }
    if (roots != 1) {
      fail(pending_.first_line, std::to_string(roots) +
                                    " root tokens, expected exactly 1");
    }
    for (int i = 1; i <= n; ++i) {
      int cursor = i;
      for (int steps = 0; cursor != 0; ++steps) {
        if (steps > n) fail(pending_.lines[i - 1], "cyclic head graph");
        cursor = s.token(cursor).head;
      }
    }
    out_.push_back(std::move(pending_.sentence));
  }

  [[noreturn]] void fail(int line_no, const std::string& what) const {
    std::string id = pending_.has_id ? pending_.sentence.sentence_id
                                     : "#" + std::to_string(ordinal_);
    throw ParseError("CoNLL-U sentence '" + id + "', line " +
                     std::to_string(line_no) + ": " + what);
  }

  std::vector<AnnotatedSentence> out_;
  PendingSentence pending_;
  bool open_ = false;
  int ordinal_ = 0;
};

}  // namespace

std::vector<AnnotatedSentence> parse_conllu(std::string_view text) {
  return Reader().read(text);
}

std::string serialize_conllu(const std::vector<AnnotatedSentence>& sentences) {
  std::ostringstream out;
  for (const auto& s : sentences) {
    out << "# sent_id = " << s.sentence_id << '\n';
    for (const auto& t : s.tokens) {
      out << t.index << '\t' << t.surface << "\t_\t"
          << (t.pos.empty() ? "_" : t.pos) << "\t_\t_\t" << t.head << '\t'
          << (t.deprel.empty() ? "_" : t.deprel) << "\t_\t_\n";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace splitrephrase
