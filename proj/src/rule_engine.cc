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

#include "splitrephrase/rule_engine.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "splitrephrase/text.h"

namespace splitrephrase {
namespace {

const std::vector<std::string> kSubjectLabels = {
    "nsubj", "nsubjpass", "nsubj:pass"};
const std::vector<std::string> kAuxiliaryLabels = {
    "aux", "auxpass", "aux:pass", "cop"};
const std::set<std::string> kCoordinators = {"and", "or", "but", "nor"};
const std::set<std::string> kWhWords = {"who",   "whom", "whose", "which",
                                        "that",  "where", "when"};

using IndexSet = std::vector<int>;  // always sorted

bool is_punctuation(const Token& t) {
  if (t.pos == "PUNCT") return true;
  return std::all_of(t.surface.begin(), t.surface.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c));
  });
}

// Tokens that can carry a sentence on their own.
bool is_content(const Token& t) {
  return !is_punctuation(t) && !kCoordinators.count(to_lower(t.surface));
}

bool has_content(const AnnotatedSentence& s, const IndexSet& indices) {
  return std::any_of(indices.begin(), indices.end(),
                     [&](int i) { return is_content(s.token(i)); });
}

bool contains(const IndexSet& set, int index) {
  return std::binary_search(set.begin(), set.end(), index);
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

IndexSet span_indices(const SrlArgument& arg) {
  IndexSet out;
  for (int i = arg.start; i <= arg.end; ++i) out.push_back(i);
  return out;
}

// Numbered arguments only: no V, R-, C- or ARGM.
bool is_core_argument(const SrlArgument& arg) {
  return arg.label.size() > 3 && arg.label.rfind("ARG", 0) == 0 &&
         std::isdigit(static_cast<unsigned char>(arg.label[3]));
}

std::vector<InsertedToken> copy_tokens(const AnnotatedSentence& s,
                                       const IndexSet& indices) {
  std::vector<InsertedToken> out;
  for (int i : indices) out.push_back({s.token(i).surface, i});
  return out;
}

IndexSet trim_punctuation(const AnnotatedSentence& s, IndexSet indices) {
  while (!indices.empty() && is_punctuation(s.token(indices.front()))) {
    indices.erase(indices.begin());
  }
  while (!indices.empty() && is_punctuation(s.token(indices.back()))) {
    indices.pop_back();
  }
  return indices;
}

ClauseDraft draft(const AnnotatedSentence& s, IndexSet indices,
                  std::vector<InsertedToken> prefix) {
  return {std::move(indices), std::move(prefix), s.sentence_id};
}

// The nearest argument (across frames) that ends before `before` and can act
// as a subject. Ties on the end position go to the shorter span.
std::optional<SrlArgument> preceding_argument(
    const std::vector<const SrlFrame*>& frames, int before) {
  std::optional<SrlArgument> best;
  for (const SrlFrame* frame : frames) {
    for (const auto& arg : frame->arguments) {
      if (!is_core_argument(arg) || arg.end >= before) continue;
      if (!best || arg.end > best->end ||
          (arg.end == best->end && arg.start > best->start)) {
        best = arg;
      }
    }
  }
  return best;
}

// Head-most token of a span: the first whose head lies outside it.
int span_head(const AnnotatedSentence& s, const SrlArgument& arg) {
  for (int i = arg.start; i <= arg.end; ++i) {
    const int h = s.token(i).head;
    if (h < arg.start || h > arg.end) return i;
  }
  return arg.start;
}

// The token of `scope` whose head lies outside it; prefers the sentence root.
int clause_root(const AnnotatedSentence& s, const IndexSet& scope) {
  int found = 0;
  for (int i : scope) {
    const int h = s.token(i).head;
    if (h == 0) return i;
    if (!found && !contains(scope, h)) found = i;
  }
  return found;
}

int subject_child(const AnnotatedSentence& s, int head) {
  if (head == 0) return 0;
  for (int c : s.children(head)) {
    if (deprel_in(s.token(c).deprel, kSubjectLabels)) return c;
  }
  return 0;
}

bool verb_is_finite(const AnnotatedSentence& s, int index) {
  for (int c : s.children(index)) {
    const auto& d = s.token(c).deprel;
    if (deprel_in(d, kSubjectLabels) || deprel_in(d, kAuxiliaryLabels)) {
      return true;
    }
  }
  return false;
}

bool is_frame_verb(const AnnotatedSentence& s, int index) {
  return std::any_of(s.frames.begin(), s.frames.end(), [&](const auto& f) {
    return f.verb().contains(index);
  });
}

bool needs_copula(const AnnotatedSentence& s, const IndexSet& clause) {
  auto first = std::find_if(clause.begin(), clause.end(),
                            [&](int i) { return is_content(s.token(i)); });
  if (first == clause.end()) return false;
  const Token& t = s.token(*first);
  if (t.pos == "ADJ" || t.pos == "ADP") return true;
  if (t.pos == "VERB" && !verb_is_finite(s, t.index)) return true;
  return std::none_of(clause.begin(), clause.end(),
                      [&](int i) { return is_frame_verb(s, i); });
}

bool is_plural(const AnnotatedSentence& s, const IndexSet& subject) {
  int head = 0;
  for (int i : subject) {
    if (!contains(subject, s.token(i).head)) {
      head = i;
      break;
    }
  }
  if (head == 0) return false;
  for (int c : s.children(head)) {
    if (contains(subject, c) && deprel_matches(s.token(c).deprel, "conj")) {
      return true;
    }
  }
  const Token& t = s.token(head);
  const std::string w = to_lower(t.surface);
  if (w == "they" || w == "we" || w == "you") return true;
  return t.pos == "NOUN" && w.size() > 2 && w.back() == 's' &&
         w[w.size() - 2] != 's';
}

bool is_past(const AnnotatedSentence& s, int root) {
  if (root == 0) return false;
  auto past = [&](int i) {
    const std::string w = to_lower(s.token(i).surface);
    return w == "was" || w == "were";
  };
  if (past(root)) return true;
  for (int c : s.children(root)) {
    if (deprel_in(s.token(c).deprel, kAuxiliaryLabels) && past(c)) return true;
  }
  return false;
}

std::string choose_copula(const AnnotatedSentence& s, const IndexSet& subject,
                          int main_root) {
  const bool plural = is_plural(s, subject);
  if (is_past(s, main_root)) return plural ? "were" : "was";
  return plural ? "are" : "is";
}

// Subject tokens carried by a scope's prefix, if any.
IndexSet inherited_subject(const ClauseDraft& scope) {
  IndexSet out;
  for (const auto& p : scope.prefix_tokens) {
    if (!p.is_copula()) out.push_back(p.source_index);
  }
  return out;
}

}  // namespace

std::vector<std::string> EngineConfig::modifier_labels() const {
  std::vector<std::string> out;
  for (const auto* set : {&participle_labels, &relative_clause_labels,
                          &prepositional_labels, &adjectival_labels,
                          &appositional_labels}) {
    out.insert(out.end(), set->begin(), set->end());
  }
  return out;
}

ClauseDraft whole_sentence(const AnnotatedSentence& sentence) {
  ClauseDraft d;
  d.source_id = sentence.sentence_id;
  for (const auto& t : sentence.tokens) d.token_indices.push_back(t.index);
  return d;
}

std::optional<HandlerSplit> wh_handling(const AnnotatedSentence& sentence,
                                        const EngineConfig& config) {
  return wh_handling(sentence, whole_sentence(sentence), config);
}

std::optional<HandlerSplit> conjunction_handling(
    const AnnotatedSentence& sentence, const EngineConfig& config) {
  return conjunction_handling(sentence, whole_sentence(sentence), config);
}

std::optional<HandlerSplit> insertion_handling(
    const AnnotatedSentence& sentence, const EngineConfig& config) {
  return insertion_handling(sentence, whole_sentence(sentence), config);
}

std::optional<HandlerSplit> wh_handling(const AnnotatedSentence& sentence,
                                        const ClauseDraft& scope,
                                        const EngineConfig& /*config*/) {
  const IndexSet& active = scope.token_indices;
  std::vector<SrlArgument> relational;
  std::vector<const SrlFrame*> all_frames;
  for (const auto& frame : sentence.frames) {
    all_frames.push_back(&frame);
    for (const auto& arg : frame.arguments) {
      if (arg.is_relational()) relational.push_back(arg);
    }
  }
  std::stable_sort(relational.begin(), relational.end(),
                   [](const auto& a, const auto& b) { return a.start < b.start; });

  for (const auto& rarg : relational) {
    const IndexSet rspan = span_indices(rarg);
    if (intersect(rspan, active) != rspan) continue;
    auto subject = preceding_argument(all_frames, rarg.start);
    if (!subject) continue;
    const IndexSet subject_span = span_indices(*subject);

    // Largest subtree above the R-ARG that stays clear of the subject.
    int clause_node = 0;
    for (int node = span_head(sentence, rarg); node != 0;
         node = sentence.token(node).head) {
      if (!intersect(subtree(sentence, node), subject_span).empty()) break;
      clause_node = node;
    }
    if (clause_node == 0) continue;
    const IndexSet clause = intersect(subtree(sentence, clause_node), active);
    const IndexSet main = difference(active, clause);
    const IndexSet relative = difference(clause, rspan);
    if (!has_content(sentence, main) || !has_content(sentence, relative)) {
      continue;
    }
    return HandlerSplit{
        draft(sentence, main, scope.prefix_tokens),
        draft(sentence, relative,
              copy_tokens(sentence, trim_punctuation(sentence, subject_span))),
        rarg.start};
  }
  return std::nullopt;
}

bool is_clause_level_and(const AnnotatedSentence& sentence, int and_index) {
  const int next = and_index + 1;
  if (!sentence.valid_index(next)) return false;
  for (const auto& frame : sentence.frames) {
    for (const auto& arg : frame.arguments) {
      if (!arg.is_verb() && arg.start == next) return true;
    }
  }
  const Token& t = sentence.token(next);
  return is_frame_verb(sentence, next) ||
         (deprel_in(t.deprel, kAuxiliaryLabels) &&
          is_frame_verb(sentence, t.head));
}

std::optional<HandlerSplit> conjunction_handling(
    const AnnotatedSentence& sentence, const ClauseDraft& scope,
    const EngineConfig& /*config*/) {
  const IndexSet& active = scope.token_indices;
  for (size_t pos = 0; pos + 1 < active.size(); ++pos) {
    const int and_index = active[pos];
    if (to_lower(sentence.token(and_index).surface) != "and") continue;
    const int next = active[pos + 1];
    const IndexSet before(active.begin(), active.begin() + pos);
    const IndexSet after(active.begin() + pos + 1, active.end());
    if (!has_content(sentence, before) || !has_content(sentence, after)) {
      continue;
    }

    // Case ARG: "and" is followed by a new argument, i.e. a full clause.
    bool starts_argument = false;
    for (const auto& frame : sentence.frames) {
      for (const auto& arg : frame.arguments) {
        if (!arg.is_verb() && arg.start == next) starts_argument = true;
      }
    }
    if (starts_argument) {
      return HandlerSplit{draft(sentence, before, scope.prefix_tokens),
                          draft(sentence, after, {}), and_index};
    }

    // Case V: "and" is followed by a verb (or its auxiliary); the subject is
    // the argument of that verb's frame preceding the "and".
    int verb_index = next;
    const Token& t = sentence.token(next);
    if (!is_frame_verb(sentence, next) &&
        deprel_in(t.deprel, kAuxiliaryLabels)) {
      verb_index = t.head;
    }
    std::vector<const SrlFrame*> verb_frames;
    for (const auto& frame : sentence.frames) {
      if (frame.verb().contains(verb_index)) verb_frames.push_back(&frame);
    }
    if (verb_frames.empty()) continue;
    auto subject = preceding_argument(verb_frames, and_index);
    if (!subject) continue;
    const IndexSet subject_span =
        trim_punctuation(sentence, span_indices(*subject));
    if (subject_span.empty()) continue;
    return HandlerSplit{draft(sentence, before, scope.prefix_tokens),
                        draft(sentence, after, copy_tokens(sentence, subject_span)),
                        and_index};
  }
  return std::nullopt;
}

std::optional<HandlerSplit> insertion_handling(
    const AnnotatedSentence& sentence, const ClauseDraft& scope,
    const EngineConfig& config) {
  const IndexSet& active = scope.token_indices;
  const std::vector<std::string> modifiers = config.modifier_labels();
  const int root = clause_root(sentence, active);

  for (int index : active) {
    const Token& node = sentence.token(index);
    if (index == root || !deprel_in(node.deprel, modifiers)) continue;
    const IndexSet full = subtree(sentence, index);
    const IndexSet extracted = intersect(full, active);
    if (static_cast<int>(extracted.size()) < config.minimum_span) continue;

    // A prepositional phrase that realizes a numbered argument of its head
    // verb is a complement, not a modifier.
    const IndexSet bounds = trim_punctuation(sentence, full);
    bool is_complement = false;
    for (const auto& frame : sentence.frames) {
      if (bounds.empty() || !frame.verb().contains(node.head)) continue;
      for (const auto& arg : frame.arguments) {
        if (is_core_argument(arg) && arg.start == bounds.front() &&
            arg.end == bounds.back()) {
          is_complement = true;
        }
      }
    }
    if (is_complement) continue;

    const IndexSet remainder = difference(active, extracted);
    if (!has_content(sentence, remainder)) continue;

    IndexSet subject;
    if (deprel_in(node.deprel, config.appositional_labels)) {
      subject = difference(subtree(sentence, node.head), full);
    } else if (int subj = subject_child(sentence, root)) {
      subject = difference(subtree(sentence, subj), full);
    } else if (IndexSet inherited = inherited_subject(scope);
               !inherited.empty()) {
      subject = inherited;
    } else if (int subj = subject_child(sentence, sentence.root())) {
      subject = difference(subtree(sentence, subj), full);
    }
    subject = trim_punctuation(sentence, subject);
    if (!has_content(sentence, subject)) continue;

    IndexSet clause = extracted;
    if (deprel_in(node.deprel, config.relative_clause_labels)) {
      auto first = std::find_if(clause.begin(), clause.end(), [&](int i) {
        return !is_punctuation(sentence.token(i));
      });
      if (first != clause.end() &&
          kWhWords.count(to_lower(sentence.token(*first).surface))) {
        clause.erase(first);
      }
    }
    if (!has_content(sentence, clause)) continue;

    std::vector<InsertedToken> prefix = copy_tokens(sentence, subject);
    if (config.copula_insertion && needs_copula(sentence, clause)) {
      prefix.push_back({choose_copula(sentence, subject, sentence.root()), 0});
    }
    return HandlerSplit{draft(sentence, remainder, scope.prefix_tokens),
                        draft(sentence, clause, std::move(prefix)), index};
  }
  return std::nullopt;
}

SplitResult split_and_rephrase(const AnnotatedSentence& sentence,
                               const EngineConfig& config) {
  using Handler = std::optional<HandlerSplit> (*)(
      const AnnotatedSentence&, const ClauseDraft&, const EngineConfig&);
  const std::pair<const char*, Handler> handlers[] = {
      {kWhHandling, &wh_handling},
      {kConjunctionHandling, &conjunction_handling},
      {kInsertionHandling, &insertion_handling},
  };

  SplitResult result;
  std::vector<ClauseDraft> clauses{whole_sentence(sentence)};
  for (const auto& [name, handler] : handlers) {
    // Clauses stay in source order, so max_element's first hit is the
    // earliest of the longest.
    auto target = std::max_element(
        clauses.begin(), clauses.end(), [](const auto& a, const auto& b) {
          return a.token_indices.size() < b.token_indices.size();
        });
    auto split = handler(sentence, *target, config);
    if (!split) continue;
    result.trace.push_back({name, split->trigger_index});
    *target = std::move(split->kept);
    clauses.push_back(std::move(split->split_off));
    std::stable_sort(clauses.begin(), clauses.end(),
                     [](const auto& a, const auto& b) {
                       return a.token_indices.front() < b.token_indices.front();
                     });
  }
  result.changed = !result.trace.empty();
  for (const auto& clause : clauses) {
    result.sentences.push_back(realize(clause, sentence));
  }
  result.clauses = std::move(clauses);
  return result;
}

}  // namespace splitrephrase
