// Copyright 2026 The Littext Authors.
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

#ifndef LITTEXT_TEXTPROC_LEXICON_H_
#define LITTEXT_TEXTPROC_LEXICON_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace littext::textproc {

// Word lists that drive the rule-based tagger. Immutable once built.
//
// File format: UTF-8, one lowercase word per line under section headers
// `[function]`, `[pronoun]`, `[verb]` and the optional `[noun]` (words that
// the -ed/-ing suffix rule must not turn into verbs, e.g. "ceiling").
// Blank lines and lines starting with '#' are ignored.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::set<std::string> function_words, std::set<std::string> pronouns,
          std::set<std::string> known_verbs,
          std::set<std::string> noun_exceptions = {});

  // Throws InputError on unknown sections, words outside a section, or a
  // word listed both as a verb and as a function word or pronoun.
  static Lexicon Parse(std::string_view content);
  static Lexicon Load(const std::string &path);

  bool IsFunctionWord(std::string_view lower) const;
  bool IsPronoun(std::string_view lower) const;
  bool IsKnownVerb(std::string_view lower) const;
  // Suffix heuristic for past and progressive forms ("drowned", "boiling").
  bool HasVerbSuffix(std::string_view lower) const;

  const std::set<std::string, std::less<>> &function_words() const {
    return function_words_;
  }
  const std::set<std::string, std::less<>> &pronouns() const {
    return pronouns_;
  }
  const std::set<std::string, std::less<>> &known_verbs() const {
    return known_verbs_;
  }
  const std::vector<std::string> &verb_suffixes() const {
    return verb_suffixes_;
  }

 private:
  void Validate() const;

  std::set<std::string, std::less<>> function_words_;
  std::set<std::string, std::less<>> pronouns_;
  std::set<std::string, std::less<>> known_verbs_;
  std::set<std::string, std::less<>> noun_exceptions_;
  std::vector<std::string> verb_suffixes_ = {"ed", "ing"};
};

}  // namespace littext::textproc

#endif  // LITTEXT_TEXTPROC_LEXICON_H_
