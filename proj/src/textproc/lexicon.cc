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

#include "littext/textproc/lexicon.h"

#include "littext/common.h"

namespace littext::textproc {

Lexicon::Lexicon(std::set<std::string> function_words,
                 std::set<std::string> pronouns,
                 std::set<std::string> known_verbs,
                 std::set<std::string> noun_exceptions)
    : function_words_(function_words.begin(), function_words.end()),
      pronouns_(pronouns.begin(), pronouns.end()),
      known_verbs_(known_verbs.begin(), known_verbs.end()),
      noun_exceptions_(noun_exceptions.begin(), noun_exceptions.end()) {
  Validate();
}

Lexicon Lexicon::Parse(std::string_view content) {
  Lexicon lexicon;
  std::set<std::string, std::less<>> *section = nullptr;
  int line_number = 0;
  for (const Line &line : SplitLines(StripBom(content))) {
    ++line_number;
    std::string_view text = Trim(line.text);
    if (text.empty() || text[0] == '#') continue;
    if (text.front() == '[' && text.back() == ']') {
      std::string_view name = text.substr(1, text.size() - 2);
      if (name == "function") {
        section = &lexicon.function_words_;
      } else if (name == "pronoun") {
        section = &lexicon.pronouns_;
      } else if (name == "verb") {
        section = &lexicon.known_verbs_;
      } else if (name == "noun") {
        section = &lexicon.noun_exceptions_;
      } else {
        throw InputError("lexicon line " + std::to_string(line_number) +
                         ": unknown section [" + std::string(name) + "]");
      }
      continue;
    }
    if (section == nullptr) {
      throw InputError("lexicon line " + std::to_string(line_number) +
                       ": word before any section header");
    }
    section->insert(AsciiLower(text));
  }
  lexicon.Validate();
  return lexicon;
}

Lexicon Lexicon::Load(const std::string &path) {
  return Parse(ReadFile(path));
}

void Lexicon::Validate() const {
  for (const std::string &verb : known_verbs_) {
    if (function_words_.count(verb) || pronouns_.count(verb)) {
      throw InputError("lexicon: '" + verb +
                       "' is listed as a verb and as a function word or "
                       "pronoun");
    }
  }
}

bool Lexicon::IsFunctionWord(std::string_view lower) const {
  return function_words_.find(lower) != function_words_.end();
}

bool Lexicon::IsPronoun(std::string_view lower) const {
  return pronouns_.find(lower) != pronouns_.end();
}

bool Lexicon::IsKnownVerb(std::string_view lower) const {
  return known_verbs_.find(lower) != known_verbs_.end();
}

bool Lexicon::HasVerbSuffix(std::string_view lower) const {
  if (noun_exceptions_.find(lower) != noun_exceptions_.end()) return false;
  for (const std::string &suffix : verb_suffixes_) {
    // Keep a stem of at least three letters so "bed" and "king" stay nouns.
    if (lower.size() >= suffix.size() + 3 && lower.ends_with(suffix)) {
      return true;
    }
  }
  return false;
}

}  // namespace littext::textproc
