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

#include "littext/textproc/tagger.h"

namespace littext::textproc {

std::string_view TagName(Tag tag) {
  switch (tag) {
    case Tag::kPropn: return "PROPN";
    case Tag::kNoun: return "NOUN";
    case Tag::kVerb: return "VERB";
    case Tag::kFunc: return "FUNC";
    case Tag::kPron: return "PRON";
    case Tag::kOther: return "OTHER";
  }
  return "OTHER";
}

std::vector<TaggedToken> TagTokens(const std::vector<Token> &tokens,
                                   const Lexicon &lexicon) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  int seen_sentence = -1;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token &token = tokens[i];
    TaggedToken out{token, Tag::kOther};
    if (token.kind != TokenKind::kWord) {
      tagged.push_back(std::move(out));
      continue;
    }
    const bool initial = token.sentence != seen_sentence;
    seen_sentence = token.sentence;

    const std::string lower = NormalizeWord(token.text);
    const bool capitalized = IsCapitalized(token.text);
    if (lexicon.IsPronoun(lower)) {
      out.tag = Tag::kPron;
    } else if (lexicon.IsFunctionWord(lower)) {
      out.tag = Tag::kFunc;
    } else if (!capitalized &&
               (lexicon.IsKnownVerb(lower) || lexicon.HasVerbSuffix(lower))) {
      out.tag = Tag::kVerb;
    } else if (capitalized) {
      const bool next_capitalized =
          i + 1 < tokens.size() && tokens[i + 1].kind == TokenKind::kWord &&
          IsCapitalized(tokens[i + 1].text);
      out.tag = (!initial || next_capitalized) ? Tag::kPropn : Tag::kNoun;
    } else {
      out.tag = Tag::kNoun;
    }
    tagged.push_back(std::move(out));
  }
  return tagged;
}

std::vector<TaggedToken> TagText(std::string_view text,
                                 const Lexicon &lexicon) {
  return TagTokens(Tokenize(text), lexicon);
}

}  // namespace littext::textproc
