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

#ifndef LITTEXT_TEXTPROC_TAGGER_H_
#define LITTEXT_TEXTPROC_TAGGER_H_

#include <string_view>
#include <vector>

#include "littext/textproc/lexicon.h"
#include "littext/textproc/tokenizer.h"

namespace littext::textproc {

enum class Tag { kPropn, kNoun, kVerb, kFunc, kPron, kOther };

std::string_view TagName(Tag tag);

struct TaggedToken {
  Token token;
  Tag tag = Tag::kOther;
};

// Rule-based tagging, first match wins:
//   pronoun lexicon -> PRON; function lexicon -> FUNC;
//   lowercase word that is a known verb or ends in -ed/-ing -> VERB;
//   capitalized word not opening its sentence, or opening it and directly
//   followed by another capitalized word -> PROPN;
//   other words -> NOUN; numbers and punctuation -> OTHER.
// `tokens` must carry sentence indices (as produced by Tokenize).
std::vector<TaggedToken> TagTokens(const std::vector<Token> &tokens,
                                   const Lexicon &lexicon);

// Tokenize followed by TagTokens.
std::vector<TaggedToken> TagText(std::string_view text, const Lexicon &lexicon);

}  // namespace littext::textproc

#endif  // LITTEXT_TEXTPROC_TAGGER_H_
