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

#ifndef LITTEXT_TEXTPROC_TOKENIZER_H_
#define LITTEXT_TEXTPROC_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"

namespace littext::textproc {

enum class TokenKind { kWord, kNumber, kPunct };

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kPunct;
  CharSpan span;
  int sentence = 0;
};

// Half-open range of token indices.
struct TokenRange {
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const TokenRange &) const = default;
};

// Lossless tokenization: token texts interleaved with the whitespace between
// their spans rebuild `text` byte for byte. Apostrophes (straight or curly)
// and hyphens between two letters or digits stay inside the word. Every
// other non-space code point is its own punctuation token; invalid UTF-8
// bytes become one-byte punctuation tokens. Sentence indices are filled in.
std::vector<Token> Tokenize(std::string_view text);

// Sentence breaks follow `.`, `!` or `?` (plus any closing quotes or
// brackets glued to them) when the next word is capitalized or the text
// ends. A period right after Mr, Mrs, St or Dr never breaks.
std::vector<TokenRange> SentenceRanges(const std::vector<Token> &tokens);

// Lowercase form used for lexicon lookups and phrase keys; curly apostrophes
// fold to straight ones.
std::string NormalizeWord(std::string_view word);

bool IsCapitalized(std::string_view word);

int CountWords(std::string_view text);

}  // namespace littext::textproc

#endif  // LITTEXT_TEXTPROC_TOKENIZER_H_
