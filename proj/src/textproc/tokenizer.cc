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

#include "littext/textproc/tokenizer.h"

#include <algorithm>

#include "littext/utf8.h"

namespace littext::textproc {
namespace {

enum class CharClass { kSpace, kLetter, kDigit, kJoiner, kPunct };

CharClass Classify(const utf8::Decoded &d) {
  const char32_t cp = d.code_point;
  if (!d.valid) return CharClass::kPunct;
  if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
      cp == '\v') {
    return CharClass::kSpace;
  }
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) {
    return CharClass::kLetter;
  }
  if (cp >= '0' && cp <= '9') return CharClass::kDigit;
  if (cp == '\'' || cp == '-' || cp == 0x2019) return CharClass::kJoiner;
  if (cp < 0xC0) return CharClass::kPunct;
  // General punctuation, CJK punctuation, specials.
  if ((cp >= 0x2000 && cp <= 0x206F) || (cp >= 0x3000 && cp <= 0x303F) ||
      (cp >= 0xFE30 && cp <= 0xFE4F) || (cp >= 0xFFF0 && cp <= 0xFFFF) ||
      cp == 0xD7 || cp == 0xF7) {
    return CharClass::kPunct;
  }
  return CharClass::kLetter;
}

bool IsAlnum(CharClass c) {
  return c == CharClass::kLetter || c == CharClass::kDigit;
}

bool IsTerminator(const Token &t) {
  return t.kind == TokenKind::kPunct &&
         (t.text == "." || t.text == "!" || t.text == "?");
}

bool IsCloser(const Token &t) {
  static constexpr std::string_view kClosers[] = {
      "\"", "'", ")", "]", "\xE2\x80\x9D", "\xE2\x80\x99"};
  return t.kind == TokenKind::kPunct &&
         std::find(std::begin(kClosers), std::end(kClosers), t.text) !=
             std::end(kClosers);
}

bool IsAbbreviation(const Token &t) {
  return t.text == "Mr" || t.text == "Mrs" || t.text == "St" ||
         t.text == "Dr";
}

}  // namespace

std::string NormalizeWord(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (size_t i = 0; i < word.size();) {
    if (word.substr(i, 3) == "\xE2\x80\x99") {
      out += '\'';
      i += 3;
      continue;
    }
    char c = word[i++];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out += c;
  }
  return out;
}

bool IsCapitalized(std::string_view word) {
  return !word.empty() && word[0] >= 'A' && word[0] <= 'Z';
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    const utf8::Decoded d = utf8::DecodeAt(text, pos);
    const CharClass cls = Classify(d);
    if (cls == CharClass::kSpace) {
      pos += d.length;
      continue;
    }
    Token token;
    if (!IsAlnum(cls)) {
      token.kind = TokenKind::kPunct;
      token.span = {pos, pos + d.length};
      token.text = std::string(text.substr(pos, d.length));
      tokens.push_back(std::move(token));
      pos += d.length;
      continue;
    }

    bool has_letter = false;
    size_t end = pos;
    CharClass prev = CharClass::kSpace;
    while (end < text.size()) {
      const utf8::Decoded cur = utf8::DecodeAt(text, end);
      const CharClass c = Classify(cur);
      if (IsAlnum(c)) {
        has_letter |= c == CharClass::kLetter;
        prev = c;
        end += cur.length;
        continue;
      }
      // Joiners, and separators inside numbers ("3.5", "1,000").
      const bool joiner = c == CharClass::kJoiner;
      const bool separator = (cur.code_point == '.' ||
                              cur.code_point == ',') &&
                             prev == CharClass::kDigit;
      if ((joiner || separator) && IsAlnum(prev) &&
          end + cur.length < text.size()) {
        const CharClass next =
            Classify(utf8::DecodeAt(text, end + cur.length));
        if ((joiner && IsAlnum(next)) ||
            (separator && next == CharClass::kDigit)) {
          end += cur.length;
          prev = CharClass::kSpace;
          continue;
        }
      }
      break;
    }
    token.kind = has_letter ? TokenKind::kWord : TokenKind::kNumber;
    token.span = {pos, end};
    token.text = std::string(text.substr(pos, end - pos));
    tokens.push_back(std::move(token));
    pos = end;
  }

  const auto ranges = SentenceRanges(tokens);
  for (size_t s = 0; s < ranges.size(); ++s) {
    for (size_t i = ranges[s].begin; i < ranges[s].end; ++i) {
      tokens[i].sentence = static_cast<int>(s);
    }
  }
  return tokens;
}

std::vector<TokenRange> SentenceRanges(const std::vector<Token> &tokens) {
  std::vector<TokenRange> ranges;
  size_t start = 0;
  size_t i = 0;
  while (i < tokens.size()) {
    if (!IsTerminator(tokens[i]) ||
        (tokens[i].text == "." && i > 0 && IsAbbreviation(tokens[i - 1]) &&
         tokens[i - 1].span.end == tokens[i].span.begin)) {
      ++i;
      continue;
    }
    // Terminator runs ("?!", "...") and glued closing quotes or brackets
    // stay in this sentence.
    size_t end = i + 1;
    while (end < tokens.size() &&
           tokens[end].span.begin == tokens[end - 1].span.end &&
           (IsTerminator(tokens[end]) || IsCloser(tokens[end]))) {
      ++end;
    }
    size_t next = end;
    while (next < tokens.size() && tokens[next].kind == TokenKind::kPunct &&
           !IsTerminator(tokens[next])) {
      ++next;
    }
    const bool at_end = next == tokens.size();
    const bool capital_next = !at_end &&
                              tokens[next].kind == TokenKind::kWord &&
                              IsCapitalized(tokens[next].text);
    if (at_end || capital_next) {
      ranges.push_back({start, end});
      start = end;
    }
    i = end;
  }
  if (start < tokens.size()) ranges.push_back({start, tokens.size()});
  return ranges;
}

int CountWords(std::string_view text) {
  int words = 0;
  for (const Token &t : Tokenize(text)) {
    if (t.kind == TokenKind::kWord) ++words;
  }
  return words;
}

}  // namespace littext::textproc
