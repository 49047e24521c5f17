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

#include "littext/corpus/dialogue.h"

#include <algorithm>
#include <charconv>
#include <optional>

namespace littext::corpus {
namespace {

constexpr std::string_view kSpeechVerbs[] = {"said", "cried", "replied",
                                             "asked", "shouted"};
// Capitalized words that open a sentence but never start a name.
constexpr std::string_view kOpeners[] = {
    "The", "Then", "And", "But", "So", "Now", "Here", "There", "When",
    "As", "Oh", "Well", "Yes", "No", "This", "That", "At", "In"};
constexpr std::string_view kPronouns[] = {"I", "He", "She", "They", "We",
                                          "You", "It"};

// Position and byte length of one quote mark.
struct QuoteMark {
  size_t pos;
  size_t len;
};

std::optional<size_t> QuoteMarkLength(std::string_view text, size_t pos) {
  if (text[pos] == '"') return 1;
  // U+201C and U+201D.
  if (text.substr(pos, 3) == "\xE2\x80\x9C" ||
      text.substr(pos, 3) == "\xE2\x80\x9D") {
    return 3;
  }
  return std::nullopt;
}

struct QuotedSpan {
  QuoteMark open;
  QuoteMark close;
  size_t content_begin() const { return open.pos + open.len; }
  size_t content_end() const { return close.pos; }
  size_t after() const { return close.pos + close.len; }
};

// A word or punctuation piece of attribution context.
struct Piece {
  std::string_view text;
  bool word = false;
};

std::vector<Piece> Pieces(std::string_view s) {
  std::vector<Piece> out;
  size_t i = 0;
  const auto is_letter = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           static_cast<unsigned char>(c) >= 0x80;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (is_letter(c) && static_cast<unsigned char>(c) < 0x80) {
      size_t j = i;
      while (j < s.size() &&
             ((is_letter(s[j]) && static_cast<unsigned char>(s[j]) < 0x80) ||
              (s[j] == '\'' && j + 1 < s.size() && is_letter(s[j + 1])) ||
              (s[j] == '-' && j + 1 < s.size() && is_letter(s[j + 1])))) {
        ++j;
      }
      out.push_back({s.substr(i, j - i), true});
      i = j;
    } else {
      out.push_back({s.substr(i, 1), false});
      ++i;
    }
  }
  return out;
}

bool IsCapitalized(const Piece &p) {
  return p.word && p.text[0] >= 'A' && p.text[0] <= 'Z';
}

bool IsSpeechVerb(const Piece &p) {
  return p.word && std::find(std::begin(kSpeechVerbs), std::end(kSpeechVerbs),
                             p.text) != std::end(kSpeechVerbs);
}

bool IsPronoun(std::string_view w) {
  return std::find(std::begin(kPronouns), std::end(kPronouns), w) !=
         std::end(kPronouns);
}

bool IsOpener(std::string_view w) {
  return std::find(std::begin(kOpeners), std::end(kOpeners), w) !=
         std::end(kOpeners);
}

std::string JoinWords(const std::vector<Piece> &pieces, size_t begin,
                      size_t end) {
  std::string name;
  for (size_t i = begin; i < end; ++i) {
    if (!name.empty()) name += ' ';
    name += pieces[i].text;
  }
  return name;
}

struct TagMatch {
  size_t position;  // index of the verb piece
  std::string name;
};

// All `<verb> (the)? <Name>` and `<Name> <verb>` matches, in text order.
std::vector<TagMatch> FindSpeechTags(std::string_view context) {
  const std::vector<Piece> pieces = Pieces(context);
  std::vector<TagMatch> matches;
  for (size_t v = 0; v < pieces.size(); ++v) {
    if (!IsSpeechVerb(pieces[v])) continue;
    // Name after the verb.
    size_t n = v + 1;
    if (n < pieces.size() && pieces[n].word &&
        (pieces[n].text == "the" || pieces[n].text == "The")) {
      ++n;
    }
    size_t end = n;
    while (end < pieces.size() && IsCapitalized(pieces[end])) ++end;
    if (end > n && !IsPronoun(pieces[n].text)) {
      matches.push_back({v, JoinWords(pieces, n, end)});
      continue;
    }
    // Name before the verb.
    size_t begin = v;
    while (begin > 0 && IsCapitalized(pieces[begin - 1])) --begin;
    while (begin < v && IsOpener(pieces[begin].text)) ++begin;
    if (begin < v && !(v - begin == 1 && IsPronoun(pieces[begin].text))) {
      matches.push_back({v, JoinWords(pieces, begin, v)});
    }
  }
  return matches;
}

// Context after a closing quote: up to the next quote mark, the paragraph end
// or the end of the sentence, whichever comes first.
std::string_view TrailingContext(std::string_view text, size_t from,
                                 size_t limit) {
  size_t end = from;
  while (end < limit && text[end] != '.' && text[end] != '!' &&
         text[end] != '?') {
    ++end;
  }
  return text.substr(from, end - from);
}

// Context before an opening quote, back to the previous quote, the paragraph
// start or the previous sentence terminator.
std::string_view LeadingContext(std::string_view text, size_t limit,
                                size_t to) {
  size_t begin = to;
  while (begin > limit && text[begin - 1] != '.' && text[begin - 1] != '!' &&
         text[begin - 1] != '?') {
    --begin;
  }
  return text.substr(begin, to - begin);
}

// Byte offsets where blank-line separated paragraphs start.
std::vector<size_t> ParagraphStarts(std::string_view text) {
  std::vector<size_t> starts = {0};
  bool prev_blank = false;
  for (const Line &line : SplitLines(text)) {
    const bool blank = Trim(line.text).empty();
    if (!blank && prev_blank) starts.push_back(line.offset);
    prev_blank = blank;
  }
  return starts;
}

size_t ParagraphOf(const std::vector<size_t> &starts, size_t pos) {
  auto it = std::upper_bound(starts.begin(), starts.end(), pos);
  return static_cast<size_t>(it - starts.begin()) - 1;
}

bool Known(const std::string &speaker) { return speaker != kUnknownSpeaker; }

}  // namespace

DialogueExtraction ExtractUtterances(std::string_view text) {
  DialogueExtraction result;

  std::vector<QuotedSpan> spans;
  std::optional<QuoteMark> open;
  for (size_t i = 0; i < text.size();) {
    auto len = QuoteMarkLength(text, i);
    if (!len) {
      ++i;
      continue;
    }
    if (open) {
      spans.push_back({*open, {i, *len}});
      open.reset();
    } else {
      open = QuoteMark{i, *len};
    }
    i += *len;
  }
  result.unbalanced = open.has_value();
  if (spans.empty()) return result;

  const std::vector<size_t> starts = ParagraphStarts(text);
  const auto paragraph_end = [&](size_t p) {
    return p + 1 < starts.size() ? starts[p + 1] : text.size();
  };

  // Conversation blocks: consecutive paragraphs that contain speech.
  std::vector<size_t> paragraph(spans.size());
  std::vector<size_t> block(spans.size());
  size_t current_block = 0;
  for (size_t i = 0; i < spans.size(); ++i) {
    paragraph[i] = ParagraphOf(starts, spans[i].open.pos);
    if (i > 0 && paragraph[i] > paragraph[i - 1] + 1) ++current_block;
    block[i] = current_block;
  }

  std::vector<Utterance> &out = result.utterances;
  for (size_t i = 0; i < spans.size(); ++i) {
    const QuotedSpan &q = spans[i];
    Utterance u;
    u.index = static_cast<int>(i);
    u.span = {q.content_begin(), q.content_end()};
    u.text = std::string(text.substr(u.span.begin, u.span.size()));

    const size_t p = paragraph[i];
    size_t trailing_limit = paragraph_end(p);
    if (i + 1 < spans.size()) {
      trailing_limit = std::min(trailing_limit, spans[i + 1].open.pos);
    }
    size_t leading_limit = starts[p];
    if (i > 0) leading_limit = std::max(leading_limit, spans[i - 1].after());

    auto after = FindSpeechTags(TrailingContext(text, q.after(),
                                                trailing_limit));
    auto before = FindSpeechTags(LeadingContext(text, leading_limit,
                                                q.open.pos));
    if (!after.empty()) {
      u.speaker = after.front().name;
    } else if (!before.empty()) {
      u.speaker = before.back().name;
    } else {
      // Same paragraph: the paragraph's speaker continues.
      for (size_t j = i; j-- > 0 && paragraph[j] == p;) {
        if (Known(out[j].speaker)) {
          u.speaker = out[j].speaker;
          break;
        }
      }
      // Turn-taking across paragraphs of the block.
      if (!Known(u.speaker)) {
        std::string last, before_last;
        for (size_t j = i; j-- > 0 && block[j] == block[i];) {
          const std::string &s = out[j].speaker;
          if (!Known(s)) continue;
          if (last.empty()) {
            last = s;
          } else if (s != last) {
            before_last = s;
            break;
          }
        }
        if (!before_last.empty()) u.speaker = before_last;
      }
    }
    out.push_back(std::move(u));
  }

  for (size_t i = 0; i < out.size(); ++i) {
    const std::string &me = out[i].speaker;
    const auto other = [&](size_t j) {
      return Known(out[j].speaker) && out[j].speaker != me;
    };
    for (size_t j = i + 1; j < out.size() && block[j] == block[i]; ++j) {
      if (other(j)) {
        out[i].addressee = out[j].speaker;
        break;
      }
    }
    if (Known(out[i].addressee)) continue;
    for (size_t j = i; j-- > 0 && block[j] == block[i];) {
      if (other(j)) {
        out[i].addressee = out[j].speaker;
        break;
      }
    }
  }
  return result;
}

bool LooksLikeUtteranceTable(std::string_view content) {
  content = StripBom(content);
  size_t nl = content.find('\n');
  std::string_view first = content.substr(0, nl);
  if (!first.empty() && first.back() == '\r') first.remove_suffix(1);
  return first == "index\tspeaker\taddressee\ttext";
}

std::vector<Utterance> ParseUtteranceTable(std::string_view tsv) {
  const size_t bom = tsv.size() - StripBom(tsv).size();
  if (!LooksLikeUtteranceTable(tsv)) {
    throw InputError(
        "utterance table: expected header index\\tspeaker\\taddressee\\ttext");
  }
  std::vector<Utterance> out;
  const std::vector<Line> lines = SplitLines(tsv.substr(bom));
  for (size_t n = 1; n < lines.size(); ++n) {
    const Line &line = lines[n];
    if (Trim(line.text).empty()) continue;
    std::vector<size_t> tabs;
    for (size_t k = 0; k < line.text.size(); ++k) {
      if (line.text[k] == '\t') tabs.push_back(k);
    }
    if (tabs.size() != 3) {
      throw InputError("utterance table: line " + std::to_string(n + 1) +
                       " needs 4 columns");
    }
    std::string_view index_field = line.text.substr(0, tabs[0]);
    Utterance u;
    auto [ptr, ec] = std::from_chars(
        index_field.data(), index_field.data() + index_field.size(), u.index);
    if (ec != std::errc() || ptr != index_field.data() + index_field.size()) {
      throw InputError("utterance table: line " + std::to_string(n + 1) +
                       ": bad index");
    }
    if (!out.empty() && u.index <= out.back().index) {
      throw InputError("utterance table: line " + std::to_string(n + 1) +
                       ": index not increasing");
    }
    std::string_view speaker =
        Trim(line.text.substr(tabs[0] + 1, tabs[1] - tabs[0] - 1));
    std::string_view addressee =
        Trim(line.text.substr(tabs[1] + 1, tabs[2] - tabs[1] - 1));
    if (!speaker.empty()) u.speaker = std::string(speaker);
    if (!addressee.empty()) u.addressee = std::string(addressee);
    u.text = std::string(line.text.substr(tabs[2] + 1));
    const size_t begin = bom + line.offset + tabs[2] + 1;
    u.span = {begin, begin + u.text.size()};
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace littext::corpus
