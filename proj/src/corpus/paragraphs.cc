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

#include "littext/corpus/paragraphs.h"

namespace littext::corpus {

std::vector<Paragraph> SplitParagraphs(std::string_view text) {
  std::vector<Paragraph> paragraphs;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  const auto flush = [&](size_t begin, size_t end) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin == end) return;
    Paragraph p;
    p.index = static_cast<int>(paragraphs.size());
    p.text = std::string(text.substr(begin, end - begin));
    p.span = {begin, end};
    paragraphs.push_back(std::move(p));
  };

  size_t block_start = 0;
  bool in_block = false;
  for (const Line &line : SplitLines(text)) {
    const bool blank = Trim(line.text).empty();
    if (blank) {
      if (in_block) flush(block_start, line.offset);
      in_block = false;
    } else if (!in_block) {
      block_start = line.offset;
      in_block = true;
    }
  }
  if (in_block) flush(block_start, text.size());
  return paragraphs;
}

}  // namespace littext::corpus
