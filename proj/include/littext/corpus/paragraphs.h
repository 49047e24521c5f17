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

#ifndef LITTEXT_CORPUS_PARAGRAPHS_H_
#define LITTEXT_CORPUS_PARAGRAPHS_H_

#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"

namespace littext::corpus {

struct Paragraph {
  int index = 0;
  std::string text;
  CharSpan span;
};

// Splits on blank lines (lines holding only whitespace). Each paragraph is
// trimmed and empty ones are dropped, so the spans cover every non-blank
// character exactly once.
std::vector<Paragraph> SplitParagraphs(std::string_view text);

}  // namespace littext::corpus

#endif  // LITTEXT_CORPUS_PARAGRAPHS_H_
