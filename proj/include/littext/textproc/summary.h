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

#ifndef LITTEXT_TEXTPROC_SUMMARY_H_
#define LITTEXT_TEXTPROC_SUMMARY_H_

#include <optional>
#include <string>
#include <string_view>

#include "littext/textproc/lexicon.h"

namespace littext::textproc {

// Two-word landmark for a paragraph: a character and what they do.
struct ParagraphSummary {
  std::string proper_noun;
  std::string verb;  // empty when the paragraph has no verb at all

  std::string Text() const {
    return verb.empty() ? proper_noun : proper_noun + " " + verb;
  }
  bool operator==(const ParagraphSummary &) const = default;
};

// Picks the most frequent proper-noun name group (ties: earliest) and the
// first verb after one of its mentions in the same sentence, falling back to
// the paragraph's most frequent verb. No proper noun -> nullopt.
std::optional<ParagraphSummary> SummarizeParagraph(std::string_view paragraph,
                                                   const Lexicon &lexicon);

}  // namespace littext::textproc

#endif  // LITTEXT_TEXTPROC_SUMMARY_H_
