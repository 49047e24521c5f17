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

#ifndef LITTEXT_CORPUS_DIALOGUE_H_
#define LITTEXT_CORPUS_DIALOGUE_H_

#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"

namespace littext::corpus {

inline constexpr std::string_view kUnknownSpeaker = "Unknown";

// One quoted speech turn. `span` covers the quoted content only, so
// source.substr(span.begin, span.size()) == text.
struct Utterance {
  int index = 0;
  std::string speaker{kUnknownSpeaker};
  std::string addressee{kUnknownSpeaker};
  std::string text;
  CharSpan span;
};

struct DialogueExtraction {
  std::vector<Utterance> utterances;
  bool unbalanced = false;  // an opening quote was never closed
};

// Finds every quoted span in novel text and attributes it.
//
// Straight and curly double quotes are one quote class: each mark toggles
// between narration and speech. Paragraphs are separated by blank lines; a
// conversation block is a run of paragraphs that each contain speech.
//
// Speaker, in priority order:
//   1. an explicit tag next to the quote in the same sentence, either
//      `<verb> (the)? <Name>` or `<Name> <verb>` with verb one of
//      said/cried/replied/asked/shouted (text after the closing quote is
//      searched before text ahead of the opening quote);
//   2. the speaker of an earlier quote in the same paragraph, otherwise
//      turn-taking: the speaker before the most recent one in the block;
//   3. Unknown.
// Addressee is the next different speaker in the block, else the previous
// different speaker, else Unknown.
DialogueExtraction ExtractUtterances(std::string_view text);

// Pre-attributed bypass format: header `index<TAB>speaker<TAB>addressee<TAB>
// text`, indices strictly increasing. Spans point at the text column.
std::vector<Utterance> ParseUtteranceTable(std::string_view tsv);

// True when the first line is the utterance-table header.
bool LooksLikeUtteranceTable(std::string_view content);

}  // namespace littext::corpus

#endif  // LITTEXT_CORPUS_DIALOGUE_H_
