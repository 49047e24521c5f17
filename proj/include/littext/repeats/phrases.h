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

#ifndef LITTEXT_REPEATS_PHRASES_H_
#define LITTEXT_REPEATS_PHRASES_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"
#include "littext/corpus/dialogue.h"
#include "littext/textproc/lexicon.h"
#include "littext/textproc/tagger.h"

namespace littext::repeats {

inline constexpr std::string_view kPronounPlaceholder = "PRON";

// Order-insensitive word set: the sorted multiset of lowercased window
// words, with every pronoun replaced by kPronounPlaceholder so "his head"
// and "her head" agree.
struct PhraseKey {
  std::vector<std::string> words;

  std::string ToString() const;
  auto operator<=>(const PhraseKey &) const = default;
};

PhraseKey MakePhraseKey(std::span<const textproc::TaggedToken> window);

// Where one window of a repeated set sits inside an utterance. Token indices
// refer to the utterance's full token list (punctuation included), `chars`
// to its text.
struct PhraseOccurrence {
  int utterance = 0;  // Utterance::index
  size_t token_begin = 0;
  size_t token_end = 0;
  CharSpan chars;

  bool Contains(const PhraseOccurrence &other) const {
    return utterance == other.utterance && token_begin <= other.token_begin &&
           other.token_end <= token_end;
  }
  bool operator==(const PhraseOccurrence &) const = default;
};

struct PhraseSetResult {
  std::string speaker;
  PhraseKey key;
  std::vector<PhraseOccurrence> occurrences;
  int support = 0;
  std::string color;
};

struct RepeatOptions {
  int min_length = 3;
  int max_length = 7;
  int min_support = 2;
};

// Mines word sets each speaker repeats.
//
// Windows of every length in [min_length, max_length] slide over the words
// of each sentence (punctuation skipped, never crossing a sentence break).
// Occurrences of one key never overlap: within an utterance the leftmost
// one wins and later overlapping windows are not counted.
// A key survives when it occurs at least min_support times for the speaker
// and holds a word that is neither a function word nor a pronoun. Keys are
// then visited longest first; a key is dropped when one longer surviving key
// contains every one of its occurrences.
// Results come per speaker in order of first appearance, then by first
// occurrence.
std::vector<PhraseSetResult> DetectRepeats(
    const std::vector<corpus::Utterance> &utterances,
    const textproc::Lexicon &lexicon, const RepeatOptions &options = {});

// Round-robin over `palette` in result order. Throws std::invalid_argument
// for an empty palette.
void AssignPhraseColors(std::vector<PhraseSetResult> &results,
                        std::span<const std::string> palette);

}  // namespace littext::repeats

#endif  // LITTEXT_REPEATS_PHRASES_H_
