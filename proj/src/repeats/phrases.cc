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

#include "littext/repeats/phrases.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace littext::repeats {

using textproc::Tag;
using textproc::TaggedToken;
using textproc::TokenKind;

std::string PhraseKey::ToString() const {
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

PhraseKey MakePhraseKey(std::span<const TaggedToken> window) {
  PhraseKey key;
  key.words.reserve(window.size());
  for (const TaggedToken &t : window) {
    key.words.push_back(t.tag == Tag::kPron
                            ? std::string(kPronounPlaceholder)
                            : textproc::NormalizeWord(t.token.text));
  }
  std::sort(key.words.begin(), key.words.end());
  return key;
}

namespace {

struct Candidate {
  PhraseKey key;
  std::vector<PhraseOccurrence> occurrences;
};

bool HasContentWord(const PhraseKey &key, const textproc::Lexicon &lexicon) {
  return std::any_of(key.words.begin(), key.words.end(),
                     [&](const std::string &w) {
                       return w != kPronounPlaceholder &&
                              !lexicon.IsFunctionWord(w);
                     });
}

bool OccurrenceLess(const PhraseOccurrence &a, const PhraseOccurrence &b) {
  return std::tie(a.utterance, a.token_begin, a.token_end) <
         std::tie(b.utterance, b.token_begin, b.token_end);
}

// Keeps, per utterance, the leftmost occurrences that do not overlap an
// occurrence already kept. Input must be sorted by OccurrenceLess.
void DropOverlaps(std::vector<PhraseOccurrence> &occurrences) {
  std::vector<PhraseOccurrence> kept;
  for (const PhraseOccurrence &o : occurrences) {
    if (!kept.empty() && kept.back().utterance == o.utterance &&
        o.token_begin < kept.back().token_end) {
      continue;
    }
    kept.push_back(o);
  }
  occurrences = std::move(kept);
}

// Every occurrence of `inner` lies inside some occurrence of `outer`.
bool CoveredBy(const Candidate &inner, const Candidate &outer) {
  return std::all_of(
      inner.occurrences.begin(), inner.occurrences.end(),
      [&](const PhraseOccurrence &o) {
        return std::any_of(outer.occurrences.begin(), outer.occurrences.end(),
                           [&](const PhraseOccurrence &big) {
                             return big.Contains(o);
                           });
      });
}

std::vector<PhraseSetResult> MineSpeaker(
    const std::string &speaker,
    const std::vector<const corpus::Utterance *> &utterances,
    const textproc::Lexicon &lexicon, const RepeatOptions &options) {
  std::unordered_map<std::string, Candidate> by_key;
  for (const corpus::Utterance *u : utterances) {
    const std::vector<TaggedToken> tagged = textproc::TagText(u->text, lexicon);
    // Non-punctuation token indices, grouped by sentence.
    std::vector<std::vector<size_t>> sentences;
    int current = -1;
    for (size_t i = 0; i < tagged.size(); ++i) {
      if (tagged[i].token.kind == TokenKind::kPunct) continue;
      if (tagged[i].token.sentence != current) {
        sentences.emplace_back();
        current = tagged[i].token.sentence;
      }
      sentences.back().push_back(i);
    }
    std::vector<TaggedToken> window;
    for (const auto &words : sentences) {
      for (int len = options.min_length; len <= options.max_length; ++len) {
        const size_t n = static_cast<size_t>(len);
        for (size_t start = 0; start + n <= words.size(); ++start) {
          window.clear();
          for (size_t k = start; k < start + n; ++k) {
            window.push_back(tagged[words[k]]);
          }
          PhraseKey key = MakePhraseKey(window);
          const size_t first = words[start];
          const size_t last = words[start + n - 1];
          PhraseOccurrence occurrence{
              u->index, first, last + 1,
              {tagged[first].token.span.begin, tagged[last].token.span.end}};
          auto [it, inserted] = by_key.try_emplace(key.ToString());
          if (inserted) it->second.key = std::move(key);
          it->second.occurrences.push_back(occurrence);
        }
      }
    }
  }

  std::vector<Candidate> candidates;
  for (auto &[text, candidate] : by_key) {
    std::sort(candidate.occurrences.begin(), candidate.occurrences.end(),
              OccurrenceLess);
    DropOverlaps(candidate.occurrences);
    if (static_cast<int>(candidate.occurrences.size()) <
            options.min_support ||
        !HasContentWord(candidate.key, lexicon)) {
      continue;
    }
    candidates.push_back(std::move(candidate));
  }
  // Longest first; the key order only makes the walk deterministic.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.key.words.size() != b.key.words.size()) {
                return a.key.words.size() > b.key.words.size();
              }
              return a.key < b.key;
            });

  std::vector<Candidate> survivors;
  for (Candidate &c : candidates) {
    const bool dominated = std::any_of(
        survivors.begin(), survivors.end(), [&](const Candidate &s) {
          return s.key.words.size() > c.key.words.size() && CoveredBy(c, s);
        });
    if (!dominated) survivors.push_back(std::move(c));
  }

  std::sort(survivors.begin(), survivors.end(),
            [](const Candidate &a, const Candidate &b) {
              const PhraseOccurrence &x = a.occurrences.front();
              const PhraseOccurrence &y = b.occurrences.front();
              if (x.utterance != y.utterance) return x.utterance < y.utterance;
              if (x.token_begin != y.token_begin) {
                return x.token_begin < y.token_begin;
              }
              if (x.token_end != y.token_end) return x.token_end > y.token_end;
              return a.key < b.key;
            });

  std::vector<PhraseSetResult> results;
  for (Candidate &c : survivors) {
    PhraseSetResult r;
    r.speaker = speaker;
    r.support = static_cast<int>(c.occurrences.size());
    r.key = std::move(c.key);
    r.occurrences = std::move(c.occurrences);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace

std::vector<PhraseSetResult> DetectRepeats(
    const std::vector<corpus::Utterance> &utterances,
    const textproc::Lexicon &lexicon, const RepeatOptions &options) {
  std::vector<std::string> speakers;
  std::unordered_map<std::string, std::vector<const corpus::Utterance *>>
      by_speaker;
  for (const corpus::Utterance &u : utterances) {
    auto [it, inserted] = by_speaker.try_emplace(u.speaker);
    if (inserted) speakers.push_back(u.speaker);
    it->second.push_back(&u);
  }
  std::vector<PhraseSetResult> results;
  if (options.min_length < 1 || options.max_length < options.min_length) {
    return results;
  }
  for (const std::string &speaker : speakers) {
    auto mined = MineSpeaker(speaker, by_speaker[speaker], lexicon, options);
    for (auto &r : mined) results.push_back(std::move(r));
  }
  return results;
}

void AssignPhraseColors(std::vector<PhraseSetResult> &results,
                        std::span<const std::string> palette) {
  if (palette.empty()) throw std::invalid_argument("empty phrase palette");
  for (size_t i = 0; i < results.size(); ++i) {
    results[i].color = palette[i % palette.size()];
  }
}

}  // namespace littext::repeats
