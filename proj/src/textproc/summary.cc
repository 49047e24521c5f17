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

#include "littext/textproc/summary.h"

#include <map>
#include <vector>

#include "littext/textproc/tagger.h"

namespace littext::textproc {
namespace {

struct Mention {
  std::string name;
  size_t end;  // token index after the group
};

// Most frequent key; ties go to the key whose first occurrence is earliest.
std::string MostFrequent(const std::vector<std::string> &sequence) {
  std::map<std::string, std::pair<int, size_t>> stats;  // count, first index
  for (size_t i = 0; i < sequence.size(); ++i) {
    auto [it, inserted] = stats.try_emplace(sequence[i], 0, i);
    ++it->second.first;
  }
  std::string best;
  int best_count = 0;
  size_t best_first = 0;
  for (const auto &[key, stat] : stats) {
    if (stat.first > best_count ||
        (stat.first == best_count && stat.second < best_first)) {
      best = key;
      best_count = stat.first;
      best_first = stat.second;
    }
  }
  return best;
}

}  // namespace

std::optional<ParagraphSummary> SummarizeParagraph(std::string_view paragraph,
                                                   const Lexicon &lexicon) {
  const std::vector<TaggedToken> tagged = TagText(paragraph, lexicon);

  std::vector<Mention> mentions;
  std::vector<std::string> verbs;
  for (size_t i = 0; i < tagged.size();) {
    if (tagged[i].tag == Tag::kVerb) {
      verbs.push_back(NormalizeWord(tagged[i].token.text));
    }
    if (tagged[i].tag != Tag::kPropn) {
      ++i;
      continue;
    }
    std::string name = tagged[i].token.text;
    const int sentence = tagged[i].token.sentence;
    size_t j = i + 1;
    while (j < tagged.size() && tagged[j].tag == Tag::kPropn &&
           tagged[j].token.sentence == sentence) {
      name += ' ';
      name += tagged[j].token.text;
      ++j;
    }
    mentions.push_back({std::move(name), j});
    i = j;
  }
  if (mentions.empty()) return std::nullopt;

  std::vector<std::string> names;
  for (const Mention &m : mentions) names.push_back(m.name);
  ParagraphSummary summary;
  summary.proper_noun = MostFrequent(names);

  for (const Mention &m : mentions) {
    if (m.name != summary.proper_noun) continue;
    const int sentence = tagged[m.end - 1].token.sentence;
    for (size_t k = m.end;
         k < tagged.size() && tagged[k].token.sentence == sentence; ++k) {
      if (tagged[k].tag == Tag::kVerb) {
        summary.verb = NormalizeWord(tagged[k].token.text);
        break;
      }
    }
    if (!summary.verb.empty()) break;
  }
  if (summary.verb.empty() && !verbs.empty()) summary.verb = MostFrequent(verbs);
  return summary;
}

}  // namespace littext::textproc
