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

#include "littext/textproc/svo.h"

#include "littext/textproc/tagger.h"

namespace littext::textproc {
namespace {

bool IsReflexive(std::string_view lower) {
  return lower.ends_with("self") || lower.ends_with("selves");
}

}  // namespace

SvoExtraction ExtractSvo(const corpus::InquestRecord &record,
                         const Lexicon &lexicon) {
  SvoExtraction result;
  const std::vector<TaggedToken> tagged = TagText(record.text, lexicon);
  size_t end = 0;
  while (end < tagged.size() && tagged[end].token.sentence == 0) ++end;

  const auto fail = [&](const char *message) {
    result.diagnostic = SvoDiagnostic{record.id, message};
    return result;
  };

  std::vector<std::string> subjects;
  size_t i = 0;
  while (i < end && tagged[i].tag == Tag::kPropn) {
    std::string name;
    while (i < end && tagged[i].tag == Tag::kPropn) {
      if (!name.empty()) name += ' ';
      name += tagged[i].token.text;
      ++i;
    }
    subjects.push_back(std::move(name));
    size_t next = i;
    if (next < end && tagged[next].token.text == ",") ++next;
    if (next < end && NormalizeWord(tagged[next].token.text) == "and") ++next;
    if (next == i || next >= end || tagged[next].tag != Tag::kPropn) break;
    i = next;
  }
  if (subjects.empty()) return fail("no proper-noun subject");

  size_t verb_at = i;
  while (verb_at < end && tagged[verb_at].tag != Tag::kVerb) ++verb_at;
  if (verb_at == end) return fail("no verb after subject");
  const std::string verb = NormalizeWord(tagged[verb_at].token.text);

  std::string object;
  size_t k = verb_at + 1;
  while (k < end && object.empty()) {
    const TaggedToken &t = tagged[k];
    const std::string lower = NormalizeWord(t.token.text);
    if (t.tag == Tag::kPron && IsReflexive(lower)) {
      object = t.token.text;
      break;
    }
    if (t.tag == Tag::kNoun || t.tag == Tag::kPropn) {
      while (k < end && (tagged[k].tag == Tag::kNoun ||
                         tagged[k].tag == Tag::kPropn)) {
        object = tagged[k].token.text;
        ++k;
      }
      break;
    }
    ++k;
  }
  if (object.empty()) object = std::string(kNoObject);

  for (std::string &subject : subjects) {
    result.records.push_back({std::move(subject), verb, object,
                              record.verdict, record.gender, record.id});
  }
  return result;
}

SvoBatch ExtractAll(const std::vector<corpus::InquestRecord> &records,
                    const Lexicon &lexicon) {
  SvoBatch batch;
  for (const auto &record : records) {
    SvoExtraction e = ExtractSvo(record, lexicon);
    for (auto &r : e.records) batch.records.push_back(std::move(r));
    if (e.diagnostic) batch.diagnostics.push_back(std::move(*e.diagnostic));
  }
  return batch;
}

}  // namespace littext::textproc
