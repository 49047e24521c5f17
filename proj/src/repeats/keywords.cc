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

#include "littext/repeats/keywords.h"

#include <algorithm>
#include <set>

namespace littext::repeats {
namespace {

bool IsWordByte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || u >= 0x80;
}

bool IsHexColor(std::string_view color) {
  return color.size() == 7 && color[0] == '#' &&
         std::all_of(color.begin() + 1, color.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
                  (c >= 'A' && c <= 'F');
         });
}

}  // namespace

void ValidateKeywordRules(const std::vector<KeywordRule> &rules) {
  std::set<std::string> seen;
  for (const KeywordRule &rule : rules) {
    if (rule.keyword.empty()) throw InputError("keyword rules: empty keyword");
    if (!IsHexColor(rule.color)) {
      throw InputError("keyword rules: bad color '" + rule.color + "' for " +
                       rule.keyword);
    }
    if (!seen.insert(AsciiLower(rule.keyword)).second) {
      throw InputError("keyword rules: duplicate keyword " + rule.keyword);
    }
  }
}

std::vector<KeywordRule> ParseKeywordRules(std::string_view content) {
  std::vector<KeywordRule> rules;
  int n = 0;
  for (const Line &line : SplitLines(StripBom(content))) {
    ++n;
    std::string_view text = Trim(line.text);
    if (text.empty() || text[0] == '#') continue;
    const size_t eq = text.rfind('=');
    if (eq == std::string_view::npos) {
      throw InputError("keyword rules line " + std::to_string(n) +
                       ": expected keyword=color");
    }
    std::string color(Trim(text.substr(eq + 1)));
    if (!color.empty() && color[0] != '#') color.insert(0, "#");
    rules.push_back({std::string(Trim(text.substr(0, eq))),
                     AsciiUpper(color)});
  }
  ValidateKeywordRules(rules);
  return rules;
}

std::vector<KeywordMatch> MatchKeywords(
    std::string_view text, const std::vector<KeywordRule> &rules) {
  std::vector<KeywordMatch> matches;
  const std::string folded = AsciiLower(text);
  for (const KeywordRule &rule : rules) {
    const std::string needle = AsciiLower(rule.keyword);
    if (needle.empty()) continue;
    for (size_t pos = folded.find(needle); pos != std::string::npos;
         pos = folded.find(needle, pos + 1)) {
      const size_t end = pos + needle.size();
      if ((pos > 0 && IsWordByte(text[pos - 1])) ||
          (end < text.size() && IsWordByte(text[end]))) {
        continue;
      }
      const CharSpan span{pos, end};
      const bool taken =
          std::any_of(matches.begin(), matches.end(), [&](const auto &m) {
            return m.span.begin < span.end && span.begin < m.span.end;
          });
      if (!taken) matches.push_back({span, rule.color, rule.keyword});
    }
  }
  std::sort(matches.begin(), matches.end(),
            [](const KeywordMatch &a, const KeywordMatch &b) {
              return a.span.begin < b.span.begin;
            });
  return matches;
}

}  // namespace littext::repeats
