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

#ifndef LITTEXT_REPEATS_KEYWORDS_H_
#define LITTEXT_REPEATS_KEYWORDS_H_

#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"

namespace littext::repeats {

struct KeywordRule {
  std::string keyword;
  std::string color;  // "#RRGGBB"
};

struct KeywordMatch {
  CharSpan span;
  std::string color;
  std::string keyword;
  bool operator==(const KeywordMatch &) const = default;
};

// `keyword=colorhex` per line; '#' starts a comment line. Throws InputError
// on malformed lines, bad colors or keywords repeated case-insensitively.
std::vector<KeywordRule> ParseKeywordRules(std::string_view content);

// Throws InputError when two keywords collide case-insensitively or a color
// is not #RRGGBB.
void ValidateKeywordRules(const std::vector<KeywordRule> &rules);

// Case-insensitive whole-word matches sorted by position. Matches never
// overlap; where two would, the earlier rule wins.
std::vector<KeywordMatch> MatchKeywords(std::string_view text,
                                        const std::vector<KeywordRule> &rules);

}  // namespace littext::repeats

#endif  // LITTEXT_REPEATS_KEYWORDS_H_
