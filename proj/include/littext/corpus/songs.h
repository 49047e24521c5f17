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

#ifndef LITTEXT_CORPUS_SONGS_H_
#define LITTEXT_CORPUS_SONGS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace littext::corpus {

struct SongRecord {
  int rank = 0;
  std::string artist;
  std::string title;
  int64_t sales = 0;
  std::string lyric_opening;
};

// Parses an RFC-4180 CSV with header `rank,artist,title,sales,lyric_opening`
// and returns the songs by sales, highest first (ties keep rank order).
// Duplicate ranks, negative sales and malformed rows throw InputError.
std::vector<SongRecord> ParseSongs(std::string_view csv);

// Splits RFC-4180 CSV into records of fields. Throws InputError on an
// unterminated quoted field.
std::vector<std::vector<std::string>> ParseCsv(std::string_view csv);

}  // namespace littext::corpus

#endif  // LITTEXT_CORPUS_SONGS_H_
