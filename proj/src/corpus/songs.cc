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

#include "littext/corpus/songs.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "littext/common.h"

namespace littext::corpus {
namespace {

int64_t ParseInteger(std::string_view field, const char *column, size_t row) {
  field = Trim(field);
  int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() ||
      ptr != field.data() + field.size()) {
    throw InputError("songs: row " + std::to_string(row) + ": bad " + column +
                     " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::vector<std::string>> ParseCsv(std::string_view csv) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  size_t i = 0;
  const auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_record = [&] {
    end_field();
    // A bare terminator line yields one empty field; drop it.
    if (!(record.size() == 1 && record[0].empty())) {
      records.push_back(std::move(record));
    }
    record.clear();
  };
  while (i < csv.size()) {
    char c = csv[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < csv.size() && csv[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < csv.size() && csv[i + 1] == '\n') {
      end_record();
      ++i;
    } else if (c == '\n') {
      end_record();
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (quoted) throw InputError("csv: unterminated quoted field");
  if (field_started || !record.empty()) end_record();
  return records;
}

std::vector<SongRecord> ParseSongs(std::string_view csv) {
  auto rows = ParseCsv(StripBom(csv));
  static const std::vector<std::string> kHeader = {
      "rank", "artist", "title", "sales", "lyric_opening"};
  if (rows.empty()) throw InputError("songs: missing header row");
  for (auto &f : rows[0]) f = std::string(Trim(f));
  if (rows[0] != kHeader) {
    throw InputError(
        "songs: expected header rank,artist,title,sales,lyric_opening");
  }

  std::vector<SongRecord> songs;
  std::set<int> ranks;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    if (row.size() != kHeader.size()) {
      throw InputError("songs: row " + std::to_string(r) + " has " +
                       std::to_string(row.size()) + " fields");
    }
    SongRecord song;
    const int64_t rank = ParseInteger(row[0], "rank", r);
    if (rank <= 0 || rank > INT32_MAX) {
      throw InputError("songs: row " + std::to_string(r) +
                       ": rank must be positive");
    }
    song.rank = static_cast<int>(rank);
    song.artist = std::string(Trim(row[1]));
    song.title = std::string(Trim(row[2]));
    song.sales = ParseInteger(row[3], "sales", r);
    if (song.sales < 0) {
      throw InputError("songs: row " + std::to_string(r) +
                       ": negative sales");
    }
    song.lyric_opening = std::string(Trim(row[4]));
    if (!ranks.insert(song.rank).second) {
      throw InputError("songs: duplicate rank " + std::to_string(song.rank));
    }
    songs.push_back(std::move(song));
  }
  std::stable_sort(songs.begin(), songs.end(),
                   [](const SongRecord &a, const SongRecord &b) {
                     if (a.sales != b.sales) return a.sales > b.sales;
                     return a.rank < b.rank;
                   });
  return songs;
}

}  // namespace littext::corpus
