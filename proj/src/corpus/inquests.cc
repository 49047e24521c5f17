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

#include "littext/corpus/inquests.h"

#include <optional>

namespace littext::corpus {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// "Mary Roberts drowned herself. Suicide." -> Suicide.
std::optional<Verdict> TrailingVerdict(std::string_view text) {
  text = Trim(text);
  while (!text.empty() && text.back() == '.') text.remove_suffix(1);
  size_t cut = text.find_last_of(".!?");
  if (cut == std::string_view::npos) return std::nullopt;
  std::string_view last = Trim(text.substr(cut + 1));
  if (last.empty() || last.find(' ') != std::string_view::npos) {
    return std::nullopt;
  }
  return ParseVerdict(last);
}

}  // namespace

InquestTable ParseInquests(std::string_view tsv) {
  const std::vector<Line> lines = SplitLines(StripBom(tsv));
  if (lines.empty()) throw InputError("inquest table: missing header row");
  const auto header = SplitTabs(lines[0].text);
  static constexpr std::string_view kColumns[] = {"id", "text", "verdict",
                                                  "gender"};
  bool header_ok = header.size() == 4;
  for (size_t i = 0; header_ok && i < 4; ++i) {
    header_ok = Trim(header[i]) == kColumns[i];
  }
  if (!header_ok) {
    throw InputError("inquest table: expected header id\\ttext\\tverdict"
                     "\\tgender");
  }

  InquestTable table;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i].text).empty()) continue;
    const auto fields = SplitTabs(lines[i].text);
    if (fields.size() != 4) {
      ++table.skipped;
      continue;
    }
    InquestRecord record;
    record.id = std::string(Trim(fields[0]));
    record.text = std::string(Trim(fields[1]));
    std::string_view verdict_field = Trim(fields[2]);
    std::optional<Verdict> verdict = verdict_field.empty()
                                         ? TrailingVerdict(record.text)
                                         : ParseVerdict(verdict_field);
    std::string_view gender_field = Trim(fields[3]);
    std::optional<Gender> gender =
        gender_field.empty() ? Gender::kUnknown : ParseGender(gender_field);
    if (record.id.empty() || record.text.empty() || !verdict || !gender) {
      ++table.skipped;
      continue;
    }
    record.verdict = *verdict;
    record.gender = *gender;
    table.records.push_back(std::move(record));
  }
  return table;
}

}  // namespace littext::corpus
