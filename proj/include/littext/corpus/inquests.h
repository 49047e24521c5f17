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

#ifndef LITTEXT_CORPUS_INQUESTS_H_
#define LITTEXT_CORPUS_INQUESTS_H_

#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"

namespace littext::corpus {

// One coroner's inquest: a single summary sentence plus its verdict.
struct InquestRecord {
  std::string id;
  std::string text;
  Verdict verdict = Verdict::kUndetermined;
  Gender gender = Gender::kUnknown;
};

struct InquestTable {
  std::vector<InquestRecord> records;
  int skipped = 0;  // malformed rows, unknown verdict or gender
};

// Parses `id<TAB>text<TAB>verdict<TAB>gender` rows. The header row is
// mandatory (InputError otherwise). An empty verdict column falls back to the
// trailing one-word sentence of the text ("... herself. Suicide.").
InquestTable ParseInquests(std::string_view tsv);

}  // namespace littext::corpus

#endif  // LITTEXT_CORPUS_INQUESTS_H_
