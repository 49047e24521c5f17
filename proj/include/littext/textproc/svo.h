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

#ifndef LITTEXT_TEXTPROC_SVO_H_
#define LITTEXT_TEXTPROC_SVO_H_

#include <optional>
#include <string>
#include <vector>

#include "littext/common.h"
#include "littext/corpus/inquests.h"
#include "littext/textproc/lexicon.h"

namespace littext::textproc {

// Object label used when no noun follows the verb ("suffocated and burnt").
inline constexpr std::string_view kNoObject = "unspecified";

// One deceased person: who, how (verb) and with or by what (object).
struct SvoRecord {
  std::string subject;
  std::string verb;    // lowercased surface form
  std::string object;  // head noun, or a reflexive pronoun verbatim
  Verdict verdict = Verdict::kUndetermined;
  Gender gender = Gender::kUnknown;
  std::string source_id;

  bool operator==(const SvoRecord &) const = default;
};

struct SvoDiagnostic {
  std::string source_id;
  std::string message;
};

struct SvoExtraction {
  std::vector<SvoRecord> records;
  std::optional<SvoDiagnostic> diagnostic;
};

// Reads the first sentence of an inquest summary.
//
// Subjects are the leading proper-noun name groups joined by commas or
// "and"; each gets its own record. The verb is the first verb after them,
// and the object the last noun of the first noun phrase after the verb
// ("killed by a brick wall" -> "wall"). Only one verb and one object are
// kept so nobody is counted twice.
SvoExtraction ExtractSvo(const corpus::InquestRecord &record,
                         const Lexicon &lexicon);

struct SvoBatch {
  std::vector<SvoRecord> records;
  std::vector<SvoDiagnostic> diagnostics;
};

SvoBatch ExtractAll(const std::vector<corpus::InquestRecord> &records,
                    const Lexicon &lexicon);

}  // namespace littext::textproc

#endif  // LITTEXT_TEXTPROC_SVO_H_
