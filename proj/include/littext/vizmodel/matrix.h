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

#ifndef LITTEXT_VIZMODEL_MATRIX_H_
#define LITTEXT_VIZMODEL_MATRIX_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "littext/common.h"
#include "littext/corpus/dialogue.h"
#include "littext/repeats/phrases.h"

namespace littext::vizmodel {

// A repeated-phrase occurrence inside a cell's text.
struct HighlightSpan {
  CharSpan span;
  std::string color;
  std::string key;
  bool operator==(const HighlightSpan &) const = default;
};

struct MatrixCell {
  int word_count = 0;
  std::string text;  // utterances joined by single spaces, in order
  std::vector<HighlightSpan> spans;
  bool operator==(const MatrixCell &) const = default;
};

// Speaker x addressee dialogue matrix; rows speak, columns listen.
struct MatrixModel {
  std::vector<std::string> speakers;  // order of first appearance
  std::map<std::pair<int, int>, MatrixCell> cells;

  int IndexOf(const std::string &speaker) const;  // -1 when absent
  const MatrixCell *Cell(int from, int to) const;
  bool operator==(const MatrixModel &) const = default;
};

// Unknown speakers and addressees share one literal "Unknown" row/column.
MatrixModel BuildMatrix(
    const std::vector<corpus::Utterance> &utterances,
    const std::vector<repeats::PhraseSetResult> &phrases = {});

}  // namespace littext::vizmodel

#endif  // LITTEXT_VIZMODEL_MATRIX_H_
