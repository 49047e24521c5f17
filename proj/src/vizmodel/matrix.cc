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

#include "littext/vizmodel/matrix.h"

#include <algorithm>
#include <unordered_map>

#include "littext/textproc/tokenizer.h"

namespace littext::vizmodel {

int MatrixModel::IndexOf(const std::string &speaker) const {
  auto it = std::find(speakers.begin(), speakers.end(), speaker);
  return it == speakers.end() ? -1 : static_cast<int>(it - speakers.begin());
}

const MatrixCell *MatrixModel::Cell(int from, int to) const {
  auto it = cells.find({from, to});
  return it == cells.end() ? nullptr : &it->second;
}

MatrixModel BuildMatrix(const std::vector<corpus::Utterance> &utterances,
                        const std::vector<repeats::PhraseSetResult> &phrases) {
  MatrixModel model;
  const auto slot = [&](const std::string &name) {
    const std::string &key =
        name.empty() ? std::string(corpus::kUnknownSpeaker) : name;
    int index = model.IndexOf(key);
    if (index < 0) {
      model.speakers.push_back(key);
      index = static_cast<int>(model.speakers.size()) - 1;
    }
    return index;
  };

  struct Placement {
    std::pair<int, int> cell;
    size_t offset;
  };
  std::unordered_map<int, Placement> placed;
  for (const corpus::Utterance &u : utterances) {
    const int from = slot(u.speaker);
    const int to = slot(u.addressee);
    MatrixCell &cell = model.cells[{from, to}];
    if (!cell.text.empty()) cell.text += ' ';
    placed[u.index] = {{from, to}, cell.text.size()};
    cell.text += u.text;
    cell.word_count += textproc::CountWords(u.text);
  }

  for (const repeats::PhraseSetResult &phrase : phrases) {
    for (const repeats::PhraseOccurrence &o : phrase.occurrences) {
      auto it = placed.find(o.utterance);
      if (it == placed.end()) continue;
      MatrixCell &cell = model.cells[it->second.cell];
      const size_t offset = it->second.offset;
      cell.spans.push_back({{o.chars.begin + offset, o.chars.end + offset},
                            phrase.color,
                            phrase.key.ToString()});
    }
  }
  for (auto &[key, cell] : model.cells) {
    std::stable_sort(cell.spans.begin(), cell.spans.end(),
                     [](const HighlightSpan &a, const HighlightSpan &b) {
                       return a.span.begin < b.span.begin;
                     });
  }
  return model;
}

}  // namespace littext::vizmodel
