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

#ifndef LITTEXT_LAYOUT_BARS_H_
#define LITTEXT_LAYOUT_BARS_H_

#include <string>
#include <vector>

#include "littext/corpus/songs.h"
#include "littext/layout/config.h"
#include "littext/layout/metrics.h"
#include "littext/repeats/keywords.h"
#include "littext/vizmodel/document.h"

namespace littext::layout {

// "artist – title – lyric_opening", the text of one bar row.
std::string BarRowText(const corpus::SongRecord &song);

// One row per song, in the given order: a bar Rect whose width is
// plot_width * sales / max_sales, a background Rect per keyword match in
// `matches[i]` (spans index into BarRowText(songs[i])), then the row text.
// Rows too wide for the canvas shrink down to min_font_pt and are tagged
// overflow past that. The canvas grows to fit every row.
vizmodel::DocumentModel LayoutBarRows(
    const std::vector<corpus::SongRecord> &songs,
    const std::vector<std::vector<repeats::KeywordMatch>> &matches,
    const LayoutConfig &config, const FontMetrics &metrics);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_BARS_H_
