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

#ifndef LITTEXT_LAYOUT_MATRIX_LAYOUT_H_
#define LITTEXT_LAYOUT_MATRIX_LAYOUT_H_

#include <vector>

#include "littext/layout/config.h"
#include "littext/layout/metrics.h"
#include "littext/vizmodel/document.h"
#include "littext/vizmodel/matrix.h"

namespace littext::layout {

// Column spans for one row of the text matrix: a nonempty cell extends
// over the empty cells directly to its right, up to the grid edge. Empty
// cells get span 0.
std::vector<int> CellSpans(const std::vector<bool> &nonempty);

// Square grid with speaker headers; one bubble per nonempty cell whose
// area is proportional to its word count. The largest cell's radius is
// min(bubble_max_radius, cell / 2).
vizmodel::DocumentModel LayoutMatrixBubbles(const vizmodel::MatrixModel &matrix,
                                            const LayoutConfig &config,
                                            const FontMetrics &metrics);

// Grid whose cells hold the wrapped dialogue at matrix_text_pt, cut with an
// ellipsis when it runs past the cell. Cells widen over empty right
// neighbours (see CellSpans). Repeated phrases become background-colored
// sub-runs. Each cell is backed by a Rect tagged role=cell with its span.
vizmodel::DocumentModel LayoutMatrixText(const vizmodel::MatrixModel &matrix,
                                         const LayoutConfig &config,
                                         const FontMetrics &metrics);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_MATRIX_LAYOUT_H_
