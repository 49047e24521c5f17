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

#ifndef LITTEXT_LAYOUT_TREEMAP_H_
#define LITTEXT_LAYOUT_TREEMAP_H_

#include <span>
#include <vector>

#include "littext/layout/config.h"
#include "littext/layout/geometry.h"
#include "littext/layout/metrics.h"
#include "littext/vizmodel/document.h"
#include "littext/vizmodel/hierarchy.h"

namespace littext::layout {

// Squarified tiling of `rect` by `weights`, taken in the given order.
//
// Rows run along the shorter side of the free space; the next weight joins
// the current row unless that worsens the row's worst aspect ratio. Tile
// areas are proportional to the weights and exactly cover `rect`. Zero
// weights get zero-area tiles at the far corner.
std::vector<Rect> SquarifyWeights(std::span<const double> weights,
                                  const Rect &rect);

struct Tile {
  const vizmodel::HierarchyNode *node = nullptr;
  Rect rect;
  int depth = 0;  // 1 for children of the root
};

// Tiles for every descendant of `node`, parents before their children.
std::vector<Tile> Squarify(const vizmodel::HierarchyNode &node,
                           const Rect &rect);

// Verb and object tiles over the whole canvas. Verb tiles are shaded on a
// dark-to-bright ramp by count; labels are fitted or skipped. Person leaves
// are not drawn.
vizmodel::DocumentModel LayoutTreemap(const vizmodel::HierarchyNode &hierarchy,
                                      const LayoutConfig &config,
                                      const FontMetrics &metrics);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_TREEMAP_H_
