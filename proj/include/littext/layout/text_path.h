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

#ifndef LITTEXT_LAYOUT_TEXT_PATH_H_
#define LITTEXT_LAYOUT_TEXT_PATH_H_

#include <string_view>
#include <vector>

#include "littext/layout/metrics.h"
#include "littext/vizmodel/document.h"

namespace littext::layout {

// Where a glyph sits on a polyline.
struct PathPosition {
  vizmodel::Point point;
  double angle = 0;  // degrees, direction of the segment
};

// Point at arc length `s`. At an interior vertex the outgoing segment's
// direction applies.
PathPosition PointAtLength(const std::vector<vizmodel::Point> &polyline,
                           double s);

double PathLength(const std::vector<vizmodel::Point> &polyline);

// One Text element per glyph, its baseline origin at the arc length equal to
// the advances before it, rotated to the local segment direction (no
// rotation on horizontal segments). Spaces advance but draw nothing. Text
// longer than the path is cut to the longest prefix that leaves room for an
// ellipsis; the ellipsis is always drawn when cutting. Throws InputError on
// fewer than two points or a zero-length path.
std::vector<vizmodel::Element> LayoutTextOnPath(
    std::string_view text, const std::vector<vizmodel::Point> &polyline,
    double size, const std::string &fill, const FontMetrics &metrics);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_TEXT_PATH_H_
