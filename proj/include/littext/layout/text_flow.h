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

#ifndef LITTEXT_LAYOUT_TEXT_FLOW_H_
#define LITTEXT_LAYOUT_TEXT_FLOW_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"
#include "littext/layout/geometry.h"
#include "littext/layout/metrics.h"
#include "littext/vizmodel/document.h"

namespace littext::layout {

inline constexpr std::string_view kEllipsis = "\xE2\x80\xA6";

// The string a text element shows: uppercased when style.caps is set.
std::string DisplayText(std::string_view text, const vizmodel::Style &style);

// Text element whose box starts at (x, y), sized from the metrics.
vizmodel::Element MakeText(std::string_view text, double x, double y,
                           const vizmodel::Style &style,
                           const FontMetrics &metrics);

// Greedy word wrap. Returned spans index into `text`, hold no leading or
// trailing whitespace, and each measures <= width. A word wider than the
// line is split between code points.
std::vector<CharSpan> WrapLines(std::string_view text, double width,
                                double size, const FontMetrics &metrics);

// `text` if it fits, else the longest code-point prefix followed by an
// ellipsis that fits; empty when not even the ellipsis fits.
std::string TruncateToWidth(std::string_view text, double width, double size,
                            const FontMetrics &metrics);

// Largest font size (at most style.size, quantized down to 0.001) at which
// the whole label fits inside `rect`, centered. nullopt when that size is
// below min_font_pt; labels are never truncated.
std::optional<vizmodel::Element> FitLabel(std::string_view text,
                                          const Rect &rect,
                                          const vizmodel::Style &style,
                                          const FontMetrics &metrics,
                                          double min_font_pt);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_TEXT_FLOW_H_
