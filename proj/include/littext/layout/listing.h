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

#ifndef LITTEXT_LAYOUT_LISTING_H_
#define LITTEXT_LAYOUT_LISTING_H_

#include "littext/layout/config.h"
#include "littext/layout/metrics.h"
#include "littext/vizmodel/document.h"
#include "littext/vizmodel/hierarchy.h"

namespace littext::layout {

// Dictionary-style listing: a multi-column flow in reading order. Each verb
// starts a bold all-caps header line; each object follows as a bold
// lowercase run with its people inline after it, wrapped. Person runs take
// their text color from the verdict and their background from the gender.
//
// Font sizes shrink uniformly (in 5% steps) until the flow fits, but never
// below min_font_pt. Nothing is dropped or truncated: if the flow does not
// fit at the minimum size, LayoutOverflowError reports the canvas height
// that would be needed.
vizmodel::DocumentModel LayoutListing(const vizmodel::HierarchyNode &hierarchy,
                                      const LayoutConfig &config,
                                      const FontMetrics &metrics);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_LISTING_H_
