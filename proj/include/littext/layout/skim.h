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

#ifndef LITTEXT_LAYOUT_SKIM_H_
#define LITTEXT_LAYOUT_SKIM_H_

#include <optional>
#include <vector>

#include "littext/corpus/paragraphs.h"
#include "littext/layout/config.h"
#include "littext/layout/metrics.h"
#include "littext/textproc/summary.h"
#include "littext/vizmodel/document.h"

namespace littext::layout {

// Body text flowed in one column with each paragraph's summary drawn large
// and faint behind it, centered vertically on the paragraph. summaries[i]
// belongs to paragraphs[i]; a missing entry means body text only. The
// canvas grows to fit the text.
vizmodel::DocumentModel LayoutSkim(
    const std::vector<corpus::Paragraph> &paragraphs,
    const std::vector<std::optional<textproc::ParagraphSummary>> &summaries,
    const LayoutConfig &config, const FontMetrics &metrics);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_SKIM_H_
