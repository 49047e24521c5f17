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

#include "littext/layout/skim.h"

#include <algorithm>
#include <stdexcept>

#include "littext/layout/text_flow.h"

namespace littext::layout {

using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::Style;

DocumentModel LayoutSkim(
    const std::vector<corpus::Paragraph> &paragraphs,
    const std::vector<std::optional<textproc::ParagraphSummary>> &summaries,
    const LayoutConfig &config, const FontMetrics &metrics) {
  if (summaries.size() > paragraphs.size()) {
    throw std::invalid_argument("more summaries than paragraphs");
  }
  DocumentModel doc;
  doc.width = config.width;
  const double full = config.width - 2 * config.margin;
  const double width = config.skim_width > 0 ? std::min(config.skim_width, full)
                                             : full;
  const double line_h = config.body_pt * metrics.line_height();

  double y = config.margin;
  for (size_t p = 0; p < paragraphs.size(); ++p) {
    const auto &para = paragraphs[p];
    const std::vector<CharSpan> lines =
        WrapLines(para.text, width, config.body_pt, metrics);
    const double block_h = lines.size() * line_h;
    const std::string index = std::to_string(para.index);

    // A summarized paragraph takes a band at least as tall as its summary,
    // with the body centered in it.
    double band_h = block_h;
    if (p < summaries.size() && summaries[p]) {
      const std::string text = summaries[p]->Text();
      Style style;
      style.size = config.summary_pt;
      style.fill = config.summary_color;
      const double em = metrics.MeasureEm(text);
      if (em > 0) style.size = std::min(style.size, width / em);
      Element run = MakeText(text, config.margin, 0, style, metrics);
      band_h = std::max(block_h, run.h);
      run.x = config.margin + (width - run.w) / 2;
      run.y = y + (band_h - run.h) / 2;
      run.tags = {{"role", "summary"}, {"paragraph", index}};
      doc.Append(std::move(run), "summary");
    }

    Style body;
    body.size = config.body_pt;
    const double top = y + (band_h - block_h) / 2;
    for (size_t i = 0; i < lines.size(); ++i) {
      Element run = MakeText(
          std::string_view(para.text).substr(lines[i].begin, lines[i].size()),
          config.margin, top + i * line_h, body, metrics);
      run.tags = {{"role", "body"}, {"paragraph", index}};
      doc.Append(std::move(run), "body");
    }
    y += band_h + config.paragraph_gap;
  }
  const double bottom =
      paragraphs.empty() ? config.margin : y - config.paragraph_gap;
  doc.height = std::max(config.height, bottom + config.margin);
  return doc;
}

}  // namespace littext::layout
