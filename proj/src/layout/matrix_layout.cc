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

#include "littext/layout/matrix_layout.h"

#include <algorithm>
#include <cmath>

#include "littext/layout/text_flow.h"

namespace littext::layout {

using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::ElementKind;
using vizmodel::FontWeight;
using vizmodel::MatrixCell;
using vizmodel::MatrixModel;
using vizmodel::Style;

std::vector<int> CellSpans(const std::vector<bool> &nonempty) {
  std::vector<int> spans(nonempty.size(), 0);
  for (size_t c = 0; c < nonempty.size(); ++c) {
    if (!nonempty[c]) continue;
    size_t end = c + 1;
    while (end < nonempty.size() && !nonempty[end]) ++end;
    spans[c] = static_cast<int>(end - c);
  }
  return spans;
}

namespace {

struct Grid {
  double left;      // x of the first column
  double top;       // y of the first row
  double cell_w;
  double cell_h;
};

// Header text truncated to its box at the header size, shrunk to fit when
// possible.
void AddHeader(DocumentModel &doc, const std::string &name, const Rect &box,
               const LayoutConfig &config, const FontMetrics &metrics,
               const char *axis) {
  Style style;
  style.weight = FontWeight::kBold;
  style.size = config.matrix_header_pt;
  auto label = FitLabel(name, box, style, metrics, config.min_font_pt);
  if (!label) {
    style.size = std::min(config.min_font_pt,
                          box.h / metrics.line_height());
    if (!(style.size > 0)) return;
    const std::string shown = TruncateToWidth(name, box.w, style.size,
                                              metrics);
    if (shown.empty()) return;
    Element e = MakeText(shown, 0, 0, style, metrics);
    e.x = box.x + (box.w - e.w) / 2;
    e.y = box.y + (box.h - e.h) / 2;
    label = std::move(e);
  }
  label->tags = {{"role", "header"}, {"axis", axis}, {"speaker", name}};
  doc.Append(std::move(*label), "header");
}

void AddHeaders(DocumentModel &doc, const MatrixModel &matrix,
                const Grid &grid, const LayoutConfig &config,
                const FontMetrics &metrics) {
  const double header = config.matrix_header;
  for (size_t i = 0; i < matrix.speakers.size(); ++i) {
    AddHeader(doc, matrix.speakers[i],
              {grid.left + i * grid.cell_w, grid.top - header, grid.cell_w,
               header},
              config, metrics, "to");
  }
  for (size_t i = 0; i < matrix.speakers.size(); ++i) {
    AddHeader(doc, matrix.speakers[i],
              {grid.left - header, grid.top + i * grid.cell_h, header,
               grid.cell_h},
              config, metrics, "from");
  }
}

std::map<std::string, std::string> CellTags(const MatrixModel &matrix, int r,
                                            int c) {
  return {{"from", matrix.speakers[r]},
          {"to", matrix.speakers[c]},
          {"speaker", matrix.speakers[r]}};
}

}  // namespace

DocumentModel LayoutMatrixBubbles(const MatrixModel &matrix,
                                  const LayoutConfig &config,
                                  const FontMetrics &metrics) {
  DocumentModel doc;
  doc.width = config.width;
  doc.height = config.height;
  const size_t n = matrix.speakers.size();
  if (n == 0) return doc;

  const double header = config.matrix_header;
  const double cell =
      std::max(0.0, std::min((config.width - 2 * config.margin - header) / n,
                             (config.height - 2 * config.margin - header) / n));
  const Grid grid{config.margin + header, config.margin + header, cell, cell};
  AddHeaders(doc, matrix, grid, config, metrics);

  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      Element &box = doc.Add(ElementKind::kRect, "cell");
      box.x = grid.left + c * cell;
      box.y = grid.top + r * cell;
      box.w = cell;
      box.h = cell;
      box.style.fill = "none";
      box.style.stroke = "#D0D0D0";
      box.tags = CellTags(matrix, r, c);
      box.tags["role"] = "cell";
    }
  }

  int max_count = 0;
  for (const auto &[key, cell_model] : matrix.cells) {
    max_count = std::max(max_count, cell_model.word_count);
  }
  if (max_count == 0) return doc;
  const double max_radius = std::min(config.bubble_max_radius, cell / 2);
  for (const auto &[key, cell_model] : matrix.cells) {
    if (cell_model.word_count <= 0) continue;
    const auto [r, c] = key;
    const double radius =
        max_radius * std::sqrt(double(cell_model.word_count) / max_count);
    const double cx = grid.left + (c + 0.5) * cell;
    const double cy = grid.top + (r + 0.5) * cell;
    Element &bubble = doc.Add(ElementKind::kBubble, "bubble");
    bubble.x = cx - radius;
    bubble.y = cy - radius;
    bubble.w = 2 * radius;
    bubble.h = 2 * radius;
    bubble.style.fill = config.bubble_color;
    bubble.tags = CellTags(matrix, r, c);
    bubble.tags["words"] = std::to_string(cell_model.word_count);
  }
  return doc;
}

namespace {

// Highlight spans clipped so none overlaps an earlier one.
std::vector<vizmodel::HighlightSpan> Disjoint(
    const std::vector<vizmodel::HighlightSpan> &spans) {
  std::vector<vizmodel::HighlightSpan> out;
  size_t covered = 0;
  for (const auto &s : spans) {
    vizmodel::HighlightSpan clipped = s;
    clipped.span.begin = std::max(clipped.span.begin, covered);
    if (clipped.span.begin >= clipped.span.end) continue;
    covered = clipped.span.end;
    out.push_back(std::move(clipped));
  }
  return out;
}

void AddCellText(DocumentModel &doc, const MatrixModel &matrix, int r, int c,
                 const MatrixCell &cell, const Rect &box,
                 const LayoutConfig &config, const FontMetrics &metrics) {
  constexpr double kPad = 2;
  const double size = config.matrix_text_pt;
  const double line_h = size * metrics.line_height();
  const double width = box.w - 2 * kPad;
  const int max_lines =
      static_cast<int>(std::floor((box.h - 2 * kPad) / line_h + 1e-9));
  if (width <= 0 || max_lines <= 0) return;

  // Whitespace folds to plain spaces byte for byte, so offsets still hold.
  std::string text = cell.text;
  for (char &ch : text) {
    if (ch == '\n' || ch == '\r' || ch == '\t' || ch == '\f' || ch == '\v') {
      ch = ' ';
    }
  }
  std::vector<CharSpan> lines = WrapLines(text, width, size, metrics);
  bool truncated = false;
  if (static_cast<int>(lines.size()) > max_lines) {
    lines.resize(max_lines);
    truncated = true;
  }
  const auto highlights = Disjoint(cell.spans);
  const auto base_tags = CellTags(matrix, r, c);

  for (size_t li = 0; li < lines.size(); ++li) {
    CharSpan line = lines[li];
    const bool last = truncated && li + 1 == lines.size();
    std::string ellipsized;
    if (last) {
      // Make room for the ellipsis inside the line.
      const std::string_view whole(text.data() + line.begin, line.size());
      ellipsized = TruncateToWidth(
          std::string(whole) + std::string(kEllipsis), width, size, metrics);
      if (ellipsized.size() >= whole.size() + kEllipsis.size()) {
        line.end = line.begin + whole.size();
      } else {
        line.end = line.begin + ellipsized.size() - kEllipsis.size();
      }
    }
    // Cut the line at highlight boundaries.
    std::vector<std::pair<CharSpan, const vizmodel::HighlightSpan *>> pieces;
    size_t pos = line.begin;
    for (const auto &h : highlights) {
      if (h.span.end <= pos || h.span.begin >= line.end) continue;
      const size_t b = std::max(h.span.begin, pos);
      const size_t e = std::min(h.span.end, line.end);
      if (b > pos) pieces.push_back({{pos, b}, nullptr});
      pieces.push_back({{b, e}, &h});
      pos = e;
    }
    if (pos < line.end) pieces.push_back({{pos, line.end}, nullptr});

    const double y = box.y + kPad + li * line_h;
    for (const auto &[span, highlight] : pieces) {
      const double x =
          box.x + kPad +
          Measure(std::string_view(text).substr(line.begin,
                                                span.begin - line.begin),
                  size, metrics);
      Style style;
      style.size = size;
      if (highlight != nullptr) style.background = highlight->color;
      Element e = MakeText(std::string_view(text).substr(span.begin,
                                                         span.size()),
                           x, y, style, metrics);
      e.tags = base_tags;
      if (highlight != nullptr) e.tags["phrase"] = highlight->key;
      doc.Append(std::move(e), "dialogue");
    }
    if (last) {
      Style style;
      style.size = size;
      const double x =
          box.x + kPad +
          Measure(std::string_view(text).substr(line.begin, line.size()),
                  size, metrics);
      Element e = MakeText(kEllipsis, x, y, style, metrics);
      e.tags = base_tags;
      e.tags["role"] = "ellipsis";
      doc.Append(std::move(e), "dialogue");
    }
  }
}

}  // namespace

DocumentModel LayoutMatrixText(const MatrixModel &matrix,
                               const LayoutConfig &config,
                               const FontMetrics &metrics) {
  DocumentModel doc;
  doc.width = config.width;
  doc.height = config.height;
  const size_t n = matrix.speakers.size();
  if (n == 0) return doc;

  const double header = config.matrix_header;
  const Grid grid{
      config.margin + header, config.margin + header,
      std::max(0.0, (config.width - 2 * config.margin - header) / n),
      std::max(0.0, (config.height - 2 * config.margin - header) / n)};
  AddHeaders(doc, matrix, grid, config, metrics);

  for (size_t r = 0; r < n; ++r) {
    std::vector<bool> nonempty(n);
    for (size_t c = 0; c < n; ++c) {
      const MatrixCell *cell = matrix.Cell(r, c);
      nonempty[c] = cell != nullptr && !cell->text.empty();
    }
    const std::vector<int> spans = CellSpans(nonempty);
    for (size_t c = 0; c < n; ++c) {
      if (spans[c] == 0) continue;
      const Rect box{grid.left + c * grid.cell_w, grid.top + r * grid.cell_h,
                     spans[c] * grid.cell_w, grid.cell_h};
      Element &back = doc.Add(ElementKind::kRect, "cell");
      back.x = box.x;
      back.y = box.y;
      back.w = box.w;
      back.h = box.h;
      back.style.fill = "#FAFAFA";
      back.style.stroke = "#C8C8C8";
      back.tags = CellTags(matrix, r, c);
      back.tags["role"] = "cell";
      back.tags["span"] = std::to_string(spans[c]);
      AddCellText(doc, matrix, r, c, *matrix.Cell(r, c), box, config,
                  metrics);
    }
  }
  return doc;
}

}  // namespace littext::layout
