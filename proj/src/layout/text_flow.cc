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

#include "littext/layout/text_flow.h"

#include <algorithm>
#include <cmath>

#include "littext/utf8.h"

namespace littext::layout {

using vizmodel::Element;
using vizmodel::ElementKind;
using vizmodel::Style;

std::string DisplayText(std::string_view text, const Style &style) {
  return style.caps ? AsciiUpper(text) : std::string(text);
}

Element MakeText(std::string_view text, double x, double y, const Style &style,
                 const FontMetrics &metrics) {
  Element e;
  e.kind = ElementKind::kText;
  e.x = x;
  e.y = y;
  e.w = Measure(DisplayText(text, style), style.size, metrics);
  e.h = style.size * metrics.line_height();
  e.text = std::string(text);
  e.style = style;
  return e;
}

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::vector<CharSpan> WrapLines(std::string_view text, double width,
                                double size, const FontMetrics &metrics) {
  std::vector<CharSpan> lines;
  const auto fits = [&](size_t b, size_t e) {
    return Measure(text.substr(b, e - b), size, metrics) <= width + 1e-9;
  };
  std::optional<CharSpan> line;
  // Starts a line at a word, splitting the word when it alone is too wide.
  const auto start_line = [&](size_t b, size_t e) {
    while (!fits(b, e)) {
      size_t cut = b;
      size_t next = b + utf8::DecodeAt(text, b).length;
      do {
        cut = next;
        if (cut >= e) break;
        next = cut + utf8::DecodeAt(text, cut).length;
      } while (fits(b, next));
      lines.push_back({b, cut});
      b = cut;
      if (b >= e) return;
    }
    line = CharSpan{b, e};
  };

  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    if (i >= text.size()) break;
    size_t end = i;
    while (end < text.size() && !IsSpace(text[end])) ++end;
    if (line && fits(line->begin, end)) {
      line->end = end;
    } else {
      if (line) lines.push_back(*line);
      line.reset();
      start_line(i, end);
    }
    i = end;
  }
  if (line) lines.push_back(*line);
  return lines;
}

std::string TruncateToWidth(std::string_view text, double width, double size,
                            const FontMetrics &metrics) {
  if (Measure(text, size, metrics) <= width + 1e-9) return std::string(text);
  const double ellipsis = Measure(kEllipsis, size, metrics);
  if (ellipsis > width + 1e-9) return "";
  std::string out;
  double used = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    const utf8::Decoded d = utf8::DecodeAt(text, pos);
    const double adv = size * metrics.Advance(d.code_point);
    if (used + adv + ellipsis > width + 1e-9) break;
    used += adv;
    out.append(text.substr(pos, d.length));
    pos += d.length;
  }
  while (!out.empty() && IsSpace(out.back())) out.pop_back();
  out.append(kEllipsis);
  return out;
}

std::optional<Element> FitLabel(std::string_view text, const Rect &rect,
                                const Style &style, const FontMetrics &metrics,
                                double min_font_pt) {
  if (!(rect.w > 0) || !(rect.h > 0)) return std::nullopt;
  const double em = metrics.MeasureEm(DisplayText(text, style));
  double size = style.size;
  if (em > 0) size = std::min(size, rect.w / em);
  size = std::min(size, rect.h / metrics.line_height());
  size = std::floor(size * 1000.0 + 1e-6) / 1000.0;
  if (size < min_font_pt || size <= 0) return std::nullopt;
  Style fitted = style;
  fitted.size = size;
  Element e = MakeText(text, 0, 0, fitted, metrics);
  e.x = rect.x + (rect.w - e.w) / 2;
  e.y = rect.y + (rect.h - e.h) / 2;
  return e;
}

}  // namespace littext::layout
