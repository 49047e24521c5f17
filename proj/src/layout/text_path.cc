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

#include "littext/layout/text_path.h"

#include <cmath>
#include <numbers>

#include "littext/common.h"
#include "littext/layout/text_flow.h"
#include "littext/utf8.h"

namespace littext::layout {

using vizmodel::Element;
using vizmodel::Point;

namespace {

double SegmentLength(const Point &a, const Point &b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

}  // namespace

double PathLength(const std::vector<Point> &polyline) {
  double total = 0;
  for (size_t i = 1; i < polyline.size(); ++i) {
    total += SegmentLength(polyline[i - 1], polyline[i]);
  }
  return total;
}

PathPosition PointAtLength(const std::vector<Point> &polyline, double s) {
  PathPosition pos;
  if (polyline.empty()) return pos;
  pos.point = polyline.front();
  double start = 0;
  for (size_t i = 1; i < polyline.size(); ++i) {
    const Point &a = polyline[i - 1];
    const Point &b = polyline[i];
    const double len = SegmentLength(a, b);
    if (len == 0) continue;
    pos.angle = std::atan2(b.y - a.y, b.x - a.x) * 180 / std::numbers::pi;
    const bool last = i + 1 == polyline.size();
    if (s < start + len || last) {
      const double t = (s - start) / len;
      pos.point = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      return pos;
    }
    start += len;
  }
  pos.point = polyline.back();
  return pos;
}

std::vector<Element> LayoutTextOnPath(std::string_view text,
                                      const std::vector<Point> &polyline,
                                      double size, const std::string &fill,
                                      const FontMetrics &metrics) {
  if (polyline.size() < 2) throw InputError("path needs at least two points");
  const double length = PathLength(polyline);
  if (!(length > 0)) throw InputError("path has zero length");

  struct Glyph {
    size_t offset;
    size_t len;
    char32_t cp;
    double advance;
  };
  std::vector<Glyph> glyphs;
  double total = 0;
  utf8::ForEach(text, [&](char32_t cp, size_t offset, size_t len) {
    const double adv = metrics.Advance(cp) * size;
    glyphs.push_back({offset, len, cp, adv});
    total += adv;
  });

  size_t keep = glyphs.size();
  bool ellipsis = false;
  const double ellipsis_adv = Measure(kEllipsis, size, metrics);
  if (total > length + 1e-9) {
    ellipsis = true;
    keep = 0;
    double used = 0;
    while (keep < glyphs.size() &&
           used + glyphs[keep].advance + ellipsis_adv <= length + 1e-9) {
      used += glyphs[keep].advance;
      ++keep;
    }
  }

  vizmodel::Style style;
  style.size = size;
  style.fill = fill;
  std::vector<Element> out;
  double s = 0;
  const auto place = [&](std::string_view glyph, double advance, int index) {
    const PathPosition pos = PointAtLength(polyline, s);
    Element e = MakeText(glyph, pos.point.x,
                         pos.point.y - vizmodel::kAscent * size, style,
                         metrics);
    e.w = advance;
    if (pos.angle != 0) e.style.rotation = pos.angle;
    e.tags = {{"role", "glyph"}, {"index", std::to_string(index)}};
    out.push_back(std::move(e));
  };
  for (size_t i = 0; i < keep; ++i) {
    const Glyph &g = glyphs[i];
    if (g.cp != ' ') {
      place(text.substr(g.offset, g.len), g.advance, static_cast<int>(i));
    }
    s += g.advance;
  }
  if (ellipsis) place(kEllipsis, ellipsis_adv, static_cast<int>(keep));
  return out;
}

}  // namespace littext::layout
