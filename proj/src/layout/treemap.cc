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

#include "littext/layout/treemap.h"

#include <algorithm>
#include <limits>

#include "littext/layout/text_flow.h"

namespace littext::layout {

using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::ElementKind;
using vizmodel::FontWeight;
using vizmodel::HierarchyNode;
using vizmodel::Level;
using vizmodel::Style;

namespace {

// Worst aspect ratio of a row of `areas` laid along a side of length `side`.
double Worst(std::span<const double> areas, double side) {
  double sum = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  for (double a : areas) {
    sum += a;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  const double side2 = side * side;
  return std::max(side2 * hi / (sum * sum), (sum * sum) / (side2 * lo));
}

}  // namespace

std::vector<Rect> SquarifyWeights(std::span<const double> weights,
                                  const Rect &rect) {
  std::vector<Rect> out(weights.size());
  double total = 0;
  for (double w : weights) total += std::max(w, 0.0);

  std::vector<size_t> order;
  std::vector<double> areas;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0 && total > 0) {
      order.push_back(i);
      areas.push_back(rect.area() * weights[i] / total);
    } else {
      out[i] = {rect.right(), rect.bottom(), 0, 0};
    }
  }

  Rect free = rect;
  size_t start = 0;
  while (start < areas.size()) {
    const double side = std::min(free.w, free.h);
    size_t end = start + 1;
    while (end < areas.size() &&
           Worst(std::span(areas).subspan(start, end + 1 - start), side) <=
               Worst(std::span(areas).subspan(start, end - start), side)) {
      ++end;
    }
    double sum = 0;
    for (size_t k = start; k < end; ++k) sum += areas[k];
    const bool last_row = end == areas.size();
    const bool vertical = free.w >= free.h;  // row is a column at the left
    const double length = vertical ? free.h : free.w;
    double thickness = length > 0 ? sum / length : 0;
    if (last_row) thickness = vertical ? free.w : free.h;

    double offset = 0;
    for (size_t k = start; k < end; ++k) {
      double extent = thickness > 0 ? areas[k] / thickness : 0;
      if (k + 1 == end) extent = length - offset;
      Rect &r = out[order[k]];
      if (vertical) {
        r = {free.x, free.y + offset, thickness, extent};
      } else {
        r = {free.x + offset, free.y, extent, thickness};
      }
      offset += extent;
    }
    if (vertical) {
      free.x += thickness;
      free.w = std::max(0.0, free.w - thickness);
    } else {
      free.y += thickness;
      free.h = std::max(0.0, free.h - thickness);
    }
    start = end;
  }
  return out;
}

namespace {

void SquarifyInto(const HierarchyNode &node, const Rect &rect, int depth,
                  std::vector<Tile> &tiles) {
  if (node.children.empty()) return;
  std::vector<double> weights;
  for (const HierarchyNode &c : node.children) {
    weights.push_back(static_cast<double>(c.count));
  }
  const std::vector<Rect> rects = SquarifyWeights(weights, rect);
  for (size_t i = 0; i < node.children.size(); ++i) {
    tiles.push_back({&node.children[i], rects[i], depth + 1});
    SquarifyInto(node.children[i], rects[i], depth + 1, tiles);
  }
}

std::string ContrastText(const std::string &fill) {
  return Luminance(fill) > 0.4 ? "#000000" : "#FFFFFF";
}

}  // namespace

std::vector<Tile> Squarify(const HierarchyNode &node, const Rect &rect) {
  std::vector<Tile> tiles;
  SquarifyInto(node, rect, 0, tiles);
  return tiles;
}

DocumentModel LayoutTreemap(const HierarchyNode &hierarchy,
                            const LayoutConfig &config,
                            const FontMetrics &metrics) {
  DocumentModel doc;
  doc.width = config.width;
  doc.height = config.height;
  if (hierarchy.count == 0) return doc;

  int lo = std::numeric_limits<int>::max();
  int hi = 0;
  for (const HierarchyNode &verb : hierarchy.children) {
    lo = std::min(lo, verb.count);
    hi = std::max(hi, verb.count);
  }
  const auto ramp = [&](int count) {
    const double t = hi == lo ? 1.0 : double(count - lo) / double(hi - lo);
    return LerpColor(config.ramp_dark, config.ramp_bright, t);
  };

  // Person tiles are computed but not drawn.
  const std::vector<Tile> tiles =
      Squarify(hierarchy, {0, 0, config.width, config.height});
  size_t i = 0;
  while (i < tiles.size()) {
    const Tile &verb_tile = tiles[i];
    const HierarchyNode &verb = *verb_tile.node;
    const std::string fill = ramp(verb.count);
    const std::string ink = ContrastText(fill);

    Element &rect = doc.Add(ElementKind::kRect, "tile");
    rect.x = verb_tile.rect.x;
    rect.y = verb_tile.rect.y;
    rect.w = verb_tile.rect.w;
    rect.h = verb_tile.rect.h;
    rect.style.fill = fill;
    rect.style.stroke = "#FFFFFF";
    rect.tags = {{"level", "verb"},
                 {"verb", verb.label},
                 {"count", std::to_string(verb.count)}};

    size_t j = i + 1;
    std::vector<Element> object_labels;
    for (; j < tiles.size() && tiles[j].depth > 1; ++j) {
      if (tiles[j].depth != 2) continue;
      const HierarchyNode &object = *tiles[j].node;
      Element &o = doc.Add(ElementKind::kRect, "tile");
      o.x = tiles[j].rect.x;
      o.y = tiles[j].rect.y;
      o.w = tiles[j].rect.w;
      o.h = tiles[j].rect.h;
      o.style.fill = "none";
      o.style.stroke = ink;
      o.tags = {{"level", "object"},
                {"verb", verb.label},
                {"object", object.label},
                {"count", std::to_string(object.count)}};
      Style style;
      style.size = config.treemap_object_pt;
      style.fill = ink;
      auto label = FitLabel(object.label, tiles[j].rect, style, metrics,
                            config.min_font_pt);
      if (label) {
        label->tags = {{"level", "object"},
                       {"verb", verb.label},
                       {"object", object.label}};
        object_labels.push_back(std::move(*label));
      }
    }
    for (Element &label : object_labels) doc.Append(std::move(label), "label");

    Style style;
    style.weight = FontWeight::kBold;
    style.caps = true;
    style.size = config.treemap_verb_pt;
    style.fill = ink;
    auto label = FitLabel(verb.label, verb_tile.rect, style, metrics,
                          config.min_font_pt);
    if (label) {
      label->tags = {{"level", "verb"}, {"verb", verb.label}};
      doc.Append(std::move(*label), "label");
    }
    i = j;
  }
  return doc;
}

}  // namespace littext::layout
