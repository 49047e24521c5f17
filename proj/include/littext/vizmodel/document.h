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

#ifndef LITTEXT_VIZMODEL_DOCUMENT_H_
#define LITTEXT_VIZMODEL_DOCUMENT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace littext::vizmodel {

enum class ElementKind { kRect, kText, kBubble, kPath };
enum class FontWeight { kNormal, kBold };

std::string_view ElementKindName(ElementKind kind);
std::string_view FontWeightName(FontWeight weight);

// Baseline offset below the top of a text box, in em.
inline constexpr double kAscent = 0.8;

struct Point {
  double x = 0;
  double y = 0;
};

struct Style {
  FontWeight weight = FontWeight::kNormal;
  bool caps = false;
  double size = 0;  // font size in px; 0 for non-text elements
  std::string fill = "#000000";
  std::optional<std::string> background;
  std::optional<std::string> stroke;
  std::optional<double> rotation;  // degrees, about the baseline origin
};

// One positioned mark. Geometry by kind:
//   Rect    x, y, w, h
//   Text    box with top-left (x, y), advance w and line height h; the
//           baseline sits at y + kAscent * size
//   Bubble  bounding box of the circle (w == h == diameter)
//   Path    `points`, drawn as an open polyline stroked with `fill`
struct Element {
  std::string id;
  ElementKind kind = ElementKind::kRect;
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;
  std::vector<Point> points;
  std::optional<std::string> text;
  Style style;
  std::map<std::string, std::string> tags;
};

// Tag marking an element allowed to leave the canvas.
inline constexpr std::string_view kOverflowTag = "overflow";

// Renderer-independent scene. Elements are in paint order.
struct DocumentModel {
  double width = 0;
  double height = 0;
  std::vector<Element> elements;

  // Appends an element with id "<prefix>-<ordinal>".
  Element &Add(ElementKind kind, std::string_view prefix);
  // Appends a prepared element, replacing its id the same way.
  Element &Append(Element element, std::string_view prefix);
};

// Numbers compare at the serialized precision (1e-3), so a model equals its
// own scene-file round trip.
bool operator==(const Point &a, const Point &b);
bool operator==(const Style &a, const Style &b);
bool operator==(const Element &a, const Element &b);
bool operator==(const DocumentModel &a, const DocumentModel &b);

// Rounds to the serialized precision; -0 becomes 0.
double Quantize(double value);

// Structural problems: duplicate ids, non-finite geometry, negative sizes,
// elements outside the canvas without the overflow tag. Empty when valid.
std::vector<std::string> ValidateDocument(const DocumentModel &model);

}  // namespace littext::vizmodel

#endif  // LITTEXT_VIZMODEL_DOCUMENT_H_
