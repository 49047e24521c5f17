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

#include "littext/vizmodel/document.h"

#include <cmath>
#include <set>

namespace littext::vizmodel {

std::string_view ElementKindName(ElementKind kind) {
  switch (kind) {
    case ElementKind::kRect: return "rect";
    case ElementKind::kText: return "text";
    case ElementKind::kBubble: return "bubble";
    case ElementKind::kPath: return "path";
  }
  return "rect";
}

std::string_view FontWeightName(FontWeight weight) {
  return weight == FontWeight::kBold ? "bold" : "normal";
}

Element &DocumentModel::Add(ElementKind kind, std::string_view prefix) {
  Element e;
  e.kind = kind;
  e.id = std::string(prefix) + "-" + std::to_string(elements.size());
  elements.push_back(std::move(e));
  return elements.back();
}

Element &DocumentModel::Append(Element element, std::string_view prefix) {
  element.id = std::string(prefix) + "-" + std::to_string(elements.size());
  elements.push_back(std::move(element));
  return elements.back();
}

double Quantize(double value) {
  const double q = std::round(value * 1000.0) / 1000.0;
  return q == 0.0 ? 0.0 : q;
}

namespace {

bool Same(double a, double b) { return Quantize(a) == Quantize(b); }

bool Same(const std::optional<double> &a, const std::optional<double> &b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || Same(*a, *b);
}

}  // namespace

bool operator==(const Point &a, const Point &b) {
  return Same(a.x, b.x) && Same(a.y, b.y);
}

bool operator==(const Style &a, const Style &b) {
  return a.weight == b.weight && a.caps == b.caps && Same(a.size, b.size) &&
         a.fill == b.fill && a.background == b.background &&
         a.stroke == b.stroke && Same(a.rotation, b.rotation);
}

bool operator==(const Element &a, const Element &b) {
  return a.id == b.id && a.kind == b.kind && Same(a.x, b.x) &&
         Same(a.y, b.y) && Same(a.w, b.w) && Same(a.h, b.h) &&
         a.points == b.points && a.text == b.text && a.style == b.style &&
         a.tags == b.tags;
}

bool operator==(const DocumentModel &a, const DocumentModel &b) {
  return Same(a.width, b.width) && Same(a.height, b.height) &&
         a.elements == b.elements;
}

std::vector<std::string> ValidateDocument(const DocumentModel &model) {
  std::vector<std::string> problems;
  std::set<std::string> ids;
  constexpr double kSlack = 1e-6;
  for (const Element &e : model.elements) {
    if (!ids.insert(e.id).second) problems.push_back("duplicate id " + e.id);
    bool finite = std::isfinite(e.x) && std::isfinite(e.y) &&
                  std::isfinite(e.w) && std::isfinite(e.h);
    for (const Point &p : e.points) {
      finite = finite && std::isfinite(p.x) && std::isfinite(p.y);
    }
    if (!finite) {
      problems.push_back("non-finite geometry in " + e.id);
      continue;
    }
    if (e.w < 0 || e.h < 0) problems.push_back("negative size in " + e.id);
    if (e.tags.count(std::string(kOverflowTag))) continue;
    const auto outside = [&](double x, double y) {
      return x < -kSlack || y < -kSlack || x > model.width + kSlack ||
             y > model.height + kSlack;
    };
    bool out = false;
    if (e.kind == ElementKind::kPath) {
      for (const Point &p : e.points) out = out || outside(p.x, p.y);
    } else if (!e.style.rotation) {
      out = outside(e.x, e.y) || outside(e.x + e.w, e.y + e.h);
    }
    if (out) problems.push_back("element outside canvas: " + e.id);
  }
  return problems;
}

}  // namespace littext::vizmodel
