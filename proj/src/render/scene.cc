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

#include "littext/render/scene.h"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "littext/common.h"
#include "littext/render/format.h"

namespace littext::render {

using nlohmann::json;
using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::ElementKind;
using vizmodel::FontWeight;

namespace {

void Str(std::string &out, std::string_view s) {
  out += '"';
  for (char c : ScrubUtf8(s)) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}

void Key(std::string &out, std::string_view key) {
  Str(out, key);
  out += ':';
}

void WriteElement(std::string &out, const Element &e) {
  out += '{';
  Key(out, "id");
  Str(out, e.id);
  out += ',';
  Key(out, "kind");
  Str(out, vizmodel::ElementKindName(e.kind));
  const std::pair<const char *, double> geometry[] = {
      {"x", e.x}, {"y", e.y}, {"w", e.w}, {"h", e.h}};
  for (const auto &[name, value] : geometry) {
    out += ',';
    Key(out, name);
    out += FormatNumber(value);
  }
  if (e.kind == ElementKind::kPath) {
    out += ',';
    Key(out, "points");
    out += '[';
    for (size_t i = 0; i < e.points.size(); ++i) {
      if (i > 0) out += ',';
      out += '[' + FormatNumber(e.points[i].x) + ',' +
             FormatNumber(e.points[i].y) + ']';
    }
    out += ']';
  }
  if (e.text) {
    out += ',';
    Key(out, "text");
    Str(out, *e.text);
  }
  out += ',';
  Key(out, "style");
  out += '{';
  Key(out, "weight");
  Str(out, vizmodel::FontWeightName(e.style.weight));
  out += ',';
  Key(out, "caps");
  out += e.style.caps ? "true" : "false";
  out += ',';
  Key(out, "size");
  out += FormatNumber(e.style.size);
  out += ',';
  Key(out, "fill");
  Str(out, e.style.fill);
  if (e.style.background) {
    out += ',';
    Key(out, "background");
    Str(out, *e.style.background);
  }
  if (e.style.stroke) {
    out += ',';
    Key(out, "stroke");
    Str(out, *e.style.stroke);
  }
  if (e.style.rotation) {
    out += ',';
    Key(out, "rotation");
    out += FormatNumber(*e.style.rotation);
  }
  out += "},";
  Key(out, "tags");
  out += '{';
  bool first = true;
  for (const auto &[key, value] : e.tags) {
    if (!first) out += ',';
    first = false;
    Key(out, key);
    Str(out, value);
  }
  out += "}}";
}

const json &Field(const json &object, const char *name, json::value_t type) {
  const auto it = object.find(name);
  if (it == object.end()) {
    throw InputError(std::string("scene: missing field '") + name + "'");
  }
  const bool ok = type == json::value_t::number_float
                      ? it->is_number()
                      : it->type() == type ||
                            (type == json::value_t::number_integer &&
                             it->is_number_integer());
  if (!ok) throw InputError(std::string("scene: bad type for '") + name + "'");
  return *it;
}

double Number(const json &object, const char *name) {
  const double v = Field(object, name, json::value_t::number_float).get<double>();
  if (!std::isfinite(v)) throw InputError("scene: non-finite number");
  return v;
}

std::string String(const json &object, const char *name) {
  return Field(object, name, json::value_t::string).get<std::string>();
}

void CheckKeys(const json &object, std::initializer_list<const char *> keys,
               const char *where) {
  for (const auto &[key, value] : object.items()) {
    bool known = false;
    for (const char *k : keys) known = known || key == k;
    if (!known) {
      throw InputError(std::string("scene: unknown key '") + key + "' in " +
                       where);
    }
  }
}

ElementKind ParseKind(const std::string &name) {
  for (ElementKind k : {ElementKind::kRect, ElementKind::kText,
                        ElementKind::kBubble, ElementKind::kPath}) {
    if (vizmodel::ElementKindName(k) == name) return k;
  }
  throw InputError("scene: unknown element kind '" + name + "'");
}

Element ReadElement(const json &j) {
  if (!j.is_object()) throw InputError("scene: element is not an object");
  CheckKeys(j, {"id", "kind", "x", "y", "w", "h", "points", "text", "style",
                "tags"},
            "element");
  Element e;
  e.id = String(j, "id");
  e.kind = ParseKind(String(j, "kind"));
  e.x = Number(j, "x");
  e.y = Number(j, "y");
  e.w = Number(j, "w");
  e.h = Number(j, "h");
  if (j.contains("points")) {
    for (const json &p : Field(j, "points", json::value_t::array)) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
          !p[1].is_number()) {
        throw InputError("scene: bad point");
      }
      e.points.push_back({p[0].get<double>(), p[1].get<double>()});
    }
  }
  if (j.contains("text")) e.text = String(j, "text");

  const json &style = Field(j, "style", json::value_t::object);
  CheckKeys(style,
            {"weight", "caps", "size", "fill", "background", "stroke",
             "rotation"},
            "style");
  const std::string weight = String(style, "weight");
  if (weight == vizmodel::FontWeightName(FontWeight::kBold)) {
    e.style.weight = FontWeight::kBold;
  } else if (weight == vizmodel::FontWeightName(FontWeight::kNormal)) {
    e.style.weight = FontWeight::kNormal;
  } else {
    throw InputError("scene: unknown weight '" + weight + "'");
  }
  e.style.caps = Field(style, "caps", json::value_t::boolean).get<bool>();
  e.style.size = Number(style, "size");
  e.style.fill = String(style, "fill");
  if (style.contains("background")) {
    e.style.background = String(style, "background");
  }
  if (style.contains("stroke")) e.style.stroke = String(style, "stroke");
  if (style.contains("rotation")) e.style.rotation = Number(style, "rotation");

  for (const auto &[key, value] :
       Field(j, "tags", json::value_t::object).items()) {
    if (!value.is_string()) throw InputError("scene: tag values are strings");
    e.tags[key] = value.get<std::string>();
  }
  return e;
}

}  // namespace

std::string ToScene(const DocumentModel &model) {
  std::string out = "{\"version\":" + std::to_string(kSceneVersion) +
                    ",\"canvas\":{\"w\":" + FormatNumber(model.width) +
                    ",\"h\":" + FormatNumber(model.height) +
                    "},\"elements\":[";
  for (size_t i = 0; i < model.elements.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    WriteElement(out, model.elements[i]);
  }
  out += "\n]}\n";
  return out;
}

DocumentModel FromScene(std::string_view scene) {
  json root;
  try {
    root = json::parse(scene);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("scene: ") + e.what());
  }
  if (!root.is_object()) throw InputError("scene: root is not an object");
  const json &version = Field(root, "version", json::value_t::number_integer);
  if (version.get<int64_t>() != kSceneVersion) {
    throw UnsupportedVersionError(static_cast<int>(version.get<int64_t>()));
  }
  CheckKeys(root, {"version", "canvas", "elements"}, "scene");
  const json &canvas = Field(root, "canvas", json::value_t::object);
  CheckKeys(canvas, {"w", "h"}, "canvas");
  DocumentModel model;
  model.width = Number(canvas, "w");
  model.height = Number(canvas, "h");
  for (const json &e : Field(root, "elements", json::value_t::array)) {
    model.elements.push_back(ReadElement(e));
  }
  return model;
}

}  // namespace littext::render
