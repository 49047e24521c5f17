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

#include "littext/render/svg.h"

#include <cctype>

#include "littext/common.h"
#include "littext/render/format.h"

namespace littext::render {

using vizmodel::Element;
using vizmodel::ElementKind;

namespace {

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : ScrubUtf8(s)) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// data-* names: lowercase letters, digits, '-' and '_'.
std::string DataName(std::string_view key) {
  std::string out = "data-";
  for (char c : key) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '-' || c == '_') {
      out += static_cast<char>(std::tolower(u));
    } else {
      out += '_';
    }
  }
  return out;
}

void Attr(std::string &out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += Escape(value);
  out += '"';
}

void Num(std::string &out, std::string_view name, double value) {
  Attr(out, name, FormatNumber(value));
}

void Tags(std::string &out, const Element &e) {
  for (const auto &[key, value] : e.tags) Attr(out, DataName(key), value);
}

std::string Rotation(const Element &e) {
  if (!e.style.rotation) return {};
  const double baseline = e.y + vizmodel::kAscent * e.style.size;
  return "rotate(" + FormatNumber(*e.style.rotation) + " " +
         FormatNumber(e.x) + " " + FormatNumber(baseline) + ")";
}

void RectBody(std::string &out, const Element &e) {
  Num(out, "x", e.x);
  Num(out, "y", e.y);
  Num(out, "width", e.w);
  Num(out, "height", e.h);
}

void WriteText(std::string &out, const Element &e) {
  const std::string transform = Rotation(e);
  if (e.style.background) {
    out += "<rect";
    Attr(out, "id", e.id + "-bg");
    RectBody(out, e);
    Attr(out, "fill", *e.style.background);
    if (!transform.empty()) Attr(out, "transform", transform);
    out += "/>\n";
  }
  out += "<text";
  Attr(out, "id", e.id);
  Num(out, "x", e.x);
  Num(out, "y", e.y + vizmodel::kAscent * e.style.size);
  Num(out, "font-size", e.style.size);
  if (e.w > 0) {
    Num(out, "textLength", e.w);
    Attr(out, "lengthAdjust", "spacingAndGlyphs");
  }
  if (e.style.weight == vizmodel::FontWeight::kBold) {
    Attr(out, "font-weight", "bold");
  }
  Attr(out, "fill", e.style.fill);
  if (!transform.empty()) Attr(out, "transform", transform);
  Tags(out, e);
  out += '>';
  const std::string text = e.text.value_or("");
  out += Escape(e.style.caps ? AsciiUpper(text) : text);
  out += "</text>\n";
}

}  // namespace

std::string ToSvg(const vizmodel::DocumentModel &model) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  Num(out, "width", model.width);
  Num(out, "height", model.height);
  Attr(out, "viewBox", "0 0 " + FormatNumber(model.width) + " " +
                           FormatNumber(model.height));
  out += ">\n<g font-family=\"Helvetica, Arial, sans-serif\" "
         "xml:space=\"preserve\">\n";
  for (const Element &e : model.elements) {
    switch (e.kind) {
      case ElementKind::kRect:
        out += "<rect";
        Attr(out, "id", e.id);
        RectBody(out, e);
        Attr(out, "fill", e.style.fill);
        if (e.style.stroke) Attr(out, "stroke", *e.style.stroke);
        Tags(out, e);
        out += "/>\n";
        break;
      case ElementKind::kText:
        WriteText(out, e);
        break;
      case ElementKind::kBubble:
        out += "<circle";
        Attr(out, "id", e.id);
        Num(out, "cx", e.x + e.w / 2);
        Num(out, "cy", e.y + e.h / 2);
        Num(out, "r", e.w / 2);
        Attr(out, "fill", e.style.fill);
        if (e.style.stroke) Attr(out, "stroke", *e.style.stroke);
        Tags(out, e);
        out += "/>\n";
        break;
      case ElementKind::kPath: {
        std::string points;
        for (const auto &p : e.points) {
          if (!points.empty()) points += ' ';
          points += FormatNumber(p.x) + "," + FormatNumber(p.y);
        }
        out += "<polyline";
        Attr(out, "id", e.id);
        Attr(out, "points", points);
        Attr(out, "fill", "none");
        Attr(out, "stroke", e.style.stroke.value_or(e.style.fill));
        Attr(out, "stroke-width", "1.5");
        Tags(out, e);
        out += "/>\n";
        break;
      }
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace littext::render
