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

#include "littext/layout/config.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace littext::layout {
namespace {

using nlohmann::json;

void CheckKeys(const json &object, std::string_view where,
               std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) {
    throw InputError("layout config: " + std::string(where) +
                     " must be an object");
  }
  for (const auto &[key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError("layout config: unknown key '" + key + "' in " +
                       std::string(where));
    }
  }
}

void Read(const json &object, const char *key, double &out) {
  if (!object.contains(key)) return;
  if (!object[key].is_number()) {
    throw InputError(std::string("layout config: ") + key +
                     " must be a number");
  }
  out = object[key].get<double>();
}

void Read(const json &object, const char *key, int &out) {
  if (!object.contains(key)) return;
  if (!object[key].is_number_integer()) {
    throw InputError(std::string("layout config: ") + key +
                     " must be an integer");
  }
  out = object[key].get<int>();
}

void Read(const json &object, const char *key, std::string &out) {
  if (!object.contains(key)) return;
  if (!object[key].is_string()) {
    throw InputError(std::string("layout config: ") + key +
                     " must be a string");
  }
  out = object[key].get<std::string>();
}

bool IsHex(std::string_view s) {
  return s.size() == 7 && s[0] == '#' &&
         std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return std::isxdigit(
                                      static_cast<unsigned char>(c)); });
}

}  // namespace

void ValidateLayoutConfig(const LayoutConfig &c) {
  const auto positive = [](double v, const char *name) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw InputError(std::string("layout config: ") + name +
                       " must be positive");
    }
  };
  positive(c.width, "canvas.w");
  positive(c.height, "canvas.h");
  positive(c.min_font_pt, "min_font_pt");
  positive(c.verb_pt, "fonts.verb");
  positive(c.object_pt, "fonts.object");
  positive(c.person_pt, "fonts.person");
  positive(c.treemap_verb_pt, "treemap.verb_pt");
  positive(c.treemap_object_pt, "treemap.object_pt");
  positive(c.matrix_header_pt, "matrix.header_pt");
  positive(c.matrix_text_pt, "matrix.text_pt");
  positive(c.bubble_max_radius, "matrix.bubble_max_radius");
  positive(c.bar_row_height, "bars.row_height");
  positive(c.bar_text_pt, "bars.text_pt");
  positive(c.body_pt, "skim.body_pt");
  positive(c.summary_pt, "skim.summary_pt");
  positive(c.path_text_pt, "path.text_pt");
  if (c.columns < 1) throw InputError("layout config: columns must be >= 1");
  if (c.margin < 0 || c.column_gap < 0 || c.matrix_header < 0 ||
      c.bar_plot_width < 0 || c.paragraph_gap < 0 || c.skim_width < 0) {
    throw InputError("layout config: negative spacing");
  }
  if (c.palette.empty()) throw InputError("layout config: empty palette");
  std::vector<std::string> colors(c.verdict_colors.begin(),
                                  c.verdict_colors.end());
  for (const auto &bg : c.gender_backgrounds) {
    if (bg) colors.push_back(*bg);
  }
  colors.insert(colors.end(), c.palette.begin(), c.palette.end());
  for (const std::string *s :
       {&c.ramp_dark, &c.ramp_bright, &c.bubble_color, &c.bar_color,
        &c.summary_color, &c.path_color}) {
    colors.push_back(*s);
  }
  for (const std::string &color : colors) {
    if (!IsHex(color)) {
      throw InputError("layout config: bad color '" + color + "'");
    }
  }
}

LayoutConfig ParseLayoutConfig(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("layout config: ") + e.what());
  }
  LayoutConfig c;
  CheckKeys(root, "config",
            {"canvas", "margin", "min_font_pt", "fonts", "columns",
             "column_gap", "verdict_colors", "gender_backgrounds", "treemap",
             "matrix", "palette", "bars", "skim", "path"});
  if (root.contains("canvas")) {
    CheckKeys(root["canvas"], "canvas", {"w", "h"});
    Read(root["canvas"], "w", c.width);
    Read(root["canvas"], "h", c.height);
  }
  Read(root, "margin", c.margin);
  Read(root, "min_font_pt", c.min_font_pt);
  Read(root, "columns", c.columns);
  Read(root, "column_gap", c.column_gap);
  if (root.contains("fonts")) {
    const json &f = root["fonts"];
    CheckKeys(f, "fonts", {"verb", "object", "person"});
    Read(f, "verb", c.verb_pt);
    Read(f, "object", c.object_pt);
    Read(f, "person", c.person_pt);
  }
  if (root.contains("verdict_colors")) {
    const json &v = root["verdict_colors"];
    CheckKeys(v, "verdict_colors",
              {"Homicide", "Suicide", "Accident", "Natural", "Undetermined"});
    for (Verdict verdict : kAllVerdicts) {
      const std::string name(VerdictName(verdict));
      Read(v, name.c_str(), c.verdict_colors[static_cast<size_t>(verdict)]);
    }
  }
  if (root.contains("gender_backgrounds")) {
    const json &g = root["gender_backgrounds"];
    CheckKeys(g, "gender_backgrounds", {"Female", "Male", "Unknown"});
    for (Gender gender : kAllGenders) {
      const std::string name(GenderName(gender));
      if (!g.contains(name)) continue;
      auto &slot = c.gender_backgrounds[static_cast<size_t>(gender)];
      if (g[name].is_null()) {
        slot.reset();
      } else {
        std::string color;
        Read(g, name.c_str(), color);
        slot = color;
      }
    }
  }
  if (root.contains("treemap")) {
    const json &t = root["treemap"];
    CheckKeys(t, "treemap", {"verb_pt", "object_pt", "ramp_dark",
                             "ramp_bright"});
    Read(t, "verb_pt", c.treemap_verb_pt);
    Read(t, "object_pt", c.treemap_object_pt);
    Read(t, "ramp_dark", c.ramp_dark);
    Read(t, "ramp_bright", c.ramp_bright);
  }
  if (root.contains("matrix")) {
    const json &m = root["matrix"];
    CheckKeys(m, "matrix", {"header", "header_pt", "text_pt",
                            "bubble_max_radius", "bubble_color"});
    Read(m, "header", c.matrix_header);
    Read(m, "header_pt", c.matrix_header_pt);
    Read(m, "text_pt", c.matrix_text_pt);
    Read(m, "bubble_max_radius", c.bubble_max_radius);
    Read(m, "bubble_color", c.bubble_color);
  }
  if (root.contains("palette")) {
    const json &p = root["palette"];
    if (!p.is_array()) throw InputError("layout config: palette must be a list");
    c.palette.clear();
    for (const json &color : p) {
      if (!color.is_string()) {
        throw InputError("layout config: palette entries must be strings");
      }
      c.palette.push_back(color.get<std::string>());
    }
  }
  if (root.contains("bars")) {
    const json &b = root["bars"];
    CheckKeys(b, "bars", {"plot_width", "row_height", "text_pt", "color"});
    Read(b, "plot_width", c.bar_plot_width);
    Read(b, "row_height", c.bar_row_height);
    Read(b, "text_pt", c.bar_text_pt);
    Read(b, "color", c.bar_color);
  }
  if (root.contains("skim")) {
    const json &s = root["skim"];
    CheckKeys(s, "skim", {"width", "body_pt", "summary_pt",
                          "paragraph_gap", "summary_color"});
    Read(s, "width", c.skim_width);
    Read(s, "body_pt", c.body_pt);
    Read(s, "summary_pt", c.summary_pt);
    Read(s, "paragraph_gap", c.paragraph_gap);
    Read(s, "summary_color", c.summary_color);
  }
  if (root.contains("path")) {
    const json &p = root["path"];
    CheckKeys(p, "path", {"text_pt", "color"});
    Read(p, "text_pt", c.path_text_pt);
    Read(p, "color", c.path_color);
  }
  ValidateLayoutConfig(c);
  return c;
}

Rgb ParseHexColor(std::string_view hex) {
  if (!IsHex(hex)) throw InputError("bad color '" + std::string(hex) + "'");
  const auto channel = [&](size_t at) {
    return static_cast<double>(
        std::stoi(std::string(hex.substr(at, 2)), nullptr, 16));
  };
  return {channel(1), channel(3), channel(5)};
}

std::string FormatHexColor(const Rgb &rgb) {
  const auto clamp = [](double v) {
    return static_cast<int>(std::lround(std::clamp(v, 0.0, 255.0)));
  };
  char out[8];
  std::snprintf(out, sizeof(out), "#%02X%02X%02X", clamp(rgb.r), clamp(rgb.g),
                clamp(rgb.b));
  return out;
}

std::string LerpColor(std::string_view from, std::string_view to, double t) {
  const Rgb a = ParseHexColor(from);
  const Rgb b = ParseHexColor(to);
  t = std::clamp(t, 0.0, 1.0);
  return FormatHexColor({a.r + (b.r - a.r) * t, a.g + (b.g - a.g) * t,
                         a.b + (b.b - a.b) * t});
}

double Luminance(std::string_view hex) {
  const Rgb c = ParseHexColor(hex);
  const auto lin = [](double v) {
    v /= 255.0;
    return v <= 0.03928 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
  };
  return 0.2126 * lin(c.r) + 0.7152 * lin(c.g) + 0.0722 * lin(c.b);
}

}  // namespace littext::layout
