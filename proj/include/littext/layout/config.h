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

#ifndef LITTEXT_LAYOUT_CONFIG_H_
#define LITTEXT_LAYOUT_CONFIG_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "littext/common.h"

namespace littext::layout {

// Every knob the layouts read. Sizes are px; font sizes are px per em.
struct LayoutConfig {
  double width = 1600;
  double height = 1000;
  double margin = 16;
  double min_font_pt = 6;

  // Listing layout: Verb bold all-caps, Object bold lowercase, Person normal.
  double verb_pt = 14;
  double object_pt = 11;
  double person_pt = 9;
  int columns = 4;
  double column_gap = 16;

  // Indexed by Verdict / Gender.
  std::array<std::string, 5> verdict_colors = {
      "#C00000", "#7030A0", "#7F6000", "#404040", "#808080"};
  std::array<std::optional<std::string>, 3> gender_backgrounds = {
      "#F8E0E0", "#E0E8F8", std::nullopt};

  // Treemap.
  double treemap_verb_pt = 40;
  double treemap_object_pt = 12;
  std::string ramp_dark = "#1F2A44";
  std::string ramp_bright = "#FFD21F";

  // Dialogue matrices.
  double matrix_header = 110;
  double matrix_header_pt = 12;
  double matrix_text_pt = 7;
  double bubble_max_radius = 40;
  std::string bubble_color = "#4F81BD";
  std::vector<std::string> palette = {"#FFB347", "#9AD29A", "#8ED6D6",
                                      "#F4A6C6", "#C3B1E1", "#F9E076"};

  // Bar rows.
  double bar_plot_width = 0;  // 0: canvas width minus margins
  double bar_row_height = 22;
  double bar_text_pt = 11;
  std::string bar_color = "#BDD7EE";

  // Skim overlay.
  double skim_width = 640;  // text column; 0: canvas width minus margins
  double body_pt = 12;
  double summary_pt = 72;
  double paragraph_gap = 18;
  std::string summary_color = "#E2E2E2";

  // Text on path.
  double path_text_pt = 16;
  std::string path_color = "#7F7F7F";

  const std::string &VerdictColor(Verdict v) const {
    return verdict_colors[static_cast<size_t>(v)];
  }
  const std::optional<std::string> &GenderBackground(Gender g) const {
    return gender_backgrounds[static_cast<size_t>(g)];
  }
};

// Reads a JSON object whose fields all default to LayoutConfig's values:
// {"canvas":{"w":..,"h":..}, "margin", "min_font_pt",
//  "fonts":{"verb","object","person"}, "columns", "column_gap",
//  "verdict_colors":{"Homicide":"#..",..}, "gender_backgrounds":{"Female":
//  "#..", "Unknown":null,..}, "treemap":{"verb_pt","object_pt","ramp_dark",
//  "ramp_bright"}, "matrix":{"header","header_pt","text_pt",
//  "bubble_max_radius","bubble_color"}, "palette":[..], "bars":{
//  "plot_width","row_height","text_pt","color"}, "skim":{"width",
//  "body_pt","summary_pt","paragraph_gap","summary_color"}, "path":{"text_pt",
//  "color"}}.
// Unknown keys, wrong types and non-positive sizes throw InputError.
LayoutConfig ParseLayoutConfig(std::string_view json);

void ValidateLayoutConfig(const LayoutConfig &config);

// "#RRGGBB" helpers.
struct Rgb {
  double r = 0, g = 0, b = 0;  // 0..255
};
Rgb ParseHexColor(std::string_view hex);
std::string FormatHexColor(const Rgb &rgb);
std::string LerpColor(std::string_view from, std::string_view to, double t);
// Relative luminance in [0, 1].
double Luminance(std::string_view hex);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_CONFIG_H_
