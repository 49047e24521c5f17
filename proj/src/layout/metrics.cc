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

#include "littext/layout/metrics.h"

#include <charconv>
#include <cmath>

#include "littext/common.h"
#include "littext/utf8.h"

namespace littext::layout {

FontMetrics::FontMetrics(std::map<char32_t, double> advances,
                         double default_advance, double line_height)
    : advances_(std::move(advances)),
      default_advance_(default_advance),
      line_height_(line_height) {
  if (!(default_advance_ > 0) || !(line_height_ > 0)) {
    throw InputError("font metrics: default advance and line height must be "
                     "positive");
  }
  for (const auto &[cp, adv] : advances_) {
    if (!(adv > 0) || !std::isfinite(adv)) {
      throw InputError("font metrics: advances must be positive");
    }
  }
}

FontMetrics FontMetrics::Parse(std::string_view content) {
  std::map<char32_t, double> advances;
  double default_advance = 0.6;
  double line_height = 1.2;
  int n = 0;
  for (const Line &line : SplitLines(StripBom(content))) {
    ++n;
    if (line.text.empty()) continue;
    const size_t tab = line.text.rfind('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw InputError("font metrics line " + std::to_string(n) +
                       ": expected char<TAB>advance");
    }
    const std::string_view key = line.text.substr(0, tab);
    const std::string_view number = Trim(line.text.substr(tab + 1));
    double value = 0;
    auto [ptr, ec] =
        std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw InputError("font metrics line " + std::to_string(n) +
                       ": bad number");
    }
    const utf8::Decoded d = utf8::DecodeAt(key, 0);
    if (d.length == key.size() && d.valid) {
      advances[d.code_point] = value;
    } else if (key == "default") {
      default_advance = value;
    } else if (key == "line_height") {
      line_height = value;
    } else {
      throw InputError("font metrics line " + std::to_string(n) +
                       ": unknown key");
    }
  }
  return FontMetrics(std::move(advances), default_advance, line_height);
}

FontMetrics FontMetrics::Load(const std::string &path) {
  return Parse(ReadFile(path));
}

double FontMetrics::Advance(char32_t code_point) const {
  auto it = advances_.find(code_point);
  return it == advances_.end() ? default_advance_ : it->second;
}

double FontMetrics::MeasureEm(std::string_view text) const {
  double em = 0;
  utf8::ForEach(text, [&](char32_t cp, size_t, size_t) { em += Advance(cp); });
  return em;
}

double Measure(std::string_view text, double size, const FontMetrics &metrics) {
  return size * metrics.MeasureEm(text);
}

}  // namespace littext::layout
