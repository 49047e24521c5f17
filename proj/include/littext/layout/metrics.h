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

#ifndef LITTEXT_LAYOUT_METRICS_H_
#define LITTEXT_LAYOUT_METRICS_H_

#include <map>
#include <string>
#include <string_view>

namespace littext::layout {

// Advance widths of one reference typeface, in em.
//
// File format: UTF-8 lines `char<TAB>advance_em`. Two directive lines with
// multi-character keys set the remaining fields: `default<TAB>em` and
// `line_height<TAB>em`.
class FontMetrics {
 public:
  FontMetrics(std::map<char32_t, double> advances, double default_advance,
              double line_height);

  static FontMetrics Parse(std::string_view content);
  static FontMetrics Load(const std::string &path);

  double Advance(char32_t code_point) const;
  // Sum of advances in em.
  double MeasureEm(std::string_view text) const;
  double default_advance() const { return default_advance_; }
  double line_height() const { return line_height_; }

 private:
  std::map<char32_t, double> advances_;
  double default_advance_;
  double line_height_;
};

// Width in px of `text` at `size` (px per em).
double Measure(std::string_view text, double size, const FontMetrics &metrics);

}  // namespace littext::layout

#endif  // LITTEXT_LAYOUT_METRICS_H_
