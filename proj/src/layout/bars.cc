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

#include "littext/layout/bars.h"

#include <algorithm>
#include <stdexcept>

#include "littext/layout/text_flow.h"

namespace littext::layout {

using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::ElementKind;
using vizmodel::Style;

namespace {

constexpr std::string_view kDash = " \xE2\x80\x93 ";
constexpr double kTextPad = 4;

}  // namespace

std::string BarRowText(const corpus::SongRecord &song) {
  std::string text = song.artist;
  text += kDash;
  text += song.title;
  text += kDash;
  text += song.lyric_opening;
  return text;
}

DocumentModel LayoutBarRows(
    const std::vector<corpus::SongRecord> &songs,
    const std::vector<std::vector<repeats::KeywordMatch>> &matches,
    const LayoutConfig &config, const FontMetrics &metrics) {
  if (!matches.empty() && matches.size() != songs.size()) {
    throw std::invalid_argument("keyword matches not aligned with songs");
  }
  DocumentModel doc;
  doc.width = config.width;
  const double plot_width = config.bar_plot_width > 0
                                ? config.bar_plot_width
                                : config.width - 2 * config.margin;
  doc.height = std::max(config.height, 2 * config.margin +
                                           songs.size() * config.bar_row_height);

  int64_t max_sales = 0;
  for (const auto &song : songs) max_sales = std::max(max_sales, song.sales);

  const double text_room = config.width - 2 * config.margin - kTextPad;
  for (size_t i = 0; i < songs.size(); ++i) {
    const auto &song = songs[i];
    const double top = config.margin + i * config.bar_row_height;
    const std::string rank = std::to_string(song.rank);

    Element &bar = doc.Add(ElementKind::kRect, "bar");
    bar.x = config.margin;
    bar.y = top;
    bar.w = max_sales > 0 ? plot_width * double(song.sales) / max_sales : 0;
    bar.h = config.bar_row_height;
    bar.style.fill = config.bar_color;
    bar.tags = {{"rank", rank}, {"sales", std::to_string(song.sales)}};

    const std::string text = BarRowText(song);
    Style style;
    style.size = config.bar_text_pt;
    bool overflow = false;
    const double em = metrics.MeasureEm(text);
    if (em * style.size > text_room) {
      style.size = std::max(config.min_font_pt, text_room / em);
      overflow = em * style.size > text_room + 1e-9;
    }
    Element run = MakeText(text, config.margin + kTextPad, 0, style, metrics);
    run.y = top + (config.bar_row_height - run.h) / 2;

    if (!matches.empty()) {
      for (const auto &m : matches[i]) {
        Element &mark = doc.Add(ElementKind::kRect, "keyword");
        mark.x = run.x + Measure(std::string_view(text).substr(0, m.span.begin),
                                 style.size, metrics);
        mark.y = run.y;
        mark.w = Measure(std::string_view(text).substr(m.span.begin,
                                                       m.span.size()),
                         style.size, metrics);
        mark.h = run.h;
        mark.style.fill = m.color;
        mark.tags = {{"rank", rank}, {"keyword", m.keyword}};
        if (overflow) mark.tags[std::string(vizmodel::kOverflowTag)] = "true";
      }
    }
    run.tags = {{"rank", rank}, {"artist", song.artist}, {"title", song.title}};
    if (overflow) run.tags[std::string(vizmodel::kOverflowTag)] = "true";
    doc.Append(std::move(run), "row");
  }
  return doc;
}

}  // namespace littext::layout
