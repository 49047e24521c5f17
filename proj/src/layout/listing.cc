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

#include "littext/layout/listing.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "littext/layout/text_flow.h"

namespace littext::layout {

using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::FontWeight;
using vizmodel::HierarchyNode;
using vizmodel::Level;
using vizmodel::Style;

namespace {

struct Run {
  std::string text;
  Style style;  // size at scale 1
  std::map<std::string, std::string> tags;
  const char *prefix;
  bool header = false;  // own line
  double gap_em = 0;    // space before the run on a shared line
};

std::vector<Run> BuildRuns(const HierarchyNode &root,
                           const LayoutConfig &config) {
  std::vector<Run> runs;
  for (const HierarchyNode &verb : root.children) {
    Run header;
    header.text = verb.label;
    header.style.weight = FontWeight::kBold;
    header.style.caps = true;
    header.style.size = config.verb_pt;
    header.tags = {{"level", "verb"}, {"verb", verb.label}};
    header.prefix = "verb";
    header.header = true;
    runs.push_back(std::move(header));
    for (const HierarchyNode &object : verb.children) {
      Run o;
      o.text = object.label;
      o.style.weight = FontWeight::kBold;
      o.style.size = config.object_pt;
      o.tags = {{"level", "object"},
                {"verb", verb.label},
                {"object", object.label}};
      o.prefix = "object";
      o.gap_em = 0.9;
      runs.push_back(std::move(o));
      for (const HierarchyNode &person : object.children) {
        Run p;
        p.text = person.label;
        p.style.size = config.person_pt;
        Verdict verdict = Verdict::kUndetermined;
        Gender gender = Gender::kUnknown;
        if (auto it = person.tags.find("verdict"); it != person.tags.end()) {
          verdict = ParseVerdict(it->second).value_or(verdict);
        }
        if (auto it = person.tags.find("gender"); it != person.tags.end()) {
          gender = ParseGender(it->second).value_or(gender);
        }
        p.style.fill = config.VerdictColor(verdict);
        p.style.background = config.GenderBackground(gender);
        p.tags = person.tags;
        p.tags["level"] = "person";
        p.tags["verb"] = verb.label;
        p.tags["object"] = object.label;
        p.prefix = "person";
        p.gap_em = 0.35;
        runs.push_back(std::move(p));
      }
    }
  }
  return runs;
}

enum class FlowStatus { kOk, kTooTall, kTooWide };

struct Placed {
  size_t run;
  double x;
  double size;
  double width;
};

// Flows every run at `scale` into the columns of a canvas of `height`.
FlowStatus Flow(const std::vector<Run> &runs, double scale, double height,
                const LayoutConfig &config, const FontMetrics &metrics,
                std::vector<Element> *out) {
  const int columns = config.columns;
  const double column_w =
      (config.width - 2 * config.margin - (columns - 1) * config.column_gap) /
      columns;
  if (!(column_w > 0)) return FlowStatus::kTooWide;
  const double lh = metrics.line_height();
  const double bottom = height - config.margin + 1e-9;

  int column = 0;
  double y = config.margin;
  std::vector<Placed> line;
  double line_x = 0;

  const auto column_left = [&] {
    return config.margin + column * (column_w + config.column_gap);
  };
  const auto flush = [&]() -> bool {
    if (line.empty()) return true;
    double line_h = 0;
    for (const Placed &p : line) line_h = std::max(line_h, p.size * lh);
    if (y + line_h > bottom) {
      ++column;
      y = config.margin;
      if (column >= columns || y + line_h > bottom) return false;
    }
    double ascent = 0;
    for (const Placed &p : line) {
      ascent = std::max(ascent, p.size * vizmodel::kAscent);
    }
    if (out != nullptr) {
      for (const Placed &p : line) {
        const Run &run = runs[p.run];
        Style style = run.style;
        style.size = p.size;
        Element e = MakeText(run.text, column_left() + p.x,
                             y + ascent - p.size * vizmodel::kAscent, style,
                             metrics);
        e.id = run.prefix;
        e.tags = run.tags;
        out->push_back(std::move(e));
      }
    }
    y += line_h;
    line.clear();
    line_x = 0;
    return true;
  };

  bool first_header = true;
  for (size_t i = 0; i < runs.size(); ++i) {
    const Run &run = runs[i];
    const double size = run.style.size * scale;
    const double width =
        Measure(DisplayText(run.text, run.style), size, metrics);
    if (width > column_w + 1e-9) return FlowStatus::kTooWide;
    if (run.header) {
      if (!flush()) return FlowStatus::kTooTall;
      if (!first_header && y > config.margin) y += 0.5 * size * lh;
      first_header = false;
      // Keep the header with the first line below it.
      double next_h = 0;
      for (size_t k = i + 1; k < runs.size() && k <= i + 2; ++k) {
        if (runs[k].header) break;
        next_h = std::max(next_h, runs[k].style.size * scale * lh);
      }
      if (y > config.margin && y + size * lh + next_h > bottom) {
        ++column;
        y = config.margin;
        if (column >= columns) return FlowStatus::kTooTall;
      }
      line.push_back({i, 0, size, width});
      if (!flush()) return FlowStatus::kTooTall;
      continue;
    }
    double gap = line.empty() ? 0 : run.gap_em * size;
    if (!line.empty() && line_x + gap + width > column_w + 1e-9) {
      if (!flush()) return FlowStatus::kTooTall;
      gap = 0;
    }
    line.push_back({i, line_x + gap, size, width});
    line_x += gap + width;
  }
  return flush() ? FlowStatus::kOk : FlowStatus::kTooTall;
}

}  // namespace

DocumentModel LayoutListing(const HierarchyNode &hierarchy,
                            const LayoutConfig &config,
                            const FontMetrics &metrics) {
  DocumentModel doc;
  doc.width = config.width;
  doc.height = config.height;
  const std::vector<Run> runs = BuildRuns(hierarchy, config);
  if (runs.empty()) return doc;

  const double smallest =
      std::min({config.verb_pt, config.object_pt, config.person_pt});
  const double min_scale = std::min(1.0, config.min_font_pt / smallest);
  std::vector<double> scales;
  for (int step = 0; 1.0 - 0.05 * step > min_scale + 1e-12; ++step) {
    scales.push_back(1.0 - 0.05 * step);
  }
  scales.push_back(min_scale);

  bool too_wide = false;
  for (double scale : scales) {
    std::vector<Element> elements;
    const FlowStatus status =
        Flow(runs, scale, config.height, config, metrics, &elements);
    if (status == FlowStatus::kOk) {
      for (Element &e : elements) {
        const std::string prefix = e.id;
        doc.Append(std::move(e), prefix);
      }
      return doc;
    }
    too_wide = status == FlowStatus::kTooWide;
  }

  if (too_wide) {
    throw LayoutOverflowError(
        "canvas too small: a listing run is wider than its column at the "
        "minimum font size",
        0);
  }
  double lo = config.height;
  double hi = config.height * 2;
  while (Flow(runs, min_scale, hi, config, metrics, nullptr) !=
         FlowStatus::kOk) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const double mid = std::floor((lo + hi) / 2);
    if (Flow(runs, min_scale, mid, config, metrics, nullptr) ==
        FlowStatus::kOk) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw LayoutOverflowError(
      "canvas too small: listing needs a height of at least " +
          std::to_string(static_cast<long long>(std::ceil(hi))) +
          " px at the minimum font size",
      std::ceil(hi));
}

}  // namespace littext::layout
