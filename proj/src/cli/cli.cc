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

#include "littext/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "littext/common.h"
#include "littext/corpus/dialogue.h"
#include "littext/corpus/inquests.h"
#include "littext/corpus/paragraphs.h"
#include "littext/corpus/songs.h"
#include "littext/layout/bars.h"
#include "littext/layout/config.h"
#include "littext/layout/listing.h"
#include "littext/layout/matrix_layout.h"
#include "littext/layout/metrics.h"
#include "littext/layout/skim.h"
#include "littext/layout/text_path.h"
#include "littext/layout/treemap.h"
#include "littext/render/format.h"
#include "littext/render/scene.h"
#include "littext/render/svg.h"
#include "littext/repeats/keywords.h"
#include "littext/repeats/phrases.h"
#include "littext/textproc/lexicon.h"
#include "littext/textproc/summary.h"
#include "littext/textproc/svo.h"
#include "littext/vizmodel/hierarchy.h"
#include "littext/vizmodel/matrix.h"

#ifndef LITTEXT_DEFAULT_DATA_DIR
#define LITTEXT_DEFAULT_DATA_DIR "data"
#endif

namespace littext::cli {

namespace {

using vizmodel::DocumentModel;

const std::string kDataDir = LITTEXT_DEFAULT_DATA_DIR;

struct Options {
  std::string input;
  std::string svg;
  std::string scene;
  std::string config;
  std::string lexicon;
  std::string metrics;
  // inquests
  std::string layout = "listing";
  std::vector<std::string> filters;
  std::string sort = "count";
  // dialogue
  std::string variant = "bubbles";
  int min_support = 2;
  int n_min = 3;
  int n_max = 7;
  // bars
  std::string keywords;
  // path
  std::string text;
};

std::string DataPath(const std::string &relative) {
  return kDataDir + "/" + relative;
}

textproc::Lexicon LoadLexicon(const Options &opts) {
  if (!opts.lexicon.empty()) return textproc::Lexicon::Load(opts.lexicon);
  if (const char *env = std::getenv("LITTEXT_LEXICON"); env && *env) {
    return textproc::Lexicon::Load(env);
  }
  return textproc::Lexicon::Load(DataPath("lexicon.txt"));
}

layout::LayoutConfig LoadConfig(const Options &opts) {
  layout::LayoutConfig config;
  if (!opts.config.empty()) {
    config = layout::ParseLayoutConfig(ReadFile(opts.config));
  }
  layout::ValidateLayoutConfig(config);
  return config;
}

layout::FontMetrics LoadMetrics(const Options &opts) {
  return layout::FontMetrics::Load(
      opts.metrics.empty() ? DataPath("metrics/reference_sans.tsv")
                           : opts.metrics);
}

void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write " + path);
  file << content;
  if (!file.flush()) throw InputError("error writing " + path);
}

void Emit(const DocumentModel &doc, const Options &opts, std::ostream &out) {
  if (!opts.svg.empty()) WriteFile(opts.svg, render::ToSvg(doc));
  if (!opts.scene.empty()) WriteFile(opts.scene, render::ToScene(doc));
  out << "elements: " << doc.elements.size() << "\n";
  out << "canvas: " << render::FormatNumber(doc.width) << " x "
      << render::FormatNumber(doc.height) << "\n";
}

// Predicate for one --filter tag=value over extracted records.
std::function<bool(const textproc::SvoRecord &)> ParseFilter(
    const std::string &expr) {
  const size_t eq = expr.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == expr.size()) {
    throw InputError("filter must be tag=value: " + expr);
  }
  const std::string tag = AsciiLower(Trim(expr.substr(0, eq)));
  const std::string value = std::string(Trim(expr.substr(eq + 1)));
  if (tag == "verdict") {
    const auto v = ParseVerdict(value);
    if (!v) throw InputError("unknown verdict: " + value);
    return [v = *v](const textproc::SvoRecord &r) { return r.verdict == v; };
  }
  if (tag == "gender") {
    const auto g = ParseGender(value);
    if (!g) throw InputError("unknown gender: " + value);
    return [g = *g](const textproc::SvoRecord &r) { return r.gender == g; };
  }
  if (tag == "verb") {
    return [v = AsciiLower(value)](const textproc::SvoRecord &r) {
      return r.verb == v;
    };
  }
  if (tag == "object") {
    return [v = AsciiLower(value)](const textproc::SvoRecord &r) {
      return AsciiLower(r.object) == v;
    };
  }
  if (tag == "subject" || tag == "person") {
    return [value](const textproc::SvoRecord &r) { return r.subject == value; };
  }
  if (tag == "source") {
    return [value](const textproc::SvoRecord &r) {
      return r.source_id == value;
    };
  }
  throw InputError("unknown filter tag: " + tag);
}

int RunInquests(const Options &opts, std::ostream &out, std::ostream &err) {
  const auto lexicon = LoadLexicon(opts);
  const auto config = LoadConfig(opts);
  const auto metrics = LoadMetrics(opts);
  std::vector<std::function<bool(const textproc::SvoRecord &)>> filters;
  for (const auto &f : opts.filters) filters.push_back(ParseFilter(f));

  const corpus::InquestTable table =
      corpus::ParseInquests(ReadFile(opts.input));
  textproc::SvoBatch batch = textproc::ExtractAll(table.records, lexicon);
  std::vector<textproc::SvoRecord> kept;
  for (auto &r : batch.records) {
    if (std::all_of(filters.begin(), filters.end(),
                    [&](const auto &f) { return f(r); })) {
      kept.push_back(std::move(r));
    }
  }
  const auto hierarchy = vizmodel::BuildHierarchy(
      kept, opts.sort == "alpha" ? vizmodel::SiblingOrder::kAlpha
                                 : vizmodel::SiblingOrder::kCount);
  for (const auto &d : batch.diagnostics) {
    err << "warning: row " << d.source_id << ": " << d.message << "\n";
  }
  out << "rows: " << table.records.size() << "\n";
  out << "skipped rows: " << table.skipped << "\n";
  out << "unextracted rows: " << batch.diagnostics.size() << "\n";
  out << "people: " << kept.size() << "\n";
  out << "verbs: " << hierarchy.children.size() << "\n";

  const DocumentModel doc =
      opts.layout == "treemap"
          ? layout::LayoutTreemap(hierarchy, config, metrics)
          : layout::LayoutListing(hierarchy, config, metrics);
  Emit(doc, opts, out);
  return kExitOk;
}

int RunDialogue(const Options &opts, std::ostream &out, std::ostream &err) {
  const auto lexicon = LoadLexicon(opts);
  const auto config = LoadConfig(opts);
  const auto metrics = LoadMetrics(opts);
  const std::string content = ReadFile(opts.input);
  std::vector<corpus::Utterance> utterances;
  if (corpus::LooksLikeUtteranceTable(content)) {
    utterances = corpus::ParseUtteranceTable(content);
  } else {
    auto extraction = corpus::ExtractUtterances(content);
    if (extraction.unbalanced) err << "warning: unbalanced quotation marks\n";
    utterances = std::move(extraction.utterances);
  }
  repeats::RepeatOptions options;
  options.min_length = opts.n_min;
  options.max_length = opts.n_max;
  options.min_support = opts.min_support;
  if (options.min_length < 1 || options.max_length < options.min_length ||
      options.min_support < 2) {
    throw InputError("need 1 <= n-min <= n-max and min-support >= 2");
  }
  auto phrases = repeats::DetectRepeats(utterances, lexicon, options);
  repeats::AssignPhraseColors(phrases, config.palette);
  const auto matrix = vizmodel::BuildMatrix(utterances, phrases);

  out << "utterances: " << utterances.size() << "\n";
  out << "speakers: " << matrix.speakers.size() << "\n";
  out << "repeated phrases: " << phrases.size() << "\n";
  for (const auto &p : phrases) {
    out << "  " << p.speaker << "\t" << p.key.ToString() << "\t" << p.support
        << "\n";
  }
  const DocumentModel doc =
      opts.variant == "text"
          ? layout::LayoutMatrixText(matrix, config, metrics)
          : layout::LayoutMatrixBubbles(matrix, config, metrics);
  Emit(doc, opts, out);
  return kExitOk;
}

int RunBars(const Options &opts, std::ostream &out, std::ostream &) {
  const auto config = LoadConfig(opts);
  const auto metrics = LoadMetrics(opts);
  const auto songs = corpus::ParseSongs(ReadFile(opts.input));
  const auto rules = repeats::ParseKeywordRules(ReadFile(
      opts.keywords.empty() ? DataPath("keywords.txt") : opts.keywords));
  std::vector<std::vector<repeats::KeywordMatch>> matches;
  size_t total = 0;
  for (const auto &song : songs) {
    matches.push_back(repeats::MatchKeywords(layout::BarRowText(song), rules));
    total += matches.back().size();
  }
  out << "songs: " << songs.size() << "\n";
  out << "keyword matches: " << total << "\n";
  Emit(layout::LayoutBarRows(songs, matches, config, metrics), opts, out);
  return kExitOk;
}

int RunSkim(const Options &opts, std::ostream &out, std::ostream &) {
  const auto lexicon = LoadLexicon(opts);
  const auto config = LoadConfig(opts);
  const auto metrics = LoadMetrics(opts);
  const auto paragraphs = corpus::SplitParagraphs(ReadFile(opts.input));
  std::vector<std::optional<textproc::ParagraphSummary>> summaries;
  for (const auto &p : paragraphs) {
    summaries.push_back(textproc::SummarizeParagraph(p.text, lexicon));
    out << "paragraph " << p.index << ": "
        << (summaries.back() ? summaries.back()->Text() : "-") << "\n";
  }
  Emit(layout::LayoutSkim(paragraphs, summaries, config, metrics), opts, out);
  return kExitOk;
}

// CSV `x,value` series scaled into the canvas, y pointing up.
std::vector<vizmodel::Point> ReadSeries(const std::string &content,
                                        const layout::LayoutConfig &config) {
  const auto rows = corpus::ParseCsv(content);
  if (rows.empty() || rows[0].size() != 2 ||
      AsciiLower(Trim(rows[0][0])) != "x" ||
      AsciiLower(Trim(rows[0][1])) != "value") {
    throw InputError("series header must be x,value");
  }
  std::vector<vizmodel::Point> series;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() == 1 && Trim(rows[i][0]).empty()) continue;
    if (rows[i].size() != 2) {
      throw InputError("series row " + std::to_string(i + 1) +
                       ": expected 2 fields");
    }
    double v[2];
    for (int k = 0; k < 2; ++k) {
      const std::string field(Trim(rows[i][k]));
      char *end = nullptr;
      v[k] = std::strtod(field.c_str(), &end);
      if (field.empty() || *end != '\0' || !std::isfinite(v[k])) {
        throw InputError("series row " + std::to_string(i + 1) +
                         ": not a number: " + field);
      }
    }
    series.push_back({v[0], v[1]});
  }
  if (series.size() < 2) throw InputError("series needs at least two points");
  double x0 = series[0].x, x1 = x0, y0 = series[0].y, y1 = y0;
  for (const auto &p : series) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double left = config.margin;
  const double right = config.width - config.margin;
  // Leave a line of text above the highest point.
  const double top = config.margin + 2 * config.path_text_pt;
  const double bottom = config.height - config.margin;
  for (auto &p : series) {
    const double tx = x1 > x0 ? (p.x - x0) / (x1 - x0) : 0;
    const double ty = y1 > y0 ? (p.y - y0) / (y1 - y0) : 0.5;
    p = {left + tx * (right - left), bottom - ty * (bottom - top)};
  }
  return series;
}

int RunPath(const Options &opts, std::ostream &out, std::ostream &) {
  const auto config = LoadConfig(opts);
  const auto metrics = LoadMetrics(opts);
  const auto series = ReadSeries(ReadFile(opts.input), config);
  DocumentModel doc;
  doc.width = config.width;
  doc.height = config.height;
  vizmodel::Element &line = doc.Add(vizmodel::ElementKind::kPath, "series");
  line.points = series;
  double x0 = series[0].x, x1 = x0, y0 = series[0].y, y1 = y0;
  for (const auto &p : series) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  line.x = x0;
  line.y = y0;
  line.w = x1 - x0;
  line.h = y1 - y0;
  line.style.fill = config.path_color;
  line.tags = {{"role", "series"}};
  auto glyphs = layout::LayoutTextOnPath(opts.text, series, config.path_text_pt,
                                         "#000000", metrics);
  out << "glyphs: " << glyphs.size() << "\n";
  for (auto &g : glyphs) doc.Append(std::move(g), "glyph");
  Emit(doc, opts, out);
  return kExitOk;
}

void AddCommon(CLI::App *cmd, Options &opts) {
  cmd->add_option("--input", opts.input, "Input file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--svg", opts.svg, "Write SVG here");
  cmd->add_option("--scene", opts.scene, "Write scene JSON here");
  cmd->add_option("--config", opts.config, "Layout config JSON")
      ->check(CLI::ExistingFile);
  cmd->add_option("--metrics", opts.metrics, "Font metrics table")
      ->check(CLI::ExistingFile);
}

void AddLexicon(CLI::App *cmd, Options &opts) {
  cmd->add_option("--lexicon", opts.lexicon,
                  "Lexicon file (default: $LITTEXT_LEXICON, then bundled)")
      ->check(CLI::ExistingFile);
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Options opts;
  CLI::App app{"Literal-text visualizations: listings, treemaps, dialogue "
               "matrices and superimposed text, as SVG and scene JSON.",
               "littext"};
  app.require_subcommand(1);

  CLI::App *inquests = app.add_subcommand("inquests", "Causes of death");
  AddCommon(inquests, opts);
  AddLexicon(inquests, opts);
  inquests->add_option("--layout", opts.layout, "treemap or listing")
      ->check(CLI::IsMember({"treemap", "listing"}));
  inquests->add_option("--filter", opts.filters,
                       "Keep records with tag=value (verdict, gender, verb, "
                       "object, subject, source); repeatable");
  inquests->add_option("--sort", opts.sort, "Sibling order: count or alpha")
      ->check(CLI::IsMember({"count", "alpha"}));

  CLI::App *dialogue =
      app.add_subcommand("dialogue", "Speaker x addressee matrix");
  AddCommon(dialogue, opts);
  AddLexicon(dialogue, opts);
  dialogue->add_option("--variant", opts.variant, "bubbles or text")
      ->check(CLI::IsMember({"bubbles", "text"}));
  dialogue->add_option("--min-support", opts.min_support,
                       "Repeats needed for a phrase");
  dialogue->add_option("--n-min", opts.n_min, "Shortest phrase in words");
  dialogue->add_option("--n-max", opts.n_max, "Longest phrase in words");

  CLI::App *bars = app.add_subcommand("bars", "Song rows over a bar chart");
  AddCommon(bars, opts);
  bars->add_option("--keywords", opts.keywords, "keyword=color rules")
      ->check(CLI::ExistingFile);

  CLI::App *skim = app.add_subcommand("skim", "Body text over summaries");
  AddCommon(skim, opts);
  AddLexicon(skim, opts);

  CLI::App *path = app.add_subcommand("path", "Text along a data line");
  AddCommon(path, opts);
  path->add_option("--text", opts.text, "Text to set on the line")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (inquests->parsed()) return RunInquests(opts, out, err);
    if (dialogue->parsed()) return RunDialogue(opts, out, err);
    if (bars->parsed()) return RunBars(opts, out, err);
    if (skim->parsed()) return RunSkim(opts, out, err);
    if (path->parsed()) return RunPath(opts, out, err);
  } catch (const LayoutOverflowError &e) {
    err << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace littext::cli
