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

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
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
#include "littext/layout/text_flow.h"
#include "littext/layout/text_path.h"
#include "littext/repeats/keywords.h"
#include "littext/repeats/phrases.h"
#include "littext/textproc/summary.h"
#include "littext/textproc/svo.h"
#include "littext/vizmodel/hierarchy.h"
#include "littext/vizmodel/matrix.h"
#include "test_util.h"

namespace littext::layout {
namespace {

using littext::testing::BundledLexicon;
using littext::testing::BundledMetrics;
using littext::testing::UnitMetrics;
using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::ElementKind;

constexpr double kEps = 1e-6;

std::vector<const Element *> Tagged(const DocumentModel &doc,
                                    const std::string &key,
                                    const std::string &value) {
  std::vector<const Element *> out;
  for (const auto &e : doc.elements) {
    auto it = e.tags.find(key);
    if (it != e.tags.end() && it->second == value) out.push_back(&e);
  }
  return out;
}

bool Inside(const Element &e, const DocumentModel &doc) {
  return e.x >= -kEps && e.y >= -kEps && e.x + e.w <= doc.width + kEps &&
         e.y + e.h <= doc.height + kEps;
}

bool Overlap(const Element &a, const Element &b) {
  return a.x < b.x + b.w - kEps && b.x < a.x + a.w - kEps &&
         a.y < b.y + b.h - kEps && b.y < a.y + a.h - kEps;
}

// Metrics.

TEST(MetricsTest, DrownedHandSum) {
  // d r o w n e d from the shipped table.
  const double em = 0.556 + 0.333 + 0.556 + 0.722 + 0.556 + 0.556 + 0.556;
  EXPECT_NEAR(Measure("drowned", 12, BundledMetrics()), em * 12, 1e-9);
  EXPECT_NEAR(Measure("drowned", 12, BundledMetrics()), 46.02, 1e-9);
}

TEST(MetricsTest, EmptyAndAdditive) {
  const FontMetrics &m = BundledMetrics();
  EXPECT_EQ(Measure("", 12, m), 0);
  std::mt19937 rng(2);
  const std::string alphabet = "abcXYZ .,'\xC3\xA9";
  for (int i = 0; i < 200; ++i) {
    std::string a, b;
    for (int k = rng() % 8; k > 0; --k) a += alphabet[rng() % 10];
    for (int k = rng() % 8; k > 0; --k) b += alphabet[rng() % 10];
    EXPECT_NEAR(Measure(a + b, 10, m), Measure(a, 10, m) + Measure(b, 10, m),
                1e-9);
    EXPECT_GE(Measure(a + b, 10, m), Measure(a, 10, m));
  }
  // Unmapped characters take the default advance.
  EXPECT_NEAR(m.Advance(U'\x4E2D'), 0.6, 1e-12);
  EXPECT_NEAR(m.line_height(), 1.2, 1e-12);
}

TEST(MetricsTest, ParseErrors) {
  const auto m = FontMetrics::Parse("a\t0.5\ndefault\t0.7\nline_height\t1.1\n");
  EXPECT_NEAR(m.Advance(U'a'), 0.5, 1e-12);
  EXPECT_NEAR(m.Advance(U'b'), 0.7, 1e-12);
  EXPECT_NEAR(m.line_height(), 1.1, 1e-12);
  EXPECT_THROW(FontMetrics::Parse("a\t0\n"), InputError);
  EXPECT_THROW(FontMetrics::Parse("a\t-1\n"), InputError);
  EXPECT_THROW(FontMetrics::Parse("a\n"), InputError);
  EXPECT_THROW(FontMetrics::Parse("a\tbig\n"), InputError);
}

// Config.

TEST(ConfigTest, DefaultsAndOverrides) {
  const LayoutConfig d = ParseLayoutConfig("{}");
  EXPECT_EQ(d.width, 1600);
  EXPECT_EQ(d.columns, 4);
  EXPECT_EQ(d.VerdictColor(Verdict::kHomicide), "#C00000");
  EXPECT_EQ(d.GenderBackground(Gender::kFemale), "#F8E0E0");
  EXPECT_FALSE(d.GenderBackground(Gender::kUnknown));
  const LayoutConfig c = ParseLayoutConfig(
      R"({"canvas":{"w":3840,"h":2160},"fonts":{"verb":20},
          "verdict_colors":{"Suicide":"#112233"},
          "gender_backgrounds":{"Male":null},"skim":{"width":0}})");
  EXPECT_EQ(c.width, 3840);
  EXPECT_EQ(c.height, 2160);
  EXPECT_EQ(c.verb_pt, 20);
  EXPECT_EQ(c.VerdictColor(Verdict::kSuicide), "#112233");
  EXPECT_FALSE(c.GenderBackground(Gender::kMale));
  EXPECT_EQ(c.skim_width, 0);
}

TEST(ConfigTest, Rejects) {
  EXPECT_THROW(ParseLayoutConfig(R"({"colour":1})"), InputError);
  EXPECT_THROW(ParseLayoutConfig(R"({"min_font_pt":0})"), InputError);
  EXPECT_THROW(ParseLayoutConfig(R"({"columns":"four"})"), InputError);
  EXPECT_THROW(ParseLayoutConfig(R"({"skim":{"width":-1}})"), InputError);
  EXPECT_THROW(ParseLayoutConfig(R"({"palette":[]})"), InputError);
  EXPECT_THROW(ParseLayoutConfig(R"({"bars":{"color":"blue"}})"),
               InputError);
  EXPECT_THROW(ParseLayoutConfig("[1,2"), InputError);
}

TEST(ConfigTest, Colors) {
  EXPECT_EQ(LerpColor("#000000", "#FFFFFF", 0), "#000000");
  EXPECT_EQ(LerpColor("#000000", "#FFFFFF", 1), "#FFFFFF");
  EXPECT_NEAR(Luminance("#FFFFFF"), 1, 1e-9);
  EXPECT_NEAR(Luminance("#000000"), 0, 1e-9);
  EXPECT_EQ(FormatHexColor(ParseHexColor("#1f2a44")), "#1F2A44");
}

// Text flow.

TEST(TextFlowTest, FitLabelExamples) {
  const FontMetrics &m = BundledMetrics();
  vizmodel::Style style;
  style.size = 40;
  EXPECT_FALSE(FitLabel("x", Rect{0, 0, 0, 0}, style, m, 6));
  // Exactly fitting at the minimum size.
  const double w6 = Measure("fell", 6, m);
  const auto at_min =
      FitLabel("fell", Rect{0, 0, w6, 100}, style, m, 6);
  ASSERT_TRUE(at_min);
  EXPECT_NEAR(at_min->style.size, 6, 1e-9);
  EXPECT_FALSE(FitLabel("fell", Rect{0, 0, w6 * 0.99, 100}, style, m, 6));
}

TEST(TextFlowTest, StrangledBinarySearch) {
  const FontMetrics &m = BundledMetrics();
  vizmodel::Style style;
  style.size = 40;
  style.weight = vizmodel::FontWeight::kBold;
  const Rect box{10, 20, 60, 100};
  // Oracle: bisect the size against the measured width.
  double lo = 0, hi = 40;
  for (int i = 0; i < 100; ++i) {
    const double mid = (lo + hi) / 2;
    (Measure("STRANGLED", mid, m) <= box.w &&
     mid * m.line_height() <= box.h ? lo : hi) = mid;
  }
  const auto label = FitLabel("STRANGLED", box, style, m, 6);
  ASSERT_TRUE(label);
  EXPECT_NEAR(label->style.size, lo, 1e-3);
  EXPECT_LE(label->style.size, lo);
  EXPECT_EQ(*label->text, "STRANGLED");
  EXPECT_LE(label->w, box.w + kEps);
  EXPECT_GE(label->x, box.x - kEps);
  EXPECT_LE(label->x + label->w, box.right() + kEps);
}

TEST(TextFlowTest, WrapLinesProperties) {
  const FontMetrics &m = BundledMetrics();
  std::mt19937 rng(4);
  const std::vector<std::string> words = {"a", "off", "with", "his", "head",
                                          "supercalifragilistic", "\xC3\xA9t\xC3\xA9"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (int k = rng() % 15; k > 0; --k) {
      text += words[rng() % words.size()];
      text += (rng() % 4 == 0) ? "  " : " ";
    }
    const double width = 10 + rng() % 120;
    const auto lines = WrapLines(text, width, 10, m);
    std::string joined, source;
    size_t last = 0;
    for (const auto &span : lines) {
      EXPECT_GE(span.begin, last);
      last = span.end;
      const std::string line = text.substr(span.begin, span.size());
      EXPECT_FALSE(line.empty());
      EXPECT_NE(line.front(), ' ');
      EXPECT_NE(line.back(), ' ');
      EXPECT_LE(Measure(line, 10, m), width + kEps) << line;
      for (char ch : line) {
        if (ch != ' ') joined += ch;
      }
    }
    for (char ch : text) {
      if (ch != ' ') source += ch;
    }
    EXPECT_EQ(joined, source);
  }
}

TEST(TextFlowTest, Truncate) {
  const FontMetrics m = UnitMetrics();
  EXPECT_EQ(TruncateToWidth("abcd", 20, 10, m), "abcd");
  EXPECT_EQ(TruncateToWidth("abcdef", 20, 10, m),
            "abc" + std::string(kEllipsis));
  EXPECT_EQ(TruncateToWidth("abcdef", 4, 10, m), "");
  vizmodel::Style caps;
  caps.caps = true;
  EXPECT_EQ(DisplayText("struck", caps), "STRUCK");
}

// Listing.

vizmodel::HierarchyNode SampleHierarchy(std::vector<textproc::SvoRecord> *out =
                                            nullptr) {
  const auto table =
      corpus::ParseInquests(ReadFile(testing::DataPath("sample/inquests.tsv")));
  auto records = textproc::ExtractAll(table.records, BundledLexicon()).records;
  if (out) *out = records;
  return vizmodel::BuildHierarchy(records);
}

textproc::SvoRecord Svo(std::string subject, std::string verb,
                        std::string object, Verdict verdict, Gender gender) {
  return {std::move(subject), std::move(verb), std::move(object), verdict,
          gender, "x"};
}

TEST(ListingTest, StruckReadingOrder) {
  const auto root = vizmodel::BuildHierarchy(
      {Svo("Sarah Skyring", "struck", "adze", Verdict::kHomicide,
           Gender::kFemale),
       Svo("William Blakshaw", "struck", "bar", Verdict::kHomicide,
           Gender::kMale)});
  const auto doc = LayoutListing(root, LayoutConfig{}, BundledMetrics());
  std::vector<std::string> order;
  for (const auto &e : doc.elements) {
    order.push_back(DisplayText(*e.text, e.style));
  }
  EXPECT_EQ(order, (std::vector<std::string>{"STRUCK", "adze", "Sarah Skyring",
                                             "bar", "William Blakshaw"}));
  const Element &verb = doc.elements[0];
  EXPECT_EQ(verb.style.weight, vizmodel::FontWeight::kBold);
  EXPECT_TRUE(verb.style.caps);
  EXPECT_EQ(doc.elements[1].style.weight, vizmodel::FontWeight::kBold);
  EXPECT_FALSE(doc.elements[1].style.caps);
  // Homicide, female: red text on a red-tinted ground.
  const Element &sarah = doc.elements[2];
  EXPECT_EQ(sarah.style.weight, vizmodel::FontWeight::kNormal);
  EXPECT_EQ(sarah.style.fill, "#C00000");
  EXPECT_EQ(sarah.style.background, "#F8E0E0");
  EXPECT_EQ(doc.elements[4].style.background, "#E0E8F8");
  // Reading order is geometric too.
  for (size_t i = 1; i < doc.elements.size(); ++i) {
    const auto &a = doc.elements[i - 1];
    const auto &b = doc.elements[i];
    const double base_a = a.y + vizmodel::kAscent * a.style.size;
    const double base_b = b.y + vizmodel::kAscent * b.style.size;
    EXPECT_TRUE(base_b > base_a + kEps ||
                (std::abs(base_b - base_a) < 1e-9 && b.x > a.x));
  }
}

TEST(ListingTest, Empty) {
  const auto doc =
      LayoutListing(vizmodel::BuildHierarchy({}), LayoutConfig{},
                    BundledMetrics());
  EXPECT_TRUE(doc.elements.empty());
}

TEST(ListingTest, CompleteAtDeskScale) {
  std::vector<textproc::SvoRecord> records;
  const auto root = SampleHierarchy(&records);
  LayoutConfig config;
  config.width = 3840;
  config.height = 2160;
  const auto doc = LayoutListing(root, config, BundledMetrics());
  const auto people = Tagged(doc, "level", "person");
  EXPECT_EQ(people.size(), records.size());
  EXPECT_EQ(Tagged(doc, "level", "verb").size(), root.children.size());
  for (const Element *e : people) {
    EXPECT_TRUE(Inside(*e, doc)) << *e->text;
    EXPECT_GE(e->style.size, config.min_font_pt);
  }
  EXPECT_TRUE(vizmodel::ValidateDocument(doc).empty());
  for (size_t i = 0; i < doc.elements.size(); ++i) {
    for (size_t j = i + 1; j < doc.elements.size(); ++j) {
      ASSERT_FALSE(Overlap(doc.elements[i], doc.elements[j]))
          << doc.elements[i].id << " " << doc.elements[j].id;
    }
  }
}

TEST(ListingTest, OverflowNamesHeight) {
  LayoutConfig config;
  config.width = 400;
  config.height = 200;
  try {
    LayoutListing(SampleHierarchy(), config, BundledMetrics());
    FAIL() << "expected overflow";
  } catch (const LayoutOverflowError &e) {
    EXPECT_GT(e.required_height(), 200);
    config.height = std::ceil(e.required_height());
    const auto doc = LayoutListing(SampleHierarchy(), config, BundledMetrics());
    EXPECT_TRUE(vizmodel::ValidateDocument(doc).empty());
  }
}

// Matrix.

TEST(CellSpansTest, Examples) {
  EXPECT_EQ(CellSpans({true, false, false, true}),
            (std::vector<int>{3, 0, 0, 1}));
  EXPECT_EQ(CellSpans({true, true}), (std::vector<int>{1, 1}));
  EXPECT_EQ(CellSpans({false, true}), (std::vector<int>{0, 1}));
  EXPECT_EQ(CellSpans({true, false}), (std::vector<int>{2, 0}));
  EXPECT_TRUE(CellSpans({}).empty());
}

vizmodel::MatrixModel GridModel(int n, uint32_t pattern) {
  vizmodel::MatrixModel m;
  for (int i = 0; i < n; ++i) m.speakers.push_back("S" + std::to_string(i));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (pattern >> (r * n + c) & 1) m.cells[{r, c}] = {1, "w", {}};
    }
  }
  return m;
}

TEST(MatrixLayoutTest, ExhaustiveSmallGrids) {
  const FontMetrics m = UnitMetrics();
  const LayoutConfig config;
  // Cell pitch from the full grid.
  const auto full = LayoutMatrixText(GridModel(3, 0x1FF), config, m);
  const auto full_cells = Tagged(full, "role", "cell");
  ASSERT_EQ(full_cells.size(), 9u);
  const double x0 = full_cells[0]->x;
  const double pitch = full_cells[1]->x - x0;
  for (uint32_t pattern = 0; pattern < (1u << 9); ++pattern) {
    const auto doc = LayoutMatrixText(GridModel(3, pattern), config, m);
    const auto cells = Tagged(doc, "role", "cell");
    for (const Element *e : cells) {
      const int c = std::stoi(e->tags.at("to").substr(1));
      const int r = std::stoi(e->tags.at("from").substr(1));
      ASSERT_TRUE(pattern >> (r * 3 + c) & 1);
      int k = 1;
      while (c + k < 3 && !(pattern >> (r * 3 + c + k) & 1)) ++k;
      EXPECT_EQ(e->tags.at("span"), std::to_string(k));
      EXPECT_NEAR(e->x, x0 + c * pitch, 1e-9);
      EXPECT_NEAR(e->w, k * pitch, 1e-9);
    }
    EXPECT_EQ(static_cast<int>(cells.size()), std::popcount(pattern));
  }
}

TEST(MatrixLayoutTest, AliceTextCellsDisjoint) {
  const auto u =
      corpus::ParseUtteranceTable(testing::Fixture("alice_utterances.tsv"));
  auto phrases = repeats::DetectRepeats(u, BundledLexicon());
  const LayoutConfig config;
  repeats::AssignPhraseColors(phrases, config.palette);
  const auto matrix = vizmodel::BuildMatrix(u, phrases);
  const auto doc = LayoutMatrixText(matrix, config, BundledMetrics());
  EXPECT_TRUE(vizmodel::ValidateDocument(doc).empty());
  const auto cells = Tagged(doc, "role", "cell");
  EXPECT_EQ(cells.size(), matrix.cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    for (size_t j = i + 1; j < cells.size(); ++j) {
      EXPECT_FALSE(Overlap(*cells[i], *cells[j]));
    }
  }
  // Dialogue runs stay inside their own cell.
  int highlighted = 0;
  for (const auto &e : doc.elements) {
    if (e.kind != ElementKind::kText ||
        (e.tags.count("role") && e.tags.at("role") == "header")) {
      continue;
    }
    const Element *home = nullptr;
    for (const Element *c : cells) {
      if (c->tags.at("from") == e.tags.at("from") &&
          c->tags.at("to") == e.tags.at("to")) {
        home = c;
      }
    }
    ASSERT_NE(home, nullptr) << e.id;
    EXPECT_GE(e.x, home->x - kEps);
    EXPECT_LE(e.x + e.w, home->x + home->w + kEps) << e.id;
    EXPECT_GE(e.y, home->y - kEps);
    EXPECT_LE(e.y + e.h, home->y + home->h + kEps) << e.id;
    highlighted += e.tags.count("phrase") > 0;
  }
  EXPECT_GT(highlighted, 0);
}

TEST(MatrixLayoutTest, BubbleAreaProportional) {
  const auto u =
      corpus::ParseUtteranceTable(testing::Fixture("alice_utterances.tsv"));
  const auto matrix = vizmodel::BuildMatrix(u);
  const LayoutConfig config;
  const auto doc = LayoutMatrixBubbles(matrix, config, BundledMetrics());
  std::vector<double> ratios;
  double largest = 0;
  for (const auto &e : doc.elements) {
    if (e.kind != ElementKind::kBubble) continue;
    EXPECT_NEAR(e.w, e.h, 1e-12);
    const double r = e.w / 2;
    largest = std::max(largest, r);
    ratios.push_back(std::numbers::pi * r * r / std::stoi(e.tags.at("words")));
  }
  ASSERT_EQ(ratios.size(), matrix.cells.size());
  for (double q : ratios) EXPECT_NEAR(q / ratios[0], 1, 1e-9);
  const auto cells = Tagged(doc, "role", "cell");
  ASSERT_FALSE(cells.empty());
  EXPECT_NEAR(largest, std::min(config.bubble_max_radius, cells[0]->w / 2),
              1e-9);
  EXPECT_TRUE(vizmodel::ValidateDocument(doc).empty());
}

TEST(MatrixLayoutTest, BubbleExamples) {
  vizmodel::MatrixModel m;
  m.speakers = {"A", "B"};
  m.cells[{0, 1}] = {4, "a b c d", {}};
  m.cells[{1, 0}] = {1, "e", {}};
  m.cells[{1, 1}] = {0, "", {}};
  const auto doc = LayoutMatrixBubbles(m, LayoutConfig{}, BundledMetrics());
  std::vector<double> radii;
  for (const auto &e : doc.elements) {
    if (e.kind == ElementKind::kBubble) radii.push_back(e.w / 2);
  }
  ASSERT_EQ(radii.size(), 2u);
  EXPECT_NEAR(radii[0] / radii[1], 2, 1e-12);
  EXPECT_NEAR(radii[0], LayoutConfig{}.bubble_max_radius, 1e-12);
  EXPECT_TRUE(LayoutMatrixBubbles({}, LayoutConfig{}, BundledMetrics())
                  .elements.empty());
}

// Bars.

TEST(BarsTest, FixtureRows) {
  const auto songs = corpus::ParseSongs(testing::Fixture("songs.csv"));
  const auto rules =
      repeats::ParseKeywordRules(ReadFile(testing::DataPath("keywords.txt")));
  std::vector<std::vector<repeats::KeywordMatch>> matches;
  for (const auto &s : songs) {
    matches.push_back(repeats::MatchKeywords(BarRowText(s), rules));
  }
  const LayoutConfig config;
  const auto doc = LayoutBarRows(songs, matches, config, BundledMetrics());
  std::vector<const Element *> bars;
  for (const auto &e : doc.elements) {
    if (e.id.rfind("bar-", 0) == 0) bars.push_back(&e);
  }
  ASSERT_EQ(bars.size(), songs.size());
  EXPECT_NEAR(bars.front()->w, config.width - 2 * config.margin, 1e-9);
  EXPECT_EQ(bars.back()->w, 0);
  // Frozen from tests/oracles/keyword_scan.py.
  EXPECT_EQ(Tagged(doc, "keyword", "love").size(), 3u);
  EXPECT_EQ(Tagged(doc, "keyword", "christmas").size(), 3u);
  EXPECT_EQ(Tagged(doc, "keyword", "baby").size(), 4u);
  // The zero seller still has its text.
  const auto last = Tagged(doc, "rank", std::to_string(songs.back().rank));
  bool has_text = false;
  for (const Element *e : last) has_text |= e->kind == ElementKind::kText;
  EXPECT_TRUE(has_text);
  EXPECT_TRUE(vizmodel::ValidateDocument(doc).empty());
}

TEST(BarsTest, ZeroMaxAndMismatch) {
  const auto songs = corpus::ParseSongs(
      "rank,artist,title,sales,lyric_opening\n1,A,x,0,y\n2,B,z,0,w\n");
  const auto doc = LayoutBarRows(songs, {}, LayoutConfig{}, BundledMetrics());
  for (const auto &e : doc.elements) {
    if (e.id.rfind("bar-", 0) == 0) {
      EXPECT_EQ(e.w, 0);
    }
  }
  EXPECT_THROW(LayoutBarRows(songs, {{}}, LayoutConfig{}, BundledMetrics()),
               std::invalid_argument);
}

TEST(BarsTest, KeywordRectUnderWord) {
  corpus::SongRecord song{1, "A", "Love", 10, "la"};
  const std::string text = BarRowText(song);
  const auto matches =
      repeats::MatchKeywords(text, {{"love", "#E00000"}});
  ASSERT_EQ(matches.size(), 1u);
  const auto doc =
      LayoutBarRows({song}, {matches}, LayoutConfig{}, BundledMetrics());
  const auto marks = Tagged(doc, "keyword", "love");
  ASSERT_EQ(marks.size(), 1u);
  const auto rows = Tagged(doc, "title", "Love");
  ASSERT_EQ(rows.size(), 1u);
  const double size = rows[0]->style.size;
  EXPECT_NEAR(marks[0]->x,
              rows[0]->x + Measure(text.substr(0, matches[0].span.begin), size,
                                   BundledMetrics()),
              1e-9);
  EXPECT_NEAR(marks[0]->w, Measure("Love", size, BundledMetrics()), 1e-9);
  EXPECT_EQ(marks[0]->style.fill, "#E00000");
}

// Skim.

TEST(SkimTest, SummariesBehindBody) {
  const auto paragraphs =
      corpus::SplitParagraphs(testing::Fixture("skim.txt"));
  std::vector<std::optional<textproc::ParagraphSummary>> summaries;
  for (const auto &p : paragraphs) {
    summaries.push_back(textproc::SummarizeParagraph(p.text, BundledLexicon()));
  }
  const LayoutConfig config;
  const auto doc = LayoutSkim(paragraphs, summaries, config, BundledMetrics());
  const auto summary_runs = Tagged(doc, "role", "summary");
  ASSERT_EQ(summary_runs.size(), 3u);
  EXPECT_EQ(*summary_runs[0]->text, "Deckard fired");
  EXPECT_EQ(summary_runs[0]->style.fill, config.summary_color);
  EXPECT_GT(summary_runs[0]->style.size,
            Tagged(doc, "role", "body")[0]->style.size);
  // Paint order: each summary precedes its paragraph's body lines.
  for (const Element *s : summary_runs) {
    const std::string index = s->tags.at("paragraph");
    bool summary_seen = false;
    for (const auto &e : doc.elements) {
      if (e.tags.at("paragraph") != index) continue;
      if (e.tags.at("role") == "summary") summary_seen = true;
      if (e.tags.at("role") == "body") {
        EXPECT_TRUE(summary_seen);
      }
    }
  }
  // Body only where there is no summary.
  for (const auto &e : doc.elements) {
    if (e.tags.at("paragraph") == "2") {
      EXPECT_EQ(e.tags.at("role"), "body");
    }
  }
  // All of the body text is there, in order.
  std::string body;
  for (const Element *e : Tagged(doc, "role", "body")) {
    body += *e->text;
    body += ' ';
  }
  std::string expected;
  for (const auto &p : paragraphs) {
    for (char ch : p.text) expected += ch == '\n' ? ' ' : ch;
    expected += ' ';
  }
  auto squash = [](std::string s) {
    std::string out;
    for (char ch : s) {
      if (ch != ' ') out += ch;
    }
    return out;
  };
  EXPECT_EQ(squash(body), squash(expected));
  EXPECT_TRUE(vizmodel::ValidateDocument(doc).empty());
  EXPECT_THROW(LayoutSkim({}, {std::nullopt}, config, BundledMetrics()),
               std::invalid_argument);
}

// Text on path.

TEST(TextPathTest, HorizontalMatchesStraightText) {
  const FontMetrics &m = BundledMetrics();
  const std::string text = "Prices rose";
  const auto glyphs =
      LayoutTextOnPath(text, {{10, 50}, {500, 50}}, 16, "#7F7F7F", m);
  ASSERT_EQ(glyphs.size(), 10u);  // the space draws nothing
  size_t g = 0;
  double x = 10;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != ' ') {
      const Element &e = glyphs[g++];
      EXPECT_EQ(*e.text, text.substr(i, 1));
      EXPECT_NEAR(e.x, x, 1e-9);
      EXPECT_NEAR(e.y, 50 - vizmodel::kAscent * 16, 1e-9);
      EXPECT_FALSE(e.style.rotation);
    }
    x += Measure(text.substr(i, 1), 16, m);
  }
}

TEST(TextPathTest, ShortPathEllipsisOnly) {
  const auto glyphs = LayoutTextOnPath("abc", {{0, 0}, {5, 0}}, 20, "#000000",
                                       UnitMetrics());
  ASSERT_EQ(glyphs.size(), 1u);
  EXPECT_EQ(*glyphs[0].text, std::string(kEllipsis));
}

TEST(TextPathTest, CutWithEllipsis) {
  // 10 px per glyph; 45 px of path holds three glyphs and the ellipsis.
  const auto glyphs = LayoutTextOnPath("abcdefgh", {{0, 0}, {45, 0}}, 20,
                                       "#000000", UnitMetrics());
  ASSERT_EQ(glyphs.size(), 4u);
  EXPECT_EQ(*glyphs[2].text, "c");
  EXPECT_EQ(*glyphs[3].text, std::string(kEllipsis));
  EXPECT_NEAR(glyphs[3].x, 30, 1e-9);
}

TEST(TextPathTest, LShapeCorner) {
  // Glyphs every 10 px; the corner sits at arc length 100.
  const auto glyphs =
      LayoutTextOnPath("abcdefghijklmnop", {{0, 0}, {100, 0}, {100, 100}}, 20,
                       "#000000", UnitMetrics());
  ASSERT_EQ(glyphs.size(), 16u);
  for (size_t i = 0; i < glyphs.size(); ++i) {
    const Element &e = glyphs[i];
    if (i < 10) {
      EXPECT_FALSE(e.style.rotation) << i;
      EXPECT_NEAR(e.x, 10.0 * i, 1e-9);
    } else {
      ASSERT_TRUE(e.style.rotation) << i;
      EXPECT_NEAR(*e.style.rotation, 90, 1e-9);
      EXPECT_NEAR(e.x, 100, 1e-9);
      EXPECT_NEAR(e.y + vizmodel::kAscent * 20, 10.0 * (i - 10), 1e-9);
    }
  }
}

TEST(TextPathTest, Errors) {
  EXPECT_THROW(LayoutTextOnPath("a", {{0, 0}}, 10, "#000000", UnitMetrics()),
               InputError);
  EXPECT_THROW(LayoutTextOnPath("a", {{1, 1}, {1, 1}}, 10, "#000000",
                                UnitMetrics()),
               InputError);
  EXPECT_NEAR(PathLength({{0, 0}, {3, 4}, {3, 10}}), 11, 1e-12);
  const auto p = PointAtLength({{0, 0}, {3, 4}, {3, 10}}, 5);
  EXPECT_NEAR(p.point.x, 3, 1e-12);
  EXPECT_NEAR(p.angle, 90, 1e-12);
}

// Determinism.

TEST(LayoutDeterminismTest, SameInputSameModel) {
  const auto root = SampleHierarchy();
  const LayoutConfig config;
  const FontMetrics &m = BundledMetrics();
  EXPECT_EQ(LayoutListing(root, config, m), LayoutListing(root, config, m));
  const auto u =
      corpus::ParseUtteranceTable(testing::Fixture("alice_utterances.tsv"));
  const auto matrix = vizmodel::BuildMatrix(u);
  EXPECT_EQ(LayoutMatrixText(matrix, config, m),
            LayoutMatrixText(matrix, config, m));
  EXPECT_EQ(LayoutMatrixBubbles(matrix, config, m),
            LayoutMatrixBubbles(matrix, config, m));
}

}  // namespace
}  // namespace littext::layout
