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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "boost/property_tree/ptree.hpp"
#include "boost/property_tree/xml_parser.hpp"
#include "gtest/gtest.h"
#include "littext/corpus/dialogue.h"
#include "littext/corpus/inquests.h"
#include "littext/corpus/paragraphs.h"
#include "littext/corpus/songs.h"
#include "littext/layout/bars.h"
#include "littext/layout/config.h"
#include "littext/layout/listing.h"
#include "littext/layout/matrix_layout.h"
#include "littext/layout/skim.h"
#include "littext/layout/text_path.h"
#include "littext/layout/treemap.h"
#include "littext/render/format.h"
#include "littext/render/scene.h"
#include "littext/render/svg.h"
#include "littext/repeats/keywords.h"
#include "littext/repeats/phrases.h"
#include "littext/textproc/summary.h"
#include "littext/textproc/svo.h"
#include "littext/vizmodel/hierarchy.h"
#include "littext/vizmodel/matrix.h"
#include "test_util.h"

namespace littext::render {
namespace {

using littext::testing::BundledLexicon;
using littext::testing::BundledMetrics;
using vizmodel::DocumentModel;
using vizmodel::Element;
using vizmodel::ElementKind;

// One of every layout over the fixtures.
std::vector<DocumentModel> FixtureModels() {
  const layout::LayoutConfig config;
  const auto &metrics = BundledMetrics();
  std::vector<DocumentModel> models;

  const auto table = corpus::ParseInquests(
      ReadFile(testing::DataPath("sample/inquests.tsv")));
  const auto root = vizmodel::BuildHierarchy(
      textproc::ExtractAll(table.records, BundledLexicon()).records);
  models.push_back(layout::LayoutTreemap(root, config, metrics));
  layout::LayoutConfig big = config;
  big.width = 3840;
  big.height = 2160;
  models.push_back(layout::LayoutListing(root, big, metrics));

  const auto u =
      corpus::ParseUtteranceTable(testing::Fixture("alice_utterances.tsv"));
  auto phrases = repeats::DetectRepeats(u, BundledLexicon());
  repeats::AssignPhraseColors(phrases, config.palette);
  const auto matrix = vizmodel::BuildMatrix(u, phrases);
  models.push_back(layout::LayoutMatrixBubbles(matrix, config, metrics));
  models.push_back(layout::LayoutMatrixText(matrix, config, metrics));

  const auto songs = corpus::ParseSongs(testing::Fixture("songs.csv"));
  const auto rules =
      repeats::ParseKeywordRules(ReadFile(testing::DataPath("keywords.txt")));
  std::vector<std::vector<repeats::KeywordMatch>> matches;
  for (const auto &s : songs) {
    matches.push_back(repeats::MatchKeywords(layout::BarRowText(s), rules));
  }
  models.push_back(layout::LayoutBarRows(songs, matches, config, metrics));

  const auto paragraphs =
      corpus::SplitParagraphs(testing::Fixture("skim.txt"));
  std::vector<std::optional<textproc::ParagraphSummary>> summaries;
  for (const auto &p : paragraphs) {
    summaries.push_back(textproc::SummarizeParagraph(p.text, BundledLexicon()));
  }
  models.push_back(layout::LayoutSkim(paragraphs, summaries, config, metrics));

  DocumentModel path;
  path.width = 400;
  path.height = 300;
  const std::vector<vizmodel::Point> line = {{20, 250}, {200, 60}, {380, 200}};
  Element &series = path.Add(ElementKind::kPath, "series");
  series.points = line;
  series.w = 360;
  series.h = 190;
  series.x = 20;
  series.y = 60;
  for (auto &g : layout::LayoutTextOnPath("Prices rose & fell <sharply>", line,
                                          16, "#7F7F7F", metrics)) {
    path.Append(std::move(g), "glyph");
  }
  models.push_back(std::move(path));
  return models;
}

DocumentModel GoldenModel() {
  DocumentModel m;
  m.width = 200;
  m.height = 60;
  Element &e = m.Add(ElementKind::kText, "person");
  e.x = 10;
  e.y = 20;
  e.w = 73.5;
  e.h = 10.8;
  e.text = "Mary Roberts";
  e.style.size = 9;
  e.style.fill = "#7030A0";
  e.style.background = "#F8E0E0";
  e.tags = {{"level", "person"}, {"verdict", "Suicide"}, {"gender", "Female"}};
  return m;
}

void ExpectWellFormed(const std::string &svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  EXPECT_NO_THROW(boost::property_tree::read_xml(in, tree)) << svg.substr(0, 300);
}

TEST(FormatTest, Numbers) {
  EXPECT_EQ(FormatNumber(0), "0.000");
  EXPECT_EQ(FormatNumber(-0.0), "0.000");
  EXPECT_EQ(FormatNumber(-0.0004), "0.000");
  EXPECT_EQ(FormatNumber(1.2345), "1.235");
  EXPECT_EQ(FormatNumber(-12.5), "-12.500");
  EXPECT_EQ(FormatNumber(3840), "3840.000");
}

TEST(FormatTest, Scrub) {
  EXPECT_EQ(ScrubUtf8("ok \xC3\xA9\t\n"), "ok \xC3\xA9\t\n");
  EXPECT_EQ(ScrubUtf8("a\xFF"), "a\xEF\xBF\xBD");
  EXPECT_EQ(ScrubUtf8(std::string("a\0b", 3)), "a\xEF\xBF\xBD" "b");
  EXPECT_EQ(ScrubUtf8("\x7F"), "\xEF\xBF\xBD");
}

TEST(SvgTest, EmptyModel) {
  DocumentModel m;
  m.width = 10;
  m.height = 20;
  const std::string svg = ToSvg(m);
  ExpectWellFormed(svg);
  EXPECT_NE(svg.find("<svg "), std::string::npos);
  EXPECT_NE(svg.find("width=\"10.000\""), std::string::npos);
  EXPECT_NE(svg.find("<g "), std::string::npos);
  EXPECT_EQ(svg.find("<text"), std::string::npos);
  EXPECT_EQ(svg.find("<rect"), std::string::npos);
}

TEST(SvgTest, GoldenSingleText) {
  const std::string svg = ToSvg(GoldenModel());
  const std::string path =
      std::string(LITTEXT_GOLDEN_DIR) + "/single_text.svg";
  if (std::getenv("LITTEXT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << svg;
  }
  EXPECT_EQ(svg, ReadFile(path));
}

TEST(SvgTest, EscapesAndScrubs) {
  DocumentModel m;
  m.width = 100;
  m.height = 100;
  Element &e = m.Add(ElementKind::kText, "t");
  e.text = "<b>&\"'\x01\xFF";
  e.w = 10;
  e.h = 10;
  e.style.size = 8;
  e.tags = {{"odd key!", "a\"b<"}};
  const std::string svg = ToSvg(m);
  ExpectWellFormed(svg);
  EXPECT_NE(svg.find("&lt;b&gt;&amp;"), std::string::npos);
  EXPECT_EQ(svg.find("<b>"), std::string::npos);
}

TEST(SvgTest, FixturesWellFormedAndDeterministic) {
  for (const auto &model : FixtureModels()) {
    const std::string svg = ToSvg(model);
    ExpectWellFormed(svg);
    EXPECT_EQ(svg, ToSvg(model));
    size_t marks = 0;
    for (const char *tag : {"<rect ", "<text ", "<circle ", "<polyline "}) {
      for (size_t p = svg.find(tag); p != std::string::npos;
           p = svg.find(tag, p + 1)) {
        ++marks;
      }
    }
    size_t backgrounds = 0;
    for (const auto &e : model.elements) {
      backgrounds += e.kind == ElementKind::kText && e.style.background;
    }
    EXPECT_EQ(marks, model.elements.size() + backgrounds);
  }
}

TEST(SvgTest, TextGeometry) {
  const std::string svg = ToSvg(GoldenModel());
  // Baseline at y + 0.8 * size.
  EXPECT_NE(svg.find("y=\"27.200\""), std::string::npos);
  EXPECT_NE(svg.find("textLength=\"73.500\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"person-0-bg\""), std::string::npos);
  EXPECT_NE(svg.find("data-verdict=\"Suicide\""), std::string::npos);
}

TEST(SceneTest, RoundTripFixtures) {
  for (const auto &model : FixtureModels()) {
    const std::string scene = ToScene(model);
    EXPECT_EQ(scene, ToScene(model));
    const DocumentModel back = FromScene(scene);
    EXPECT_EQ(back, model);
    EXPECT_EQ(ToScene(back), scene);
  }
}

TEST(SceneTest, EqualModelsEqualBytes) {
  DocumentModel a = GoldenModel();
  DocumentModel b = GoldenModel();
  b.elements[0].x += 1e-7;
  EXPECT_EQ(a, b);
  EXPECT_EQ(ToScene(a), ToScene(b));
  b.elements[0].x += 0.01;
  EXPECT_FALSE(a == b);
  EXPECT_NE(ToScene(a), ToScene(b));
}

TEST(SceneTest, Layout) {
  const std::string scene = ToScene(GoldenModel());
  EXPECT_EQ(scene.rfind("{\"version\":1,\"canvas\":{\"w\":200.000,\"h\":60.000}"
                        ",\"elements\":[",
                        0),
            0u);
  EXPECT_NE(scene.find("\"kind\":\"text\""), std::string::npos);
  EXPECT_EQ(scene.find("null"), std::string::npos);
  EXPECT_EQ(scene.find("\"points\""), std::string::npos);
  EXPECT_EQ(scene.find("\"stroke\""), std::string::npos);
  DocumentModel empty;
  EXPECT_EQ(FromScene(ToScene(empty)), empty);
}

TEST(SceneTest, VersionMismatch) {
  std::string scene = ToScene(GoldenModel());
  scene.replace(scene.find("\"version\":1"), 11, "\"version\":999");
  try {
    FromScene(scene);
    FAIL();
  } catch (const UnsupportedVersionError &e) {
    EXPECT_EQ(e.version(), 999);
  }
}

TEST(SceneTest, Malformed) {
  EXPECT_THROW(FromScene(""), InputError);
  EXPECT_THROW(FromScene("{\"version\":1}"), InputError);
  EXPECT_THROW(FromScene(R"({"version":1,"canvas":{"w":1,"h":1},
      "elements":[{"id":"a","kind":"blob","x":0,"y":0,"w":0,"h":0,
      "style":{"weight":"normal","caps":false,"size":0,"fill":"#000000"},
      "tags":{}}]})"),
               InputError);
  EXPECT_THROW(FromScene(R"({"version":1,"canvas":{"w":1,"h":1},
      "elements":[],"extra":true})"),
               InputError);
}

}  // namespace
}  // namespace littext::render
