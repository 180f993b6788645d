// Copyright 2026 The Autolabel Eval Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "autolabel/formats/coco.h"
#include "autolabel/formats/manifest.h"
#include "autolabel/formats/voc.h"
#include "autolabel/formats/wire.h"
#include "autolabel/formats/yolo.h"
#include "json.hpp"
#include "test_support.h"

namespace autolabel::formats {
namespace {

using autolabel::testing::Gen;
using autolabel::testing::ReadText;
using autolabel::testing::TempDir;
using autolabel::testing::WriteText;
using nlohmann::json;

template <typename Fn>
Error ErrorOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::kIo, "");
}

ParsedDataset Coco(const json& doc, IngestOptions options = {}) {
  std::istringstream in(doc.dump());
  return ParseCoco(in, options, "fixture.json");
}

json CocoDoc() {
  return {
      {"images",
       {{{"id", 1}, {"width", 100}, {"height", 50}, {"file_name", "a.jpg"}},
        {{"id", 2}, {"width", 64}, {"height", 64}, {"file_name", "b.jpg"}}}},
      {"categories",
       {{{"id", 5}, {"name", "dog"}}, {{"id", 2}, {"name", "cat"}}}},
      {"annotations",
       {{{"id", 10}, {"image_id", 1}, {"category_id", 2},
         {"bbox", {0, 0, 4, 2}}, {"iscrowd", 0}},
        {{"id", 11}, {"image_id", 1}, {"category_id", 5},
         {"bbox", {10, 10, 20, 5}}, {"iscrowd", 0}}}}};
}

TEST(CocoTest, BoxToCenterFormat) {
  const auto parsed = Coco(CocoDoc());
  const auto labels = parsed.labels.LabelsFor("1");
  ASSERT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels[0].box, (BoundingBox{2, 1, 4, 2}));
  EXPECT_EQ(parsed.labels.image_count(), 2u);
  EXPECT_EQ(parsed.labels.LabelsFor("2").size(), 0u);
}

TEST(CocoTest, CategoriesRemappedByAscendingId) {
  const auto parsed = Coco(CocoDoc());
  const auto& vocab = parsed.labels.vocabulary();
  ASSERT_EQ(vocab.size(), 2u);
  EXPECT_EQ(vocab.name(0), "cat");
  EXPECT_EQ(vocab.source_id(0), 2);
  EXPECT_EQ(vocab.name(1), "dog");
  EXPECT_EQ(vocab.source_id(1), 5);
  const auto labels = parsed.labels.LabelsFor("1");
  EXPECT_EQ(labels[0].class_index, 0);
  EXPECT_EQ(labels[1].class_index, 1);
}

TEST(CocoTest, CrowdExcluded) {
  json doc = CocoDoc();
  doc["annotations"][1]["iscrowd"] = 1;
  const auto parsed = Coco(doc);
  EXPECT_EQ(parsed.labels.label_count(), 1u);
  EXPECT_EQ(parsed.stats.crowd_dropped, 1u);
  EXPECT_EQ(parsed.stats.raw_annotations, 2u);

  IngestOptions keep;
  keep.exclude_crowd = false;
  EXPECT_EQ(Coco(doc, keep).labels.label_count(), 2u);
}

TEST(CocoTest, BooleanCrowdFlag) {
  json doc = CocoDoc();
  doc["annotations"][0]["iscrowd"] = true;
  EXPECT_EQ(Coco(doc).stats.crowd_dropped, 1u);
}

TEST(CocoTest, SegmentationHull) {
  json doc = CocoDoc();
  doc["annotations"][0]["bbox"] = {1, 1, 1, 1};
  doc["annotations"][0]["segmentation"] = {{0, 0, 4, 0, 4, 2}};
  const auto parsed = Coco(doc);
  EXPECT_EQ(parsed.labels.LabelsFor("1")[0].box, (BoundingBox{2, 1, 4, 2}));
  EXPECT_EQ(parsed.stats.segmentations_converted, 1u);

  IngestOptions raw;
  raw.convert_segmentation = false;
  EXPECT_EQ(Coco(doc, raw).labels.LabelsFor("1")[0].box,
            (BoundingBox{1.5, 1.5, 1, 1}));
}

TEST(CocoTest, RleSegmentationKeepsBbox) {
  json doc = CocoDoc();
  doc["annotations"][0]["segmentation"] = {{"counts", "abc"},
                                           {"size", {50, 100}}};
  const auto parsed = Coco(doc);
  EXPECT_EQ(parsed.labels.LabelsFor("1")[0].box, (BoundingBox{2, 1, 4, 2}));
  EXPECT_EQ(parsed.stats.segmentations_converted, 0u);
}

TEST(CocoTest, RawCountPreservedWithoutAccommodations) {
  json doc = CocoDoc();
  doc["annotations"][0]["iscrowd"] = 1;
  doc["annotations"][1]["segmentation"] = {{10, 10, 30, 10, 30, 15}};
  IngestOptions options;
  options.exclude_crowd = false;
  options.convert_segmentation = false;
  const auto parsed = Coco(doc, options);
  EXPECT_EQ(parsed.labels.label_count(), doc["annotations"].size());
}

TEST(CocoTest, MalformedJsonReportsByteOffset) {
  std::istringstream in(R"({"images": [}, )");
  const Error e = ErrorOf([&] { ParseCoco(in, {}, "bad.json"); });
  EXPECT_EQ(e.code(), ErrorCode::kParse);
  EXPECT_NE(std::string(e.what()).find("byte 13"), std::string::npos)
      << e.what();
}

TEST(CocoTest, ReferentialErrorsListIds) {
  json doc = CocoDoc();
  doc["annotations"][0]["image_id"] = 99;
  doc["annotations"][1]["category_id"] = 77;
  const Error e = ErrorOf([&] { Coco(doc); });
  EXPECT_EQ(e.code(), ErrorCode::kReferentialIntegrity);
  const std::string what = e.what();
  EXPECT_NE(what.find("99"), std::string::npos) << what;
  EXPECT_NE(what.find("77"), std::string::npos) << what;
}

TEST(CocoTest, MissingFieldIsFormatError) {
  json doc = CocoDoc();
  doc.erase("categories");
  EXPECT_EQ(ErrorOf([&] { Coco(doc); }).code(), ErrorCode::kFormat);
  json bad_box = CocoDoc();
  bad_box["annotations"][0]["bbox"] = {0, 0, 4};
  EXPECT_EQ(ErrorOf([&] { Coco(bad_box); }).code(), ErrorCode::kFormat);
}

TEST(CocoTest, ScoreBecomesConfidence) {
  json doc = CocoDoc();
  doc["annotations"][0]["score"] = 0.75;
  EXPECT_EQ(Coco(doc).labels.LabelsFor("1")[0].confidence, 0.75);
}

TEST(CocoTest, StringImageIds) {
  json doc = CocoDoc();
  doc["images"][0]["id"] = "000123";
  doc["annotations"][0]["image_id"] = "000123";
  doc["annotations"][1]["image_id"] = "000123";
  const auto parsed = Coco(doc);
  EXPECT_EQ(parsed.labels.LabelsFor("000123").size(), 2u);
  std::ostringstream out;
  WriteCoco(parsed.labels, out);
  EXPECT_EQ(json::parse(out.str())["images"][0]["id"], "000123");
}

TEST(CocoTest, RoundTripPreservesBoxesAndCategories) {
  Gen gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const json doc = autolabel::testing::RandomCocoDocument(gen);
    const auto first = Coco(doc);
    std::ostringstream out;
    WriteCoco(first.labels, out);
    const json written = json::parse(out.str());
    const auto second = Coco(written);
    std::string why;
    EXPECT_TRUE(EquivalentLabelSets(first.labels, second.labels, 1e-6, &why))
        << why;
    for (std::size_t c = 0; c < first.labels.vocabulary().size(); ++c) {
      EXPECT_EQ(first.labels.vocabulary().source_id(static_cast<int>(c)),
                second.labels.vocabulary().source_id(static_cast<int>(c)));
    }
    // Raw bbox values survive exactly for every retained annotation.
    std::multiset<std::vector<double>> before, after;
    for (const auto& a : doc["annotations"]) {
      if (a["iscrowd"] == 0) before.insert(a["bbox"].get<std::vector<double>>());
    }
    for (const auto& a : written["annotations"]) {
      after.insert(a["bbox"].get<std::vector<double>>());
    }
    ASSERT_EQ(before.size(), after.size());
    auto b = before.begin();
    for (auto a = after.begin(); a != after.end(); ++a, ++b) {
      for (int k = 0; k < 4; ++k) EXPECT_NEAR((*a)[k], (*b)[k], 1e-6);
    }
  }
}

TEST(CocoTest, AnnotationOrderDoesNotMatter) {
  Gen gen(32);
  for (int trial = 0; trial < 30; ++trial) {
    const json doc = autolabel::testing::RandomCocoDocument(gen);
    json shuffled = doc;
    std::shuffle(shuffled["annotations"].begin(), shuffled["annotations"].end(),
                 gen.engine());
    std::shuffle(shuffled["images"].begin(), shuffled["images"].end(),
                 gen.engine());
    std::string why;
    EXPECT_TRUE(EquivalentLabelSets(Coco(doc).labels, Coco(shuffled).labels,
                                    0.0, &why))
        << why;
  }
}

std::string VocXml(const std::string& objects, bool with_size = true) {
  std::string xml = "<annotation><filename>x.jpg</filename>";
  if (with_size) {
    xml += "<size><width>100</width><height>80</height><depth>3</depth></size>";
  }
  return xml + objects + "</annotation>";
}

std::string VocObjectXml(const std::string& name, int xmin, int ymin, int xmax,
                         int ymax, bool difficult = false) {
  return fmt::format(
      "<object><name>{}</name><difficult>{}</difficult><bndbox><xmin>{}</xmin>"
      "<ymin>{}</ymin><xmax>{}</xmax><ymax>{}</ymax></bndbox></object>",
      name, difficult ? 1 : 0, xmin, ymin, xmax, ymax);
}

TEST(VocTest, CornersToCenterDefaultConvention) {
  EXPECT_EQ(VocCornersToBox({1, 1, 3, 3}, false), (BoundingBox{2, 2, 2, 2}));
  EXPECT_EQ(BoxToVocCorners({2, 2, 2, 2}, false), (Corners{1, 1, 3, 3}));
}

TEST(VocTest, LegacyConventionAddsOnePixel) {
  EXPECT_EQ(VocCornersToBox({1, 1, 3, 3}, true), (BoundingBox{1.5, 1.5, 3, 3}));
  EXPECT_EQ(BoxToVocCorners({1.5, 1.5, 3, 3}, true), (Corners{1, 1, 3, 3}));
}

TEST(VocTest, ParsesDocument) {
  const auto doc = ParseVocXml(
      VocXml(VocObjectXml("sofa", 1, 1, 3, 3) +
             VocObjectXml("Dog", 10, 20, 30, 40, true)),
      "000005");
  EXPECT_EQ(doc.record.image_id, "000005");
  EXPECT_EQ(doc.record.width, 100);
  EXPECT_EQ(doc.record.height, 80);
  ASSERT_EQ(doc.objects.size(), 2u);
  EXPECT_EQ(doc.objects[0].corners, (Corners{1, 1, 3, 3}));
  EXPECT_TRUE(doc.objects[1].difficult);
}

TEST(VocTest, EmptyObjectList) {
  const auto doc = ParseVocXml(VocXml(""), "e");
  EXPECT_TRUE(doc.objects.empty());
}

TEST(VocTest, MissingSizeIsFormatError) {
  EXPECT_EQ(ErrorOf([] { ParseVocXml(VocXml("", false), "x"); }).code(),
            ErrorCode::kFormat);
}

TEST(VocTest, MalformedXmlIsParseError) {
  EXPECT_EQ(ErrorOf([] { ParseVocXml("<annotation><size>", "x"); }).code(),
            ErrorCode::kParse);
}

TEST(VocTest, SofaMapsToStandardIndex) {
  TempDir dir;
  WriteText(dir / "Annotations/a.xml", VocXml(VocObjectXml("sofa", 1, 1, 3, 3)));
  WriteText(dir / "Annotations/b.xml", VocXml(""));
  DatasetManifest m;
  m.format = DatasetFormat::kVoc;
  m.root = dir.path();
  m.vocabulary = ClassVocabulary(VocClassNames());
  const auto parsed = ParseVocDataset(m);
  const auto sofa = parsed.labels.vocabulary().Find("sofa");
  ASSERT_TRUE(sofa.has_value());
  EXPECT_EQ(*sofa, 17);
  EXPECT_EQ(parsed.labels.LabelsFor("a")[0].class_index, 17);
  EXPECT_EQ(parsed.labels.LabelsFor("a")[0].box, (BoundingBox{2, 2, 2, 2}));
  EXPECT_EQ(parsed.labels.LabelsFor("b").size(), 0u);
  EXPECT_EQ(parsed.labels.image_count(), 2u);
}

TEST(VocTest, UnknownClassStrictOrExtend) {
  TempDir dir;
  WriteText(dir / "a.xml", VocXml(VocObjectXml("unicorn", 1, 1, 3, 3)));
  DatasetManifest m;
  m.format = DatasetFormat::kVoc;
  m.root = dir.path();
  m.vocabulary = ClassVocabulary(VocClassNames());
  const auto extended = ParseVocDataset(m);
  EXPECT_EQ(extended.labels.vocabulary().size(), 21u);
  EXPECT_EQ(extended.labels.vocabulary().name(20), "unicorn");
  m.options.strict_vocab = true;
  const Error e = ErrorOf([&] { ParseVocDataset(m); });
  EXPECT_EQ(e.code(), ErrorCode::kUnknownClass);
  EXPECT_NE(std::string(e.what()).find("unicorn"), std::string::npos);
}

TEST(VocTest, SplitSelectsListedFiles) {
  TempDir dir;
  WriteText(dir / "Annotations/a.xml", VocXml(VocObjectXml("cat", 1, 1, 3, 3)));
  WriteText(dir / "Annotations/b.xml", VocXml(VocObjectXml("dog", 1, 1, 3, 3)));
  WriteText(dir / "ImageSets/Main/train.txt", "b\n");
  DatasetManifest m;
  m.format = DatasetFormat::kVoc;
  m.root = dir.path();
  m.split = "train";
  const auto parsed = ParseVocDataset(m);
  EXPECT_EQ(parsed.labels.image_count(), 1u);
  EXPECT_NE(parsed.labels.FindImage("b"), nullptr);
}

LabelSet RandomVocLabels(Gen& gen, bool integer_corners) {
  LabelSet set{ClassVocabulary(VocClassNames())};
  for (int i = 0, n = gen.Int(1, 10); i < n; ++i) {
    const int w = gen.Int(50, 500);
    const int h = gen.Int(50, 500);
    const std::string id = fmt::format("{:06}", i);
    set.AddImage({id, w, h, id + ".jpg"});
    for (int k = 0, n = gen.Int(0, 6); k < n; ++k) {
      ObjectLabel l;
      if (integer_corners) {
        const int x0 = gen.Int(1, w - 2);
        const int y0 = gen.Int(1, h - 2);
        l.box = VocCornersToBox(
            {double(x0), double(y0), double(gen.Int(x0, w)), double(gen.Int(y0, h))},
            false);
      } else {
        l.box = gen.Box(w, h, 0.5);
      }
      l.class_index = gen.Int(0, 19);
      l.difficult = gen.Chance(0.2);
      set.AddLabel(id, l);
    }
  }
  return set;
}

TEST(VocTest, RoundTripPreservesCorners) {
  Gen gen(41);
  for (bool legacy : {false, true}) {
    for (int trial = 0; trial < 15; ++trial) {
      TempDir dir;
      const LabelSet original = RandomVocLabels(gen, trial % 2 == 0);
      WriteVocDataset(original, dir.path(), legacy);
      DatasetManifest m;
      m.format = DatasetFormat::kVoc;
      m.root = dir.path();
      m.options.voc_legacy_coords = legacy;
      const auto back = ParseVocDataset(m);
      std::string why;
      EXPECT_TRUE(EquivalentLabelSets(original, back.labels, 1e-6, &why))
          << why;
    }
  }
}

TEST(VocTest, ConcurrentParseMatchesSingleFileParses) {
  Gen gen(42);
  TempDir dir;
  const LabelSet original = RandomVocLabels(gen, true);
  WriteVocDataset(original, dir.path());
  DatasetManifest m;
  m.format = DatasetFormat::kVoc;
  m.root = dir.path();
  const auto merged = ParseVocDataset(m);
  for (const auto& [id, entry] : original.images()) {
    const auto doc = ParseVocXml(
        ReadText(dir / ("Annotations/" + id + ".xml")), id);
    ASSERT_EQ(doc.objects.size(), merged.labels.LabelsFor(id).size());
    for (std::size_t i = 0; i < doc.objects.size(); ++i) {
      EXPECT_EQ(VocCornersToBox(doc.objects[i].corners, false),
                merged.labels.LabelsFor(id)[i].box);
    }
  }
}

TEST(YoloTest, LineFormatting) {
  const ImageRecord image{"im", 100, 50, ""};
  const ObjectLabel label{{50, 25, 100, 50}, 0, {}, false};
  EXPECT_EQ(FormatYoloLine(label, image), "0 0.500000 0.500000 1.000000 1.000000");
}

TEST(YoloTest, LineRangeCheckNamesLocation) {
  const ImageRecord image{"im", 100, 50, ""};
  const Error e = ErrorOf(
      [&] { ParseYoloLine("0 0.5 1.2 0.1 0.1", image, "labels/im.txt:3"); });
  EXPECT_EQ(e.code(), ErrorCode::kRange);
  EXPECT_NE(std::string(e.what()).find("labels/im.txt:3"), std::string::npos);
  EXPECT_NO_THROW(ParseYoloLine("0 0.5 1.0001 0.1 0.1", image, "x"));
  EXPECT_EQ(ErrorOf([&] { ParseYoloLine("0 0.5 -0.01 0.1 0.1", image, "x"); })
                .code(),
            ErrorCode::kRange);
  EXPECT_EQ(ErrorOf([&] { ParseYoloLine("0 0.5 0.5", image, "x"); }).code(),
            ErrorCode::kFormat);
}

TEST(YoloTest, OptionalConfidenceColumn) {
  const ImageRecord image{"im", 100, 50, ""};
  const auto label = ParseYoloLine("2 0.5 0.5 0.2 0.2 0.875", image, "x");
  EXPECT_EQ(label.class_index, 2);
  EXPECT_EQ(label.confidence, 0.875);
  EXPECT_EQ(label.box, (BoundingBox{50, 25, 20, 10}));
}

TEST(YoloTest, EmptyAndMissingLabelFiles) {
  TempDir dir;
  WriteText(dir / "classes.txt", "cat\ndog\n");
  WriteText(dir / "images.csv",
            "image_id,file_name,width,height,label_file\n"
            "a,a.jpg,100,50,a.txt\nb,b.jpg,100,50,b.txt\n");
  WriteText(dir / "labels/a.txt", "");
  DatasetManifest m;
  m.format = DatasetFormat::kYolo;
  m.root = dir.path();
  const auto parsed = ParseYoloDataset(m);
  EXPECT_EQ(parsed.labels.image_count(), 2u);
  EXPECT_EQ(parsed.labels.label_count(), 0u);
}

TEST(YoloTest, RoundTripAtThousandPixelScale) {
  // Boxes on a 0.01 px lattice: the 6-decimal text of a 1000 px frame
  // resolves 0.001 px, so these are recovered to well inside 1e-4 px.
  Gen gen(51);
  for (int trial = 0; trial < 20; ++trial) {
    LabelSet set(ClassVocabulary({"a", "b", "c"}));
    for (int i = 0; i < 5; ++i) {
      const std::string id = fmt::format("img{}", i);
      set.AddImage({id, 1000, 1000, id + ".png"});
      for (int k = 0, n = gen.Int(0, 8); k < n; ++k) {
        set.AddLabel(id, {gen.GridBox(1000, 1000, 0.01), gen.Int(0, 2), {}, false});
      }
    }
    TempDir dir;
    WriteYoloDataset(set, dir.path());
    DatasetManifest m;
    m.format = DatasetFormat::kYolo;
    m.root = dir.path();
    const auto back = ParseYoloDataset(m);
    std::string why;
    EXPECT_TRUE(EquivalentLabelSets(set, back.labels, 1e-4, &why)) << why;
  }
}

TEST(YoloTest, WriterEmitsOneFilePerImage) {
  LabelSet set(ClassVocabulary({"a"}));
  set.AddImage({"x", 10, 10, "dir/x.jpg"});
  set.AddImage({"y", 10, 10, ""});
  set.AddLabel("x", {{5, 5, 2, 2}, 0, 0.5, false});
  TempDir dir;
  WriteYoloDataset(set, dir.path());
  EXPECT_TRUE(std::filesystem::exists(dir / "labels/dir_x.txt"));
  EXPECT_TRUE(std::filesystem::exists(dir / "labels/y.txt"));
  EXPECT_EQ(ReadText(dir / "classes.txt"), "a\n");
  EXPECT_EQ(ReadText(dir / "labels/dir_x.txt"),
            "0 0.500000 0.500000 0.200000 0.200000\n");
}

WireDataset Wire(const std::string& text,
                 std::optional<ClassVocabulary> vocab = ClassVocabulary({"a", "b"})) {
  std::istringstream in(text);
  return ParseWire(in, vocab, "stream.jsonl");
}

TEST(WireTest, EmptyLabelList) {
  const auto wire = Wire(R"({"image_id":"x","width":10,"height":10,"labels":[]})");
  EXPECT_EQ(wire.dataset.labels.image_count(), 1u);
  EXPECT_EQ(wire.dataset.labels.label_count(), 0u);
}

TEST(WireTest, ConfidenceClosedInterval) {
  const auto wire = Wire(
      R"({"image_id":"x","width":10,"height":10,"labels":[{"class_index":1,"cx":5,"cy":5,"w":2,"h":2,"confidence":1.0},{"class_index":0,"cx":5,"cy":5,"w":2,"h":2,"confidence":0.0}]})");
  EXPECT_EQ(wire.dataset.labels.label_count(), 2u);
  const Error e = ErrorOf([] {
    Wire(R"({"image_id":"x","width":10,"height":10,"labels":[{"class_index":1,"cx":5,"cy":5,"w":2,"h":2,"confidence":1.01}]})");
  });
  EXPECT_EQ(e.code(), ErrorCode::kRange);
}

TEST(WireTest, DuplicateImage) {
  const std::string rec = R"({"image_id":"x","width":10,"height":10,"labels":[]})";
  EXPECT_EQ(ErrorOf([&] { Wire(rec + "\n" + rec + "\n"); }).code(),
            ErrorCode::kDuplicateRecord);
}

TEST(WireTest, ConfidenceMandatory) {
  EXPECT_EQ(ErrorOf([] {
              Wire(R"({"image_id":"x","width":10,"height":10,"labels":[{"class_index":1,"cx":5,"cy":5,"w":2,"h":2}]})");
            }).code(),
            ErrorCode::kFormat);
}

TEST(WireTest, UnknownClassIndex) {
  EXPECT_EQ(ErrorOf([] {
              Wire(R"({"image_id":"x","width":10,"height":10,"labels":[{"class_index":2,"cx":5,"cy":5,"w":2,"h":2,"confidence":0.5}]})");
            }).code(),
            ErrorCode::kUnknownClass);
}

TEST(WireTest, MalformedLineNamesLine) {
  const Error e = ErrorOf([] {
    Wire("{\"image_id\":\"x\",\"width\":10,\"height\":10,\"labels\":[]}\n{oops\n");
  });
  EXPECT_EQ(e.code(), ErrorCode::kParse);
  EXPECT_NE(std::string(e.what()).find("stream.jsonl:2"), std::string::npos)
      << e.what();
}

TEST(WireTest, HeaderSuppliesOrChecksVocabulary) {
  const std::string text =
      R"({"kind":"header","model":"m1","classes":["a","b"],"settings":{"nms":0.7}})"
      "\n"
      R"({"image_id":"x","width":10,"height":10,"labels":[]})";
  const auto wire = Wire(text, std::nullopt);
  ASSERT_TRUE(wire.header.has_value());
  EXPECT_EQ(wire.header->model, "m1");
  EXPECT_EQ(wire.header->settings["nms"], 0.7);
  EXPECT_EQ(wire.dataset.labels.vocabulary().names(),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(ErrorOf([&] { Wire(text, ClassVocabulary({"a", "c"})); }).code(),
            ErrorCode::kVocabularyMismatch);
  EXPECT_EQ(ErrorOf([] {
              Wire(R"({"image_id":"x","width":10,"height":10,"labels":[]})",
                   std::nullopt);
            }).code(),
            ErrorCode::kFormat);
}

TEST(WireTest, RecordOrderDoesNotMatterAndRoundTrips) {
  Gen gen(61);
  auto pair = gen.Datasets(6, 3, 5, 3);
  std::ostringstream out;
  WriteWire(pair.predictions, out, "model-x");
  std::vector<std::string> lines;
  std::istringstream split(out.str());
  for (std::string l; std::getline(split, l);) lines.push_back(l);
  std::shuffle(lines.begin() + 1, lines.end(), gen.engine());
  std::string shuffled;
  for (const auto& l : lines) shuffled += l + "\n";
  const auto wire = Wire(shuffled, std::nullopt);
  EXPECT_EQ(wire.header->model, "model-x");
  std::string why;
  EXPECT_TRUE(EquivalentLabelSets(pair.predictions, wire.dataset.labels, 0.0,
                                  &why))
      << why;
}

TEST(ManifestTest, FormatTags) {
  EXPECT_EQ(ParseDatasetFormat("coco"), DatasetFormat::kCoco);
  EXPECT_EQ(ParseDatasetFormat("voc"), DatasetFormat::kVoc);
  EXPECT_EQ(ParseDatasetFormat("yolo"), DatasetFormat::kYolo);
  EXPECT_EQ(ParseDatasetFormat("wire"), DatasetFormat::kWire);
  EXPECT_FALSE(ParseDatasetFormat("tfrecord").has_value());
}

TEST(ManifestTest, MissingRootIsIoError) {
  DatasetManifest m;
  m.format = DatasetFormat::kCoco;
  m.root = "/nonexistent/instances.json";
  EXPECT_EQ(ErrorOf([&] { LoadDataset(m); }).code(), ErrorCode::kIo);
}

TEST(ManifestTest, CocoRootResolvesSplit) {
  TempDir dir;
  WriteText(dir / "annotations/instances_val2017.json", CocoDoc().dump());
  DatasetManifest m;
  m.format = DatasetFormat::kCoco;
  m.root = dir.path();
  m.split = "val2017";
  EXPECT_EQ(LoadDataset(m).labels.label_count(), 2u);
}

TEST(ManifestTest, CrossFormatRoundTrip) {
  // VOC -> COCO -> VOC through the generic loaders.
  Gen gen(71);
  const LabelSet original = RandomVocLabels(gen, false);
  TempDir dir;
  WriteDataset(original, DatasetFormat::kCoco, dir / "a.json");
  DatasetManifest coco;
  coco.format = DatasetFormat::kCoco;
  coco.root = dir / "a.json";
  const auto via_coco = LoadDataset(coco);
  WriteDataset(via_coco.labels, DatasetFormat::kVoc, dir / "voc");
  DatasetManifest voc;
  voc.format = DatasetFormat::kVoc;
  voc.root = dir / "voc";
  const auto back = LoadDataset(voc);
  std::string why;
  EXPECT_TRUE(EquivalentLabelSets(original, back.labels, 1e-6, &why)) << why;
}

TEST(ManifestTest, FormatNumberRoundTrips) {
  Gen gen(72);
  for (int i = 0; i < 1000; ++i) {
    const double v = gen.Real(-1e6, 1e6);
    EXPECT_EQ(std::stod(FormatNumber(v)), v);
  }
}

}  // namespace
}  // namespace autolabel::formats
