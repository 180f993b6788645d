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

#include "autolabel/formats/voc.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "autolabel/core/error.h"
#include "autolabel/core/parallel.h"

namespace autolabel::formats {

namespace {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

double RequireNumber(const pt::ptree& node, const std::string& path,
                     const std::string& image_id) {
  auto value = node.get_optional<double>(path);
  if (!value) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: missing or non-numeric <{}>", image_id, path));
  }
  return *value;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path AnnotationDir(const fs::path& root) {
  if (fs::is_directory(root / "Annotations")) return root / "Annotations";
  return root;
}

std::vector<fs::path> ListXml(const DatasetManifest& manifest) {
  const fs::path dir = AnnotationDir(manifest.root);
  std::vector<fs::path> files;
  if (!manifest.split.empty()) {
    const fs::path split_file =
        manifest.root / "ImageSets" / "Main" / (manifest.split + ".txt");
    std::ifstream in(split_file);
    if (!in) {
      throw Error(ErrorCode::kIo, fmt::format("cannot open split list '{}'",
                                              split_file.string()));
    }
    std::string id;
    while (in >> id) files.push_back(dir / (id + ".xml"));
  } else {
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".xml") {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

const std::vector<std::string>& VocClassNames() {
  static const std::vector<std::string> kNames = {
      "aeroplane",   "bicycle", "bird",  "boat",      "bottle",
      "bus",         "car",     "cat",   "chair",     "cow",
      "diningtable", "dog",     "horse", "motorbike", "person",
      "pottedplant", "sheep",   "sofa",  "train",     "tvmonitor"};
  return kNames;
}

VocDocument ParseVocXml(const std::string& xml, const std::string& image_id) {
  pt::ptree tree;
  try {
    std::istringstream in(xml);
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::kParse,
                fmt::format("{}: malformed XML at line {}: {}", image_id,
                            e.line(), e.message()));
  }
  const auto annotation = tree.get_child_optional("annotation");
  if (!annotation) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: missing <annotation> root", image_id));
  }
  const auto size = annotation->get_child_optional("size");
  if (!size) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: missing <size> element", image_id));
  }

  VocDocument doc;
  doc.record.image_id = image_id;
  doc.record.width = static_cast<int>(RequireNumber(*size, "width", image_id));
  doc.record.height = static_cast<int>(RequireNumber(*size, "height", image_id));
  doc.record.file_name = annotation->get<std::string>("filename", "");

  for (const auto& [key, node] : *annotation) {
    if (key != "object") continue;
    VocObject obj;
    obj.name = node.get<std::string>("name", "");
    if (obj.name.empty()) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}: <object> without <name>", image_id));
    }
    obj.difficult = node.get<int>("difficult", 0) != 0;
    const auto bndbox = node.get_child_optional("bndbox");
    if (!bndbox) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}: object '{}' without <bndbox>", image_id,
                              obj.name));
    }
    obj.corners = {RequireNumber(*bndbox, "xmin", image_id),
                   RequireNumber(*bndbox, "ymin", image_id),
                   RequireNumber(*bndbox, "xmax", image_id),
                   RequireNumber(*bndbox, "ymax", image_id)};
    doc.objects.push_back(std::move(obj));
  }
  return doc;
}

BoundingBox VocCornersToBox(const Corners& c, bool legacy_coords) {
  if (!legacy_coords) return CornersToCenter(c);
  return CornersToCenter({c.xmin - 1.0, c.ymin - 1.0, c.xmax, c.ymax});
}

Corners BoxToVocCorners(const BoundingBox& box, bool legacy_coords) {
  Corners c = CenterToCorners(box);
  if (legacy_coords) {
    c.xmin += 1.0;
    c.ymin += 1.0;
  }
  return c;
}

ParsedDataset ParseVocDataset(const DatasetManifest& manifest) {
  if (!fs::is_directory(manifest.root)) {
    throw Error(ErrorCode::kIo, fmt::format("VOC root '{}' is not a directory",
                                            manifest.root.string()));
  }
  const auto files = ListXml(manifest);
  std::vector<VocDocument> docs(files.size());
  ParallelFor(files.size(), [&](std::size_t i) {
    docs[i] = ParseVocXml(ReadFile(files[i]), files[i].stem().string());
  });

  ClassVocabulary vocabulary;
  bool given = false;
  if (manifest.vocabulary) {
    vocabulary = *manifest.vocabulary;
    given = true;
  } else if (fs::exists(manifest.root / "classes.txt")) {
    vocabulary = ReadClassNames(manifest.root / "classes.txt");
    given = true;
  }
  std::set<std::string> unknown;
  for (const auto& doc : docs) {
    for (const auto& obj : doc.objects) {
      if (!vocabulary.Find(obj.name)) {
        unknown.insert(ClassVocabulary::Canonicalize(obj.name));
      }
    }
  }
  if (!unknown.empty()) {
    if (given && manifest.options.strict_vocab) {
      throw Error(ErrorCode::kUnknownClass,
                  fmt::format("{}: class names not in vocabulary: {}",
                              manifest.root.string(),
                              fmt::join(unknown, ", ")));
    }
    for (const auto& name : unknown) vocabulary.Add(name);
  }

  ParsedDataset out{LabelSet(std::move(vocabulary)), {}};
  for (auto& doc : docs) {
    const std::string id = doc.record.image_id;
    out.labels.AddImage(std::move(doc.record));
    for (const auto& obj : doc.objects) {
      ++out.stats.raw_annotations;
      ObjectLabel label;
      label.box = VocCornersToBox(obj.corners, manifest.options.voc_legacy_coords);
      label.class_index = *out.labels.vocabulary().Find(obj.name);
      label.difficult = obj.difficult;
      out.labels.AddLabel(id, label);
    }
  }
  out.stats.labels = out.labels.label_count();
  out.stats.images = out.labels.image_count();
  return out;
}

void WriteVocDataset(const LabelSet& labels, const fs::path& out,
                     bool legacy_coords) {
  const fs::path dir = out / "Annotations";
  fs::create_directories(dir);
  WriteClassNames(labels.vocabulary(), out / "classes.txt");
  const auto settings = pt::xml_writer_make_settings<std::string>(' ', 2);
  for (const auto& [id, entry] : labels.images()) {
    if (id.empty() || id.find_first_of("/\\") != std::string::npos) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("image id '{}' is not usable as a file name", id));
    }
    pt::ptree annotation;
    annotation.put("filename",
                   entry.record.file_name.empty() ? id : entry.record.file_name);
    annotation.put("size.width", entry.record.width);
    annotation.put("size.height", entry.record.height);
    annotation.put("size.depth", 3);
    for (const auto& label : entry.labels) {
      const Corners c = BoxToVocCorners(label.box, legacy_coords);
      pt::ptree obj;
      obj.put("name", labels.vocabulary().name(label.class_index));
      obj.put("difficult", label.difficult ? 1 : 0);
      obj.put("bndbox.xmin", FormatNumber(c.xmin));
      obj.put("bndbox.ymin", FormatNumber(c.ymin));
      obj.put("bndbox.xmax", FormatNumber(c.xmax));
      obj.put("bndbox.ymax", FormatNumber(c.ymax));
      annotation.add_child("object", obj);
    }
    pt::ptree doc;
    doc.add_child("annotation", annotation);
    const fs::path file = dir / (id + ".xml");
    std::ofstream os(file, std::ios::binary);
    if (!os) {
      throw Error(ErrorCode::kIo,
                  fmt::format("cannot write '{}'", file.string()));
    }
    pt::write_xml(os, doc, settings);
  }
}

}  // namespace autolabel::formats
