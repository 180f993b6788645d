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

#include "autolabel/formats/coco.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "autolabel/core/error.h"
#include "json.hpp"

namespace autolabel::formats {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxListedIds = 20;

std::string IdToString(const json& id) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return std::to_string(id.get<std::int64_t>());
  throw Error(ErrorCode::kFormat,
              fmt::format("id must be an integer or string, got {}", id.dump()));
}

const json& Require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: missing field '{}'", where, key));
  }
  return *it;
}

// Tight hull of all polygon vertices; nullopt when the segmentation is not a
// non-empty polygon list (RLE dicts fall through to the bbox field).
std::optional<Corners> PolygonHull(const json& segmentation) {
  if (!segmentation.is_array() || segmentation.empty()) return std::nullopt;
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  bool any = false;
  for (const auto& poly : segmentation) {
    if (!poly.is_array()) return std::nullopt;
    for (std::size_t i = 0; i + 1 < poly.size(); i += 2) {
      const double x = poly[i].get<double>();
      const double y = poly[i + 1].get<double>();
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return Corners{xmin, ymin, xmax, ymax};
}

bool IsCrowd(const json& ann) {
  auto it = ann.find("iscrowd");
  if (it == ann.end()) return false;
  if (it->is_boolean()) return it->get<bool>();
  return it->is_number() && it->get<double>() == 1.0;
}

bool IsIntegerId(const std::string& s, std::int64_t* value) {
  if (s.empty() || s.size() > 18) return false;
  if (s.size() > 1 && s.front() == '0') return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, *value);
  return ec == std::errc() && ptr == end && *value >= 0;
}

ParsedDataset ParseCocoJson(const json& root, const IngestOptions& options,
                            const std::string& source) {
  if (!root.is_object()) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: top level must be an object", source));
  }
  const json empty = json::array();
  const json& images = Require(root, "images", source.c_str());
  const json& categories = Require(root, "categories", source.c_str());
  const json& annotations =
      root.contains("annotations") ? root.at("annotations") : empty;

  std::vector<std::pair<std::int64_t, const json*>> cats;
  for (const auto& c : categories) {
    cats.emplace_back(Require(c, "id", "category").get<std::int64_t>(), &c);
  }
  std::sort(cats.begin(), cats.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ClassVocabulary vocabulary;
  std::unordered_map<std::int64_t, int> index_of_category;
  for (const auto& [id, c] : cats) {
    std::vector<std::string> synonyms;
    if (auto it = c->find("synonyms"); it != c->end() && it->is_array()) {
      synonyms = it->get<std::vector<std::string>>();
    }
    if (index_of_category.contains(id)) {
      throw Error(ErrorCode::kDuplicateRecord,
                  fmt::format("{}: duplicate category id {}", source, id));
    }
    index_of_category[id] = vocabulary.Add(
        Require(*c, "name", "category").get<std::string>(), id, synonyms);
  }

  ParsedDataset out{LabelSet(std::move(vocabulary)), {}};
  for (const auto& img : images) {
    ImageRecord rec;
    rec.image_id = IdToString(Require(img, "id", "image"));
    rec.width = Require(img, "width", "image").get<int>();
    rec.height = Require(img, "height", "image").get<int>();
    if (auto it = img.find("file_name"); it != img.end() && it->is_string()) {
      rec.file_name = it->get<std::string>();
    }
    out.labels.AddImage(std::move(rec));
  }

  std::set<std::string> missing_images;
  std::set<std::int64_t> missing_categories;
  std::vector<std::string> offending_annotations;
  for (const auto& ann : annotations) {
    ++out.stats.raw_annotations;
    const std::string image_id = IdToString(Require(ann, "image_id", "annotation"));
    const auto category_id =
        Require(ann, "category_id", "annotation").get<std::int64_t>();
    const bool bad_image = out.labels.FindImage(image_id) == nullptr;
    const auto cat_it = index_of_category.find(category_id);
    const bool bad_category = cat_it == index_of_category.end();
    if (bad_image || bad_category) {
      if (bad_image) missing_images.insert(image_id);
      if (bad_category) missing_categories.insert(category_id);
      if (offending_annotations.size() < kMaxListedIds) {
        offending_annotations.push_back(
            ann.contains("id") ? IdToString(ann.at("id")) : "?");
      }
      continue;
    }

    if (options.exclude_crowd && IsCrowd(ann)) {
      ++out.stats.crowd_dropped;
      continue;
    }

    std::optional<Corners> corners;
    if (options.convert_segmentation) {
      if (auto it = ann.find("segmentation"); it != ann.end()) {
        corners = PolygonHull(*it);
        if (corners) ++out.stats.segmentations_converted;
      }
    }
    if (!corners) {
      const json& bbox = Require(ann, "bbox", "annotation");
      if (!bbox.is_array() || bbox.size() != 4) {
        throw Error(ErrorCode::kFormat,
                    fmt::format("{}: annotation bbox must have 4 numbers",
                                source));
      }
      const double x = bbox[0].get<double>();
      const double y = bbox[1].get<double>();
      const double w = bbox[2].get<double>();
      const double h = bbox[3].get<double>();
      corners = Corners{x, y, x + w, y + h};
    }

    ObjectLabel label;
    label.box = CornersToCenter(*corners);
    label.class_index = cat_it->second;
    if (auto it = ann.find("score"); it != ann.end() && it->is_number()) {
      label.confidence = it->get<double>();
    }
    label.difficult = ann.value("difficult", false);
    out.labels.AddLabel(image_id, label);
  }

  if (!missing_images.empty() || !missing_categories.empty()) {
    std::vector<std::string> cats_listed;
    for (auto id : missing_categories) cats_listed.push_back(std::to_string(id));
    std::vector<std::string> imgs_listed(missing_images.begin(),
                                         missing_images.end());
    if (imgs_listed.size() > kMaxListedIds) imgs_listed.resize(kMaxListedIds);
    throw Error(ErrorCode::kReferentialIntegrity,
                fmt::format("{}: annotations [{}] reference unknown images [{}] "
                            "and/or categories [{}]",
                            source, fmt::join(offending_annotations, ", "),
                            fmt::join(imgs_listed, ", "),
                            fmt::join(cats_listed, ", ")));
  }

  out.stats.labels = out.labels.label_count();
  out.stats.images = out.labels.image_count();
  return out;
}

}  // namespace

ParsedDataset ParseCoco(std::istream& in, const IngestOptions& options,
                        const std::string& source_name) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse,
                fmt::format("{}: malformed JSON at byte {}: {}", source_name,
                            e.byte, e.what()));
  }
  try {
    return ParseCocoJson(root, options, source_name);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: unexpected field type: {}", source_name,
                            e.what()));
  }
}

ParsedDataset ParseCocoFile(const std::filesystem::path& path,
                            const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open '{}'", path.string()));
  }
  return ParseCoco(in, options, path.string());
}

void WriteCoco(const LabelSet& labels, std::ostream& out,
               const std::string& model_tag) {
  json root;
  if (!model_tag.empty()) root["info"] = {{"description", model_tag}};

  auto id_json = [](const std::string& id) -> json {
    std::int64_t v = 0;
    if (IsIntegerId(id, &v)) return v;
    return id;
  };

  json images = json::array();
  json annotations = json::array();
  std::int64_t next_annotation_id = 1;
  const auto& vocab = labels.vocabulary();
  for (const auto& [id, entry] : labels.images()) {
    json img = {{"id", id_json(id)},
                {"width", entry.record.width},
                {"height", entry.record.height}};
    if (!entry.record.file_name.empty()) {
      img["file_name"] = entry.record.file_name;
    }
    images.push_back(std::move(img));
    for (const auto& label : entry.labels) {
      const Corners c = CenterToCorners(label.box);
      json ann = {
          {"id", next_annotation_id++},
          {"image_id", id_json(id)},
          {"category_id",
           vocab.source_id(label.class_index).value_or(label.class_index + 1)},
          {"bbox", {c.xmin, c.ymin, label.box.w, label.box.h}},
          {"area", label.box.Area()},
          {"iscrowd", 0},
      };
      if (label.confidence) ann["score"] = *label.confidence;
      if (label.difficult) ann["difficult"] = true;
      annotations.push_back(std::move(ann));
    }
  }

  json categories = json::array();
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    const int idx = static_cast<int>(i);
    json cat = {{"id", vocab.source_id(idx).value_or(idx + 1)},
                {"name", vocab.name(idx)}};
    if (!vocab.synonyms(idx).empty()) cat["synonyms"] = vocab.synonyms(idx);
    categories.push_back(std::move(cat));
  }

  root["images"] = std::move(images);
  root["annotations"] = std::move(annotations);
  root["categories"] = std::move(categories);
  out << root.dump() << '\n';
}

void WriteCocoFile(const LabelSet& labels, const std::filesystem::path& path,
                   const std::string& model_tag) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot write '{}'", path.string()));
  }
  WriteCoco(labels, out, model_tag);
}

}  // namespace autolabel::formats
