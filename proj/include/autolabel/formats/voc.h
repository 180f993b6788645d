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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "autolabel/formats/manifest.h"

namespace autolabel::formats {

struct VocObject {
  std::string name;
  Corners corners;  // as written in <bndbox>
  bool difficult = false;
};

struct VocDocument {
  ImageRecord record;
  std::vector<VocObject> objects;
};

// Parses one PASCAL VOC annotation document. `image_id` becomes the record
// id (callers pass the file stem). Throws kParse for malformed XML and
// kFormat when <size> or a <bndbox> coordinate is missing.
VocDocument ParseVocXml(const std::string& xml, const std::string& image_id);

// Box for a <bndbox>. By default the corners are used as-is (w = xmax - xmin);
// with `legacy_coords` they are 1-based inclusive pixels and the box spans
// [xmin - 1, xmax] (w = xmax - xmin + 1).
BoundingBox VocCornersToBox(const Corners& corners, bool legacy_coords);
Corners BoxToVocCorners(const BoundingBox& box, bool legacy_coords);

// Loads every *.xml under the manifest's annotation directory. Vocabulary
// order: manifest vocabulary, else <root>/classes.txt, else the sorted set of
// names found (which for VOC is the standard 20-class order). Names outside a
// given vocabulary are appended in sorted order, or rejected with
// kUnknownClass when options.strict_vocab is set.
ParsedDataset ParseVocDataset(const DatasetManifest& manifest);

// Writes <out>/Annotations/<image_id>.xml per image plus <out>/classes.txt.
void WriteVocDataset(const LabelSet& labels, const std::filesystem::path& out,
                     bool legacy_coords = false);

// The 20 PASCAL VOC classes in their conventional order.
const std::vector<std::string>& VocClassNames();

}  // namespace autolabel::formats
