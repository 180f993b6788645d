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

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "autolabel/formats/manifest.h"
#include "json.hpp"

namespace autolabel::formats {

// Line-delimited JSON stream produced by the inference adapter.
//
// Optional first line, the header:
//   {"kind":"header","model":"<tag>","classes":["person",...],"settings":{...}}
// Then one record per image, in any order:
//   {"image_id":"<id>","width":W,"height":H,
//    "labels":[{"class_index":i,"cx":..,"cy":..,"w":..,"h":..,
//               "confidence":c}, ...]}
// Boxes are absolute pixels, center format. Confidence is mandatory and
// closed-interval [0, 1]. Blank lines are ignored.
struct WireHeader {
  std::string model;
  std::vector<std::string> classes;
  nlohmann::json settings = nlohmann::json::object();
};

struct WireDataset {
  ParsedDataset dataset;
  std::optional<WireHeader> header;
};

// `vocabulary` may be omitted when the header carries the class list; when
// both are present they must agree (kVocabularyMismatch). Errors: kParse with
// line number and byte offset, kFormat for missing fields, kDuplicateRecord
// for a repeated image_id, kRange for confidence outside [0, 1],
// kUnknownClass for an out-of-range class_index.
WireDataset ParseWire(std::istream& in,
                      const std::optional<ClassVocabulary>& vocabulary,
                      const std::string& source_name = "<stream>");

// Emits a header line (with the vocabulary) followed by one record per image
// in image id order. Labels without confidence are written as 1.0.
void WriteWire(const LabelSet& labels, std::ostream& out,
               const std::string& model_tag = {});

}  // namespace autolabel::formats
