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
#include <istream>
#include <ostream>
#include <string>

#include "autolabel/formats/manifest.h"

namespace autolabel::formats {

// Parses COCO instance annotations (images / annotations / categories).
// Boxes arrive as [xmin, ymin, w, h] and are stored in center format.
// Categories are remapped to dense indices sorted ascending by category id;
// the original ids are kept as vocabulary source ids. An optional
// annotation "score" becomes the label confidence.
//
// Errors: kParse (with byte offset) for malformed JSON, kFormat for missing
// or mistyped fields, kReferentialIntegrity listing annotations that point
// at unknown images or categories.
ParsedDataset ParseCoco(std::istream& in, const IngestOptions& options,
                        const std::string& source_name = "<stream>");
ParsedDataset ParseCocoFile(const std::filesystem::path& path,
                            const IngestOptions& options);

// Numeric image ids are written as JSON integers, everything else as strings.
// Category ids come from the vocabulary source ids (index + 1 when absent).
void WriteCoco(const LabelSet& labels, std::ostream& out,
               const std::string& model_tag = {});
void WriteCocoFile(const LabelSet& labels, const std::filesystem::path& path,
                   const std::string& model_tag = {});

}  // namespace autolabel::formats
