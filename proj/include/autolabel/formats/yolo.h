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

#include "autolabel/formats/manifest.h"

namespace autolabel::formats {

// YOLO-txt export layout:
//   <root>/classes.txt     one class name per line, index order
//   <root>/images.csv      image_id,file_name,width,height,label_file
//   <root>/labels/<stem>.txt  "<class> <cx> <cy> <w> <h>" normalized, 6 dp
// images.csv carries the pixel dimensions that normalization depends on.

// One label line, normalized by the image dimensions, fixed at 6 decimals.
std::string FormatYoloLine(const ObjectLabel& label, const ImageRecord& image);

// Range-checked parse of one line. An optional sixth column is read as the
// confidence. Throws kFormat for malformed lines and kRange for normalized
// values outside [0, 1.0001]; `where` names the file and line in errors.
ObjectLabel ParseYoloLine(const std::string& line, const ImageRecord& image,
                          const std::string& where);

ParsedDataset ParseYoloDataset(const DatasetManifest& manifest);
void WriteYoloDataset(const LabelSet& labels, const std::filesystem::path& root);

}  // namespace autolabel::formats
