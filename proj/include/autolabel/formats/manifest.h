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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "autolabel/core/label_set.h"

namespace autolabel::formats {

enum class DatasetFormat { kCoco, kVoc, kYolo, kWire };

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name);
std::string_view DatasetFormatName(DatasetFormat format);

struct IngestOptions {
  // COCO: drop iscrowd=1 annotations.
  bool exclude_crowd = true;
  // COCO: box from the tight hull of polygon segmentation when present.
  bool convert_segmentation = true;
  // VOC/YOLO/wire: unknown class names are an error instead of extending the
  // vocabulary.
  bool strict_vocab = false;
  // VOC: 1-based inclusive pixel corners (w = xmax - xmin + 1).
  bool voc_legacy_coords = false;
};

struct DatasetManifest {
  DatasetFormat format = DatasetFormat::kCoco;
  // COCO: annotation JSON file, or a dataset root holding
  //   annotations/instances_<split>.json.
  // VOC: directory of XML files, or a VOC root holding Annotations/ (and
  //   ImageSets/Main/<split>.txt when a split is named).
  // YOLO: export root holding classes.txt, images.csv and labels/.
  // Wire: line-delimited JSON file.
  std::filesystem::path root;
  std::string split;
  IngestOptions options;
  // Class list to parse against. Required for wire streams without a header
  // class list; optional elsewhere.
  std::optional<ClassVocabulary> vocabulary;
};

struct IngestStats {
  std::size_t raw_annotations = 0;
  std::size_t crowd_dropped = 0;
  std::size_t segmentations_converted = 0;
  std::size_t labels = 0;
  std::size_t images = 0;
};

struct ParsedDataset {
  LabelSet labels;
  IngestStats stats;
};

// Dispatches on manifest.format. Throws Error(kIo) when the root is missing.
ParsedDataset LoadDataset(const DatasetManifest& manifest);

struct WriteOptions {
  // Wire/COCO: model tag recorded in the header or info block.
  std::string model_tag;
  bool voc_legacy_coords = false;
};

// Writes `labels` under `out` in the given format. For COCO and wire `out` is
// a file path; for VOC and YOLO it is a directory.
void WriteDataset(const LabelSet& labels, DatasetFormat format,
                  const std::filesystem::path& out,
                  const WriteOptions& options = {});

// Reads one class name per line (blank lines skipped).
ClassVocabulary ReadClassNames(const std::filesystem::path& path);
void WriteClassNames(const ClassVocabulary& vocabulary,
                     const std::filesystem::path& path);

// Shortest text that parses back to exactly `value`.
std::string FormatNumber(double value);

// File stem used for per-image outputs (YOLO txt, VOC xml).
std::string ImageStem(const ImageRecord& record);

}  // namespace autolabel::formats
