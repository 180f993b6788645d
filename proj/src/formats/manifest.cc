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

#include "autolabel/formats/manifest.h"

#include <fstream>

#include <fmt/format.h>

#include "autolabel/core/error.h"
#include "autolabel/formats/coco.h"
#include "autolabel/formats/voc.h"
#include "autolabel/formats/wire.h"
#include "autolabel/formats/yolo.h"

namespace autolabel::formats {

namespace fs = std::filesystem;

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name) {
  if (name == "coco") return DatasetFormat::kCoco;
  if (name == "voc") return DatasetFormat::kVoc;
  if (name == "yolo") return DatasetFormat::kYolo;
  if (name == "wire") return DatasetFormat::kWire;
  return std::nullopt;
}

std::string_view DatasetFormatName(DatasetFormat format) {
  switch (format) {
    case DatasetFormat::kCoco:
      return "coco";
    case DatasetFormat::kVoc:
      return "voc";
    case DatasetFormat::kYolo:
      return "yolo";
    case DatasetFormat::kWire:
      return "wire";
  }
  return "unknown";
}

std::string FormatNumber(double value) { return fmt::format("{}", value); }

std::string ImageStem(const ImageRecord& record) {
  std::string stem = record.file_name.empty()
                         ? record.image_id
                         : fs::path(record.file_name).replace_extension().string();
  for (char& c : stem) {
    if (c == '/' || c == '\\') c = '_';
  }
  return stem;
}

ClassVocabulary ReadClassNames(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'", path.string()));
  }
  std::vector<std::string> names;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    names.push_back(line);
  }
  return ClassVocabulary(names);
}

void WriteClassNames(const ClassVocabulary& vocabulary, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot write '{}'", path.string()));
  }
  for (const auto& name : vocabulary.names()) out << name << '\n';
}

ParsedDataset LoadDataset(const DatasetManifest& manifest) {
  if (!fs::exists(manifest.root)) {
    throw Error(ErrorCode::kIo, fmt::format("dataset path '{}' does not exist",
                                            manifest.root.string()));
  }
  switch (manifest.format) {
    case DatasetFormat::kCoco: {
      fs::path file = manifest.root;
      if (fs::is_directory(file)) {
        if (manifest.split.empty()) {
          throw Error(ErrorCode::kInvalidArgument,
                      "COCO directory root needs a split name");
        }
        file = file / "annotations" / ("instances_" + manifest.split + ".json");
      }
      ParsedDataset parsed = ParseCocoFile(file, manifest.options);
      if (manifest.vocabulary) {
        RequireSameVocabulary(*manifest.vocabulary, parsed.labels.vocabulary());
      }
      return parsed;
    }
    case DatasetFormat::kVoc:
      return ParseVocDataset(manifest);
    case DatasetFormat::kYolo:
      return ParseYoloDataset(manifest);
    case DatasetFormat::kWire: {
      std::ifstream in(manifest.root, std::ios::binary);
      if (!in) {
        throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'",
                                                manifest.root.string()));
      }
      return ParseWire(in, manifest.vocabulary, manifest.root.string()).dataset;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown dataset format");
}

void WriteDataset(const LabelSet& labels, DatasetFormat format,
                  const fs::path& out, const WriteOptions& options) {
  switch (format) {
    case DatasetFormat::kCoco:
      WriteCocoFile(labels, out, options.model_tag);
      return;
    case DatasetFormat::kVoc:
      WriteVocDataset(labels, out, options.voc_legacy_coords);
      return;
    case DatasetFormat::kYolo:
      WriteYoloDataset(labels, out);
      return;
    case DatasetFormat::kWire: {
      if (out.has_parent_path()) fs::create_directories(out.parent_path());
      std::ofstream os(out, std::ios::binary);
      if (!os) {
        throw Error(ErrorCode::kIo,
                    fmt::format("cannot write '{}'", out.string()));
      }
      WriteWire(labels, os, options.model_tag);
      return;
    }
  }
}

}  // namespace autolabel::formats
