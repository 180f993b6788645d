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

#include "autolabel/formats/yolo.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "autolabel/core/csv.h"
#include "autolabel/core/error.h"

namespace autolabel::formats {

namespace {

namespace fs = std::filesystem;

constexpr double kNormalizedMax = 1.0001;

double ParseDouble(const std::string& token, const std::string& where) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: '{}' is not a number", where, token));
  }
  return value;
}

int ParseInt(const std::string& token, const std::string& where) {
  int value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: '{}' is not an integer", where, token));
  }
  return value;
}

}  // namespace

std::string FormatYoloLine(const ObjectLabel& label, const ImageRecord& image) {
  const double w = image.width;
  const double h = image.height;
  return fmt::format("{} {:.6f} {:.6f} {:.6f} {:.6f}", label.class_index,
                     label.box.cx / w, label.box.cy / h, label.box.w / w,
                     label.box.h / h);
}

ObjectLabel ParseYoloLine(const std::string& line, const ImageRecord& image,
                          const std::string& where) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  if (tokens.size() != 5 && tokens.size() != 6) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: expected 5 or 6 fields, got {}", where,
                            tokens.size()));
  }
  ObjectLabel label;
  label.class_index = ParseInt(tokens[0], where);
  double values[4];
  for (int i = 0; i < 4; ++i) {
    values[i] = ParseDouble(tokens[static_cast<std::size_t>(i) + 1], where);
    if (!(values[i] >= 0.0 && values[i] <= kNormalizedMax)) {
      throw Error(ErrorCode::kRange,
                  fmt::format("{}: normalized value {} outside [0, {}]", where,
                              values[i], kNormalizedMax));
    }
  }
  label.box = {values[0] * image.width, values[1] * image.height,
               values[2] * image.width, values[3] * image.height};
  if (tokens.size() == 6) {
    const double conf = ParseDouble(tokens[5], where);
    if (!(conf >= 0.0 && conf <= 1.0)) {
      throw Error(ErrorCode::kRange,
                  fmt::format("{}: confidence {} outside [0, 1]", where, conf));
    }
    label.confidence = conf;
  }
  return label;
}

ParsedDataset ParseYoloDataset(const DatasetManifest& manifest) {
  const fs::path& root = manifest.root;
  if (!fs::is_directory(root)) {
    throw Error(ErrorCode::kIo, fmt::format("YOLO root '{}' is not a directory",
                                            root.string()));
  }
  ClassVocabulary vocabulary = manifest.vocabulary
                                   ? *manifest.vocabulary
                                   : ReadClassNames(root / "classes.txt");

  const fs::path index_path = root / "images.csv";
  std::ifstream index(index_path);
  if (!index) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open '{}'", index_path.string()));
  }
  ParsedDataset out{LabelSet(std::move(vocabulary)), {}};
  std::string row;
  std::size_t row_number = 0;
  std::vector<std::pair<std::string, fs::path>> label_files;
  while (std::getline(index, row)) {
    ++row_number;
    if (row_number == 1 || row.empty()) continue;  // header
    const auto fields = SplitCsvLine(row);
    const std::string where =
        fmt::format("{}:{}", index_path.string(), row_number);
    if (fields.size() != 5) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}: expected 5 columns", where));
    }
    ImageRecord rec{fields[0], ParseInt(fields[2], where),
                    ParseInt(fields[3], where), fields[1]};
    label_files.emplace_back(rec.image_id, root / "labels" / fields[4]);
    out.labels.AddImage(std::move(rec));
  }

  for (const auto& [image_id, path] : label_files) {
    const ImageRecord& rec = out.labels.FindImage(image_id)->record;
    std::ifstream in(path);
    if (!in) continue;  // no label file: background image
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const std::string where =
          fmt::format("{}:{}", path.string(), line_number);
      ObjectLabel label = ParseYoloLine(line, rec, where);
      if (static_cast<std::size_t>(label.class_index) >=
              out.labels.vocabulary().size() ||
          label.class_index < 0) {
        throw Error(ErrorCode::kUnknownClass,
                    fmt::format("{}: class {} outside vocabulary of {}", where,
                                label.class_index,
                                out.labels.vocabulary().size()));
      }
      ++out.stats.raw_annotations;
      out.labels.AddLabel(image_id, label);
    }
  }
  out.stats.labels = out.labels.label_count();
  out.stats.images = out.labels.image_count();
  return out;
}

void WriteYoloDataset(const LabelSet& labels, const fs::path& root) {
  fs::create_directories(root / "labels");
  WriteClassNames(labels.vocabulary(), root / "classes.txt");

  const fs::path index_path = root / "images.csv";
  std::ofstream index(index_path, std::ios::binary);
  if (!index) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot write '{}'", index_path.string()));
  }
  index << "image_id,file_name,width,height,label_file\n";
  std::set<std::string> used;
  for (const auto& [id, entry] : labels.images()) {
    const std::string file = ImageStem(entry.record) + ".txt";
    if (!used.insert(file).second) {
      throw Error(ErrorCode::kDuplicateRecord,
                  fmt::format("two images map to label file '{}'", file));
    }
    index << CsvEscape(id) << ',' << CsvEscape(entry.record.file_name) << ','
          << entry.record.width << ',' << entry.record.height << ','
          << CsvEscape(file) << '\n';
    std::ofstream out(root / "labels" / file, std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", file));
    }
    for (const auto& label : entry.labels) {
      out << FormatYoloLine(label, entry.record) << '\n';
    }
  }
}

}  // namespace autolabel::formats
