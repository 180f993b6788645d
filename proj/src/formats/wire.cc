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

#include "autolabel/formats/wire.h"

#include <fmt/format.h>

#include "autolabel/core/error.h"

namespace autolabel::formats {

namespace {

using nlohmann::json;

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: missing field '{}'", where, key));
  }
  return *it;
}

}  // namespace

WireDataset ParseWire(std::istream& in,
                      const std::optional<ClassVocabulary>& vocabulary,
                      const std::string& source_name) {
  std::vector<std::pair<std::size_t, json>> records;
  std::optional<WireHeader> header;
  std::string line;
  std::size_t line_number = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json value;
    try {
      value = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse,
                  fmt::format("{}:{}: malformed JSON at byte {}: {}",
                              source_name, line_number, line_start + e.byte,
                              e.what()));
    }
    if (!value.is_object()) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}:{}: record must be a JSON object",
                              source_name, line_number));
    }
    if (value.value("kind", "") == "header") {
      if (header || !records.empty()) {
        throw Error(ErrorCode::kFormat,
                    fmt::format("{}:{}: header must be the first record",
                                source_name, line_number));
      }
      try {
        WireHeader h;
        h.model = value.value("model", "");
        if (value.contains("classes")) {
          h.classes = value.at("classes").get<std::vector<std::string>>();
        }
        if (value.contains("settings")) h.settings = value.at("settings");
        header = std::move(h);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kFormat,
                    fmt::format("{}:{}: bad header: {}", source_name,
                                line_number, e.what()));
      }
      continue;
    }
    records.emplace_back(line_number, std::move(value));
  }

  ClassVocabulary vocab;
  if (header && !header->classes.empty()) {
    vocab = ClassVocabulary(header->classes);
    if (vocabulary) RequireSameVocabulary(*vocabulary, vocab);
  } else if (vocabulary) {
    vocab = *vocabulary;
  } else {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: no class list in header and none supplied",
                            source_name));
  }

  WireDataset out{{LabelSet(std::move(vocab)), {}}, std::move(header)};
  LabelSet& labels = out.dataset.labels;
  for (const auto& [number, rec] : records) {
    const std::string where = fmt::format("{}:{}", source_name, number);
    try {
      const auto& id_field = Field(rec, "image_id", where);
      const std::string image_id = id_field.is_string()
                                       ? id_field.get<std::string>()
                                       : id_field.dump();
      ImageRecord image{image_id, Field(rec, "width", where).get<int>(),
                        Field(rec, "height", where).get<int>(), ""};
      if (auto it = rec.find("file_name"); it != rec.end() && it->is_string()) {
        image.file_name = it->get<std::string>();
      }
      labels.AddImage(std::move(image));
      for (const auto& l : Field(rec, "labels", where)) {
        ObjectLabel label;
        label.class_index = Field(l, "class_index", where).get<int>();
        label.box = {Field(l, "cx", where).get<double>(),
                     Field(l, "cy", where).get<double>(),
                     Field(l, "w", where).get<double>(),
                     Field(l, "h", where).get<double>()};
        label.confidence = Field(l, "confidence", where).get<double>();
        ++out.dataset.stats.raw_annotations;
        labels.AddLabel(image_id, label);
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}: unexpected field type: {}", where,
                              e.what()));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{}: {}", where, e.what()));
    }
  }
  out.dataset.stats.labels = labels.label_count();
  out.dataset.stats.images = labels.image_count();
  return out;
}

void WriteWire(const LabelSet& labels, std::ostream& out,
               const std::string& model_tag) {
  json header = {{"kind", "header"},
                 {"model", model_tag},
                 {"classes", labels.vocabulary().names()}};
  out << header.dump() << '\n';
  for (const auto& [id, entry] : labels.images()) {
    json list = json::array();
    for (const auto& l : entry.labels) {
      list.push_back({{"class_index", l.class_index},
                      {"cx", l.box.cx},
                      {"cy", l.box.cy},
                      {"w", l.box.w},
                      {"h", l.box.h},
                      {"confidence", l.confidence.value_or(1.0)}});
    }
    json rec = {{"image_id", id},
                {"width", entry.record.width},
                {"height", entry.record.height},
                {"labels", std::move(list)}};
    if (!entry.record.file_name.empty()) {
      rec["file_name"] = entry.record.file_name;
    }
    out << rec.dump() << '\n';
  }
}

}  // namespace autolabel::formats
