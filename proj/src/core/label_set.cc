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

#include "autolabel/core/label_set.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "autolabel/core/error.h"

namespace autolabel {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool Near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool LabelsNear(const ObjectLabel& a, const ObjectLabel& b, double tol) {
  if (a.class_index != b.class_index || a.difficult != b.difficult) {
    return false;
  }
  if (a.confidence.has_value() != b.confidence.has_value()) return false;
  if (a.confidence && !Near(*a.confidence, *b.confidence, tol)) return false;
  return Near(a.box.cx, b.box.cx, tol) && Near(a.box.cy, b.box.cy, tol) &&
         Near(a.box.w, b.box.w, tol) && Near(a.box.h, b.box.h, tol);
}

}  // namespace

ClassVocabulary::ClassVocabulary(const std::vector<std::string>& names) {
  for (const auto& n : names) Add(n);
}

std::string ClassVocabulary::Canonicalize(std::string_view name) {
  std::string out(Trim(name));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

int ClassVocabulary::Add(std::string_view name,
                         std::optional<std::int64_t> source_id,
                         const std::vector<std::string>& extra_synonyms) {
  std::string canonical = Canonicalize(name);
  if (canonical.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "class name must be non-empty");
  }
  if (by_canonical_.contains(canonical)) {
    throw Error(ErrorCode::kDuplicateRecord,
                fmt::format("duplicate class name '{}'", name));
  }
  const int index = static_cast<int>(names_.size());

  std::vector<std::string> synonyms;
  if (canonical.find('/') != std::string::npos) {
    std::string_view rest = canonical;
    while (!rest.empty()) {
      const auto slash = rest.find('/');
      const auto part = Trim(rest.substr(0, slash));
      if (!part.empty()) synonyms.emplace_back(part);
      if (slash == std::string_view::npos) break;
      rest.remove_prefix(slash + 1);
    }
  }
  for (const auto& s : extra_synonyms) {
    auto c = Canonicalize(s);
    if (!c.empty() &&
        std::find(synonyms.begin(), synonyms.end(), c) == synonyms.end()) {
      synonyms.push_back(std::move(c));
    }
  }
  for (const auto& s : synonyms) by_synonym_.try_emplace(s, index);

  by_canonical_.emplace(canonical, index);
  names_.emplace_back(Trim(name));
  synonyms_.push_back(std::move(synonyms));
  source_ids_.push_back(source_id);
  return index;
}

const std::string& ClassVocabulary::name(int index) const {
  return names_.at(static_cast<std::size_t>(index));
}

const std::vector<std::string>& ClassVocabulary::synonyms(int index) const {
  return synonyms_.at(static_cast<std::size_t>(index));
}

std::optional<std::int64_t> ClassVocabulary::source_id(int index) const {
  return source_ids_.at(static_cast<std::size_t>(index));
}

std::optional<int> ClassVocabulary::Find(std::string_view name) const {
  const std::string canonical = Canonicalize(name);
  if (auto it = by_canonical_.find(canonical); it != by_canonical_.end()) {
    return it->second;
  }
  if (auto it = by_synonym_.find(canonical); it != by_synonym_.end()) {
    return it->second;
  }
  return std::nullopt;
}

bool ClassVocabulary::SameClasses(const ClassVocabulary& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (Canonicalize(names_[i]) != Canonicalize(other.names_[i])) return false;
  }
  return true;
}

std::string DescribeVocabularyDiff(const ClassVocabulary& a,
                                   const ClassVocabulary& b) {
  std::string out =
      fmt::format("class lists differ ({} vs {} classes)\n", a.size(), b.size());
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int idx = static_cast<int>(i);
    const std::string left = i < a.size() ? a.name(idx) : "<none>";
    const std::string right = i < b.size() ? b.name(idx) : "<none>";
    if (ClassVocabulary::Canonicalize(left) !=
        ClassVocabulary::Canonicalize(right)) {
      out += fmt::format("  [{}] - {}\n  [{}] + {}\n", i, left, i, right);
    }
  }
  return out;
}

void RequireSameVocabulary(const ClassVocabulary& a, const ClassVocabulary& b) {
  if (!a.SameClasses(b)) {
    throw Error(ErrorCode::kVocabularyMismatch, DescribeVocabularyDiff(a, b));
  }
}

void LabelSet::AddImage(ImageRecord record) {
  if (record.width <= 0 || record.height <= 0) {
    throw Error(ErrorCode::kRange,
                fmt::format("image '{}' has non-positive size {}x{}",
                            record.image_id, record.width, record.height));
  }
  std::string id = record.image_id;
  auto [it, inserted] =
      images_.try_emplace(std::move(id), ImageEntry{std::move(record), {}});
  if (!inserted) {
    throw Error(ErrorCode::kDuplicateRecord,
                fmt::format("duplicate image id '{}'", it->first));
  }
}

void LabelSet::AddLabel(std::string_view image_id, ObjectLabel label) {
  auto it = images_.find(image_id);
  if (it == images_.end()) {
    throw Error(ErrorCode::kReferentialIntegrity,
                fmt::format("label references unknown image '{}'", image_id));
  }
  if (label.class_index < 0 ||
      static_cast<std::size_t>(label.class_index) >= vocabulary_.size()) {
    throw Error(ErrorCode::kUnknownClass,
                fmt::format("image '{}': class index {} outside vocabulary of "
                            "{} classes",
                            image_id, label.class_index, vocabulary_.size()));
  }
  ValidateBox(label.box);
  if (label.confidence &&
      !(*label.confidence >= 0.0 && *label.confidence <= 1.0)) {
    throw Error(ErrorCode::kRange,
                fmt::format("image '{}': confidence {} outside [0, 1]",
                            image_id, *label.confidence));
  }
  it->second.labels.push_back(label);
  ++label_count_;
}

const ImageEntry* LabelSet::FindImage(std::string_view image_id) const {
  auto it = images_.find(image_id);
  return it == images_.end() ? nullptr : &it->second;
}

std::span<const ObjectLabel> LabelSet::LabelsFor(
    std::string_view image_id) const {
  const ImageEntry* e = FindImage(image_id);
  if (e == nullptr) return {};
  return e->labels;
}

LabelSet LabelSet::EmptyLike() const {
  LabelSet out(vocabulary_);
  for (const auto& [id, entry] : images_) out.AddImage(entry.record);
  return out;
}

bool EquivalentLabelSets(const LabelSet& a, const LabelSet& b,
                         double tolerance, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why != nullptr) *why = std::move(msg);
    return false;
  };
  if (!a.vocabulary().SameClasses(b.vocabulary())) {
    return fail(DescribeVocabularyDiff(a.vocabulary(), b.vocabulary()));
  }
  if (a.image_count() != b.image_count()) {
    return fail(fmt::format("image count {} vs {}", a.image_count(),
                            b.image_count()));
  }
  for (const auto& [id, entry] : a.images()) {
    const ImageEntry* other = b.FindImage(id);
    if (other == nullptr) return fail(fmt::format("image '{}' missing", id));
    if (entry.record.width != other->record.width ||
        entry.record.height != other->record.height) {
      return fail(fmt::format("image '{}' size differs", id));
    }
    if (entry.labels.size() != other->labels.size()) {
      return fail(fmt::format("image '{}' has {} vs {} labels", id,
                              entry.labels.size(), other->labels.size()));
    }
    std::vector<bool> used(other->labels.size(), false);
    for (const auto& la : entry.labels) {
      bool found = false;
      for (std::size_t j = 0; j < other->labels.size(); ++j) {
        if (!used[j] && LabelsNear(la, other->labels[j], tolerance)) {
          used[j] = true;
          found = true;
          break;
        }
      }
      if (!found) {
        return fail(fmt::format(
            "image '{}': no counterpart for class {} box ({}, {}, {}, {})", id,
            la.class_index, la.box.cx, la.box.cy, la.box.w, la.box.h));
      }
    }
  }
  return true;
}

}  // namespace autolabel
