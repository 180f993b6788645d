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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "autolabel/core/geometry.h"

namespace autolabel {

struct ObjectLabel {
  BoundingBox box;
  int class_index = 0;
  // Mandatory on auto-labels, optional on human references.
  std::optional<double> confidence;
  // VOC "difficult" marker; carried through, never interpreted by the matcher.
  bool difficult = false;

  friend bool operator==(const ObjectLabel&, const ObjectLabel&) = default;
};

struct ImageRecord {
  std::string image_id;
  int width = 0;
  int height = 0;
  // Image file name as given by the source annotation (may be empty).
  std::string file_name;

  friend bool operator==(const ImageRecord&, const ImageRecord&) = default;
};

// Ordered class names. Index order is the prompt order and defines
// class_index everywhere else in the toolkit.
class ClassVocabulary {
 public:
  ClassVocabulary() = default;
  explicit ClassVocabulary(const std::vector<std::string>& names);

  // Appends a class and returns its index. Names containing '/' are kept
  // whole and additionally split into a synonym list (LVIS style).
  int Add(std::string_view name, std::optional<std::int64_t> source_id = {},
          const std::vector<std::string>& extra_synonyms = {});

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int index) const;
  const std::vector<std::string>& synonyms(int index) const;
  // Original dataset category id (e.g. COCO category_id), when known.
  std::optional<std::int64_t> source_id(int index) const;

  // Looks up by canonical name first, then by synonym.
  std::optional<int> Find(std::string_view name) const;

  // Same canonical names in the same order; source ids are ignored.
  bool SameClasses(const ClassVocabulary& other) const;

  // Lowercase, surrounding whitespace trimmed.
  static std::string Canonicalize(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> synonyms_;
  std::vector<std::optional<std::int64_t>> source_ids_;
  std::unordered_map<std::string, int> by_canonical_;
  std::unordered_map<std::string, int> by_synonym_;
};

// Human-readable listing of where two vocabularies differ.
std::string DescribeVocabularyDiff(const ClassVocabulary& a,
                                   const ClassVocabulary& b);

// Throws Error(kVocabularyMismatch) with the diff when the vocabularies differ.
void RequireSameVocabulary(const ClassVocabulary& a, const ClassVocabulary& b);

struct ImageEntry {
  ImageRecord record;
  std::vector<ObjectLabel> labels;
};

// All labels of one dataset split keyed by image id. Iteration is in image id
// order, so two sets built from the same records in any order iterate alike.
class LabelSet {
 public:
  using ImageMap = std::map<std::string, ImageEntry, std::less<>>;

  LabelSet() = default;
  explicit LabelSet(ClassVocabulary vocabulary)
      : vocabulary_(std::move(vocabulary)) {}

  const ClassVocabulary& vocabulary() const { return vocabulary_; }
  const ImageMap& images() const { return images_; }

  // Throws kDuplicateRecord on a repeated id, kRange on non-positive size.
  void AddImage(ImageRecord record);
  // Throws kReferentialIntegrity for an unknown image, kUnknownClass for an
  // out-of-range class, kInvalidGeometry for a bad box and kRange for a
  // confidence outside [0, 1].
  void AddLabel(std::string_view image_id, ObjectLabel label);

  const ImageEntry* FindImage(std::string_view image_id) const;
  std::span<const ObjectLabel> LabelsFor(std::string_view image_id) const;

  std::size_t image_count() const { return images_.size(); }
  std::size_t label_count() const { return label_count_; }

  // Copy with the same vocabulary and images but no labels.
  LabelSet EmptyLike() const;

 private:
  ClassVocabulary vocabulary_;
  ImageMap images_;
  std::size_t label_count_ = 0;
};

// Multiset comparison of two label sets: same vocabulary, same images, and per
// image the same labels up to ordering with box coordinates and confidences
// equal within `tolerance`. On mismatch returns false and fills `why`.
bool EquivalentLabelSets(const LabelSet& a, const LabelSet& b,
                         double tolerance, std::string* why = nullptr);

}  // namespace autolabel
