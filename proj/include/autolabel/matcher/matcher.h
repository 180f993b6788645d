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
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "autolabel/core/label_set.h"

namespace autolabel::matcher {

struct Tally {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  Tally& operator+=(const Tally& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  friend bool operator==(const Tally&, const Tally&) = default;
};

struct MatchedPair {
  std::string image_id;
  std::size_t prediction_index = 0;  // index into the image's prediction list
  std::size_t reference_index = 0;   // index into the image's reference list
  double iou = 0.0;
};

// TP/FP/FN tallies. Invariants: tp + fn = references in scope and
// tp + fp = predictions in scope, overall and per class.
struct MatchResult {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::map<int, Tally> per_class;
  std::vector<MatchedPair> pairs;  // filled only when requested

  Tally totals() const { return {tp, fp, fn}; }
};

struct MetricPoint {
  double alpha = 0.0;
  std::int64_t label_count = 0;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

inline constexpr std::ptrdiff_t kUnmatched = -1;

// Greedy one-to-one assignment. Predictions are visited by confidence
// descending (missing confidence counts as 1.0; ties keep input order). Each
// takes the unmatched same-class reference with the highest IoU, provided
// IoU > iou_threshold; IoU ties go to the lower reference index.
// Returns, per prediction in input order, the reference index or kUnmatched.
std::vector<std::ptrdiff_t> GreedyAssign(std::span<const ObjectLabel> predictions,
                                         std::span<const ObjectLabel> references,
                                         double iou_threshold);

// Tallies one image. `image_id` is only used to label recorded pairs.
MatchResult MatchImage(std::span<const ObjectLabel> predictions,
                       std::span<const ObjectLabel> references,
                       double iou_threshold, bool record_pairs = false,
                       const std::string& image_id = {});

// Component-wise sum; per-class maps merged by key, pairs concatenated.
MatchResult Aggregate(std::span<const MatchResult> results);

// precision = tp/(tp+fp), recall = tp/(tp+fn), f1 = 2tp/(2tp+fp+fn), with
// 0/0 taken as 0.
MetricPoint MetricsFromTallies(const Tally& tally, double alpha,
                               std::int64_t label_count);
MetricPoint MetricsFromTallies(const MatchResult& result, double alpha,
                               std::int64_t label_count);

struct MatchOptions {
  double iou_threshold = 0.5;
  bool record_pairs = false;
};

// Matches every reference image against the predictions for the same image
// (absent prediction images count as empty). Throws kVocabularyMismatch when
// the class lists differ and kImageSetMismatch when predictions name an
// image the references lack. Images are matched in parallel; the result is
// independent of scheduling.
MatchResult MatchLabelSets(const LabelSet& predictions,
                           const LabelSet& references,
                           const MatchOptions& options = {});

// One JSON object per matched pair:
//   {"image_id":..,"prediction":i,"reference":j,"iou":x}
void WritePairsJsonl(const MatchResult& result, std::ostream& out);

}  // namespace autolabel::matcher
