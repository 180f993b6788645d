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

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "autolabel/core/label_set.h"

namespace autolabel::map_eval {

enum class Interpolation {
  kCoco101,  // mean of the precision envelope at recall 0.00, 0.01, ..., 1.00
  kVoc11,    // mean of the precision envelope at recall 0.0, 0.1, ..., 1.0
};

// AP of a ranked detection list. `is_tp` is in rank order (best first).
// Returns 0 when there are no detections; num_references must be > 0.
double InterpolatedAp(std::span<const bool> is_tp, std::int64_t num_references,
                      Interpolation interpolation = Interpolation::kCoco101);

// Dataset-wide AP for one class. Predictions are ranked by confidence
// descending with ties broken by image id, then input order; TP/FP comes from
// the per-image greedy matcher at `iou_threshold` (strict >). Returns nullopt
// when the class has no references. Throws kMissingConfidence if a
// prediction lacks a confidence.
std::optional<double> AveragePrecision(
    const LabelSet& predictions, const LabelSet& references, int class_index,
    double iou_threshold,
    Interpolation interpolation = Interpolation::kCoco101);

// {0.50, 0.55, ..., 0.95}
const std::vector<double>& StandardIouThresholds();

struct EvalReport {
  std::vector<std::string> class_names;
  std::vector<double> iou_thresholds;
  // Classes with at least one reference; one AP per IoU threshold.
  std::map<int, std::vector<double>> per_class_ap;
  // Unweighted mean over per_class_ap at each threshold (0 when empty).
  std::vector<double> map_per_threshold;
  // Reference count for every vocabulary class, zero included.
  std::map<int, std::int64_t> class_counts;
  // Present when the corresponding thresholds were evaluated; map50_95 needs
  // all ten standard thresholds.
  std::optional<double> map50;
  std::optional<double> map75;
  std::optional<double> map50_95;

  std::optional<double> ClassAp(int class_index, double iou_threshold) const;
  // Mean over the ten standard thresholds for one class.
  std::optional<double> ClassAp50To95(int class_index) const;
};

// Throws kVocabularyMismatch for differing class lists and kInvalidArgument
// for an empty threshold list.
EvalReport MeanAp(const LabelSet& predictions, const LabelSet& references,
                  const std::vector<double>& iou_thresholds =
                      StandardIouThresholds(),
                  Interpolation interpolation = Interpolation::kCoco101);

struct ClassCount {
  int class_index = 0;
  std::string name;
  std::int64_t count = 0;
};

struct FrequencyRanking {
  std::vector<ClassCount> top;     // most frequent first
  std::vector<ClassCount> bottom;  // least frequent first
};

// Label counts per class; ties ordered by vocabulary index. Classes with no
// labels take part in the bottom ranking. k is clamped to the class count.
FrequencyRanking ClassFrequency(const LabelSet& labels, std::size_t k);

struct SliceComparison {
  double top_map = 0.0;
  double bottom_map = 0.0;
  // (bottom - top) / top * 100; absent when top_map is 0.
  std::optional<double> percent_diff;
};

// Unweighted mean AP over each class list at `iou_threshold`. Classes without
// an AP in the report are skipped. Throws kInvalidArgument when a list is
// empty or has no evaluated class.
SliceComparison FrequencySliceMap(const EvalReport& report,
                                  std::span<const int> top_classes,
                                  std::span<const int> bottom_classes,
                                  double iou_threshold = 0.5);

// Whole-percent display value, halves rounded away from zero.
long RoundPercent(double percent);
std::string FormatPercent(std::optional<double> percent);

// class,ap50,ap75,ap50_95,ref_count; one row per vocabulary class, AP cells
// empty where undefined.
void WriteEvalCsv(const EvalReport& report, std::ostream& out);

// Markdown block: per-class rows for the ranked classes, then "k Most",
// "k Least", "% Diff." and "All" rows, AP at IoU 0.5.
void WriteFrequencySummary(const EvalReport& report,
                           const FrequencyRanking& ranking,
                           std::ostream& out);

}  // namespace autolabel::map_eval
