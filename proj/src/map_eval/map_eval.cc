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

#include "autolabel/map_eval/map_eval.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <tuple>

#include <fmt/format.h>

#include "autolabel/core/csv.h"
#include "autolabel/core/error.h"
#include "autolabel/core/parallel.h"
#include "autolabel/matcher/matcher.h"

namespace autolabel::map_eval {

namespace {

constexpr double kThresholdEpsilon = 1e-9;

// Labels of one class on one image, with their positions in the image list.
struct ImageGroup {
  std::size_t image_rank = 0;  // position in image-id order
  std::vector<ObjectLabel> predictions;
  std::vector<std::size_t> prediction_input_index;
  std::vector<ObjectLabel> references;
};

struct ClassData {
  std::vector<ImageGroup> groups;
  std::int64_t num_references = 0;
};

struct Ranked {
  double confidence;
  std::size_t image_rank;
  std::size_t input_index;
  bool tp;
};

std::vector<ClassData> GroupByClass(const LabelSet& predictions,
                                    const LabelSet& references) {
  const std::size_t num_classes = references.vocabulary().size();
  std::vector<ClassData> data(num_classes);
  std::size_t rank = 0;
  for (const auto& [id, entry] : references.images()) {
    std::map<int, ImageGroup> groups;
    for (const auto& ref : entry.labels) {
      auto& g = groups[ref.class_index];
      g.references.push_back(ref);
    }
    const auto preds = predictions.LabelsFor(id);
    for (std::size_t i = 0; i < preds.size(); ++i) {
      if (!preds[i].confidence) {
        throw Error(ErrorCode::kMissingConfidence,
                    fmt::format("image '{}': prediction without confidence "
                                "cannot be ranked",
                                id));
      }
      auto& g = groups[preds[i].class_index];
      g.predictions.push_back(preds[i]);
      g.prediction_input_index.push_back(i);
    }
    for (auto& [cls, g] : groups) {
      g.image_rank = rank;
      data[static_cast<std::size_t>(cls)].num_references +=
          static_cast<std::int64_t>(g.references.size());
      data[static_cast<std::size_t>(cls)].groups.push_back(std::move(g));
    }
    ++rank;
  }
  return data;
}

std::optional<double> ClassAp(const ClassData& data, double iou_threshold,
                              Interpolation interpolation) {
  if (data.num_references == 0) return std::nullopt;
  std::vector<Ranked> ranked;
  for (const auto& g : data.groups) {
    const auto assignment =
        matcher::GreedyAssign(g.predictions, g.references, iou_threshold);
    for (std::size_t i = 0; i < g.predictions.size(); ++i) {
      ranked.push_back({*g.predictions[i].confidence, g.image_rank,
                        g.prediction_input_index[i],
                        assignment[i] != matcher::kUnmatched});
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return std::make_tuple(-a.confidence, a.image_rank, a.input_index) <
           std::make_tuple(-b.confidence, b.image_rank, b.input_index);
  });
  std::unique_ptr<bool[]> flags(new bool[ranked.size()]);
  for (std::size_t i = 0; i < ranked.size(); ++i) flags[i] = ranked[i].tp;
  return InterpolatedAp(std::span<const bool>(flags.get(), ranked.size()),
                        data.num_references, interpolation);
}

std::optional<std::size_t> ThresholdIndex(const std::vector<double>& thresholds,
                                          double value) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (std::fabs(thresholds[i] - value) < kThresholdEpsilon) return i;
  }
  return std::nullopt;
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double SliceMean(const EvalReport& report, std::span<const int> classes,
                 double iou_threshold, const char* which) {
  if (classes.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} class list is empty", which));
  }
  std::vector<double> aps;
  for (int cls : classes) {
    if (auto ap = report.ClassAp(cls, iou_threshold)) aps.push_back(*ap);
  }
  if (aps.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("no class in the {} list has an AP", which));
  }
  return Mean(aps);
}

std::string FormatAp(std::optional<double> ap) {
  return ap ? fmt::format("{:.3f}", *ap) : std::string();
}

void RequireCoveredImages(const LabelSet& predictions,
                          const LabelSet& references) {
  for (const auto& [id, entry] : predictions.images()) {
    if (references.FindImage(id) == nullptr) {
      throw Error(ErrorCode::kImageSetMismatch,
                  fmt::format("predictions cover image '{}' which has no "
                              "reference record",
                              id));
    }
  }
}

}  // namespace

double InterpolatedAp(std::span<const bool> is_tp, std::int64_t num_references,
                      Interpolation interpolation) {
  if (num_references <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "AP needs at least one reference");
  }
  const std::size_t n = is_tp.size();
  std::vector<double> precision(n);
  std::vector<double> recall(n);
  std::int64_t tp = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (is_tp[k]) ++tp;
    precision[k] = static_cast<double>(tp) / static_cast<double>(k + 1);
    recall[k] = static_cast<double>(tp) / static_cast<double>(num_references);
  }
  for (std::size_t k = n; k-- > 1;) {
    precision[k - 1] = std::max(precision[k - 1], precision[k]);
  }

  const int steps = interpolation == Interpolation::kCoco101 ? 100 : 10;
  double sum = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double level = static_cast<double>(i) / steps;
    const auto it = std::lower_bound(recall.begin(), recall.end(), level);
    if (it != recall.end()) {
      sum += precision[static_cast<std::size_t>(it - recall.begin())];
    }
  }
  return sum / (steps + 1);
}

std::optional<double> AveragePrecision(const LabelSet& predictions,
                                       const LabelSet& references,
                                       int class_index, double iou_threshold,
                                       Interpolation interpolation) {
  RequireSameVocabulary(references.vocabulary(), predictions.vocabulary());
  RequireCoveredImages(predictions, references);
  const auto data = GroupByClass(predictions, references);
  return ClassAp(data.at(static_cast<std::size_t>(class_index)), iou_threshold,
                 interpolation);
}

const std::vector<double>& StandardIouThresholds() {
  static const std::vector<double> kThresholds = [] {
    std::vector<double> t;
    for (int i = 0; i < 10; ++i) t.push_back((50 + 5 * i) / 100.0);
    return t;
  }();
  return kThresholds;
}

std::optional<double> EvalReport::ClassAp(int class_index,
                                          double iou_threshold) const {
  const auto it = per_class_ap.find(class_index);
  if (it == per_class_ap.end()) return std::nullopt;
  const auto idx = ThresholdIndex(iou_thresholds, iou_threshold);
  if (!idx) return std::nullopt;
  return it->second[*idx];
}

std::optional<double> EvalReport::ClassAp50To95(int class_index) const {
  std::vector<double> aps;
  for (double t : StandardIouThresholds()) {
    auto ap = ClassAp(class_index, t);
    if (!ap) return std::nullopt;
    aps.push_back(*ap);
  }
  return Mean(aps);
}

EvalReport MeanAp(const LabelSet& predictions, const LabelSet& references,
                  const std::vector<double>& iou_thresholds,
                  Interpolation interpolation) {
  RequireSameVocabulary(references.vocabulary(), predictions.vocabulary());
  if (iou_thresholds.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no IoU thresholds given");
  }
  RequireCoveredImages(predictions, references);

  const auto data = GroupByClass(predictions, references);
  EvalReport report;
  report.class_names = references.vocabulary().names();
  report.iou_thresholds = iou_thresholds;

  std::vector<std::optional<std::vector<double>>> per_class(data.size());
  ParallelFor(data.size(), [&](std::size_t c) {
    if (data[c].num_references == 0) return;
    std::vector<double> aps;
    aps.reserve(iou_thresholds.size());
    for (double t : iou_thresholds) {
      aps.push_back(*ClassAp(data[c], t, interpolation));
    }
    per_class[c] = std::move(aps);
  });

  for (std::size_t c = 0; c < data.size(); ++c) {
    report.class_counts[static_cast<int>(c)] = data[c].num_references;
    if (per_class[c]) {
      report.per_class_ap[static_cast<int>(c)] = std::move(*per_class[c]);
    }
  }
  for (std::size_t t = 0; t < iou_thresholds.size(); ++t) {
    std::vector<double> aps;
    for (const auto& [cls, values] : report.per_class_ap) aps.push_back(values[t]);
    report.map_per_threshold.push_back(Mean(aps));
  }

  if (auto i = ThresholdIndex(iou_thresholds, 0.5)) {
    report.map50 = report.map_per_threshold[*i];
  }
  if (auto i = ThresholdIndex(iou_thresholds, 0.75)) {
    report.map75 = report.map_per_threshold[*i];
  }
  std::vector<double> standard;
  for (double t : StandardIouThresholds()) {
    if (auto i = ThresholdIndex(iou_thresholds, t)) {
      standard.push_back(report.map_per_threshold[*i]);
    }
  }
  if (standard.size() == StandardIouThresholds().size()) {
    report.map50_95 = Mean(standard);
  }
  return report;
}

FrequencyRanking ClassFrequency(const LabelSet& labels, std::size_t k) {
  const std::size_t n = labels.vocabulary().size();
  std::vector<ClassCount> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    counts[i].class_index = static_cast<int>(i);
    counts[i].name = labels.vocabulary().name(static_cast<int>(i));
  }
  for (const auto& [id, entry] : labels.images()) {
    for (const auto& l : entry.labels) {
      ++counts[static_cast<std::size_t>(l.class_index)].count;
    }
  }
  k = std::min(k, n);
  FrequencyRanking ranking;
  auto top = counts;
  std::stable_sort(top.begin(), top.end(),
                   [](const ClassCount& a, const ClassCount& b) {
                     return a.count > b.count;
                   });
  ranking.top.assign(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(k));
  auto bottom = counts;
  std::stable_sort(bottom.begin(), bottom.end(),
                   [](const ClassCount& a, const ClassCount& b) {
                     return a.count < b.count;
                   });
  ranking.bottom.assign(bottom.begin(),
                        bottom.begin() + static_cast<std::ptrdiff_t>(k));
  return ranking;
}

SliceComparison FrequencySliceMap(const EvalReport& report,
                                  std::span<const int> top_classes,
                                  std::span<const int> bottom_classes,
                                  double iou_threshold) {
  SliceComparison out;
  out.top_map = SliceMean(report, top_classes, iou_threshold, "top");
  out.bottom_map = SliceMean(report, bottom_classes, iou_threshold, "bottom");
  if (out.top_map != 0.0) {
    out.percent_diff = (out.bottom_map - out.top_map) / out.top_map * 100.0;
  }
  return out;
}

long RoundPercent(double percent) { return std::lround(percent); }

std::string FormatPercent(std::optional<double> percent) {
  if (!percent) return "n/a";
  return fmt::format("{}%", RoundPercent(*percent));
}

void WriteEvalCsv(const EvalReport& report, std::ostream& out) {
  out << "class,ap50,ap75,ap50_95,ref_count\n";
  for (std::size_t c = 0; c < report.class_names.size(); ++c) {
    const int cls = static_cast<int>(c);
    const auto count_it = report.class_counts.find(cls);
    const std::int64_t count =
        count_it == report.class_counts.end() ? 0 : count_it->second;
    out << CsvEscape(report.class_names[c]) << ','
        << FormatAp(report.ClassAp(cls, 0.5)) << ','
        << FormatAp(report.ClassAp(cls, 0.75)) << ','
        << FormatAp(report.ClassAp50To95(cls)) << ',' << count << '\n';
  }
}

void WriteFrequencySummary(const EvalReport& report,
                           const FrequencyRanking& ranking,
                           std::ostream& out) {
  out << "| Class | Count | AP50 |\n|---|---:|---:|\n";
  std::vector<int> top;
  std::vector<int> bottom;
  for (const auto& c : ranking.top) {
    top.push_back(c.class_index);
    out << fmt::format("| {} | {} | {} |\n", c.name, c.count,
                       FormatAp(report.ClassAp(c.class_index, 0.5)));
  }
  for (const auto& c : ranking.bottom) {
    bottom.push_back(c.class_index);
    out << fmt::format("| {} | {} | {} |\n", c.name, c.count,
                       FormatAp(report.ClassAp(c.class_index, 0.5)));
  }
  std::int64_t total = 0;
  for (const auto& [cls, n] : report.class_counts) total += n;
  try {
    const auto slice = FrequencySliceMap(report, top, bottom);
    out << fmt::format("| {} Most | | {:.3f} |\n", top.size(), slice.top_map);
    out << fmt::format("| {} Least | | {:.3f} |\n", bottom.size(),
                       slice.bottom_map);
    out << fmt::format("| % Diff. | | {} |\n",
                       FormatPercent(slice.percent_diff));
  } catch (const Error&) {
    out << fmt::format("| {} Most | | |\n| {} Least | | |\n| % Diff. | | n/a |\n",
                       top.size(), bottom.size());
  }
  out << fmt::format("| All | {} | {} |\n", total, FormatAp(report.map50));
}

}  // namespace autolabel::map_eval
