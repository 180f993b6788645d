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

#include "autolabel/matcher/matcher.h"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "autolabel/core/error.h"
#include "autolabel/core/parallel.h"
#include "json.hpp"

namespace autolabel::matcher {

namespace {

double Ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::vector<std::ptrdiff_t> GreedyAssign(
    std::span<const ObjectLabel> predictions,
    std::span<const ObjectLabel> references, double iou_threshold) {
  std::vector<std::size_t> order(predictions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return predictions[a].confidence.value_or(1.0) >
           predictions[b].confidence.value_or(1.0);
  });

  std::vector<std::ptrdiff_t> assignment(predictions.size(), kUnmatched);
  std::vector<bool> taken(references.size(), false);
  for (const std::size_t p : order) {
    const ObjectLabel& pred = predictions[p];
    std::ptrdiff_t best = kUnmatched;
    double best_iou = iou_threshold;
    for (std::size_t r = 0; r < references.size(); ++r) {
      if (taken[r] || references[r].class_index != pred.class_index) continue;
      const double iou = Iou(pred.box, references[r].box);
      if (iou > best_iou) {
        best_iou = iou;
        best = static_cast<std::ptrdiff_t>(r);
      }
    }
    if (best != kUnmatched) {
      taken[static_cast<std::size_t>(best)] = true;
      assignment[p] = best;
    }
  }
  return assignment;
}

MatchResult MatchImage(std::span<const ObjectLabel> predictions,
                       std::span<const ObjectLabel> references,
                       double iou_threshold, bool record_pairs,
                       const std::string& image_id) {
  const auto assignment = GreedyAssign(predictions, references, iou_threshold);
  MatchResult result;
  std::vector<bool> matched(references.size(), false);
  for (std::size_t p = 0; p < predictions.size(); ++p) {
    Tally& cls = result.per_class[predictions[p].class_index];
    if (assignment[p] == kUnmatched) {
      ++result.fp;
      ++cls.fp;
      continue;
    }
    const auto r = static_cast<std::size_t>(assignment[p]);
    matched[r] = true;
    ++result.tp;
    ++cls.tp;
    if (record_pairs) {
      result.pairs.push_back(
          {image_id, p, r, Iou(predictions[p].box, references[r].box)});
    }
  }
  for (std::size_t r = 0; r < references.size(); ++r) {
    if (matched[r]) continue;
    ++result.fn;
    ++result.per_class[references[r].class_index].fn;
  }
  return result;
}

MatchResult Aggregate(std::span<const MatchResult> results) {
  MatchResult total;
  for (const auto& r : results) {
    total.tp += r.tp;
    total.fp += r.fp;
    total.fn += r.fn;
    for (const auto& [cls, tally] : r.per_class) total.per_class[cls] += tally;
    total.pairs.insert(total.pairs.end(), r.pairs.begin(), r.pairs.end());
  }
  return total;
}

MetricPoint MetricsFromTallies(const Tally& t, double alpha,
                               std::int64_t label_count) {
  MetricPoint m;
  m.alpha = alpha;
  m.label_count = label_count;
  m.tp = t.tp;
  m.fp = t.fp;
  m.fn = t.fn;
  m.precision = Ratio(t.tp, t.tp + t.fp);
  m.recall = Ratio(t.tp, t.tp + t.fn);
  m.f1 = Ratio(2 * t.tp, 2 * t.tp + t.fp + t.fn);
  return m;
}

MetricPoint MetricsFromTallies(const MatchResult& result, double alpha,
                               std::int64_t label_count) {
  return MetricsFromTallies(result.totals(), alpha, label_count);
}

MatchResult MatchLabelSets(const LabelSet& predictions,
                           const LabelSet& references,
                           const MatchOptions& options) {
  RequireSameVocabulary(references.vocabulary(), predictions.vocabulary());
  for (const auto& [id, entry] : predictions.images()) {
    if (references.FindImage(id) == nullptr) {
      throw Error(ErrorCode::kImageSetMismatch,
                  fmt::format("predictions cover image '{}' which has no "
                              "reference record",
                              id));
    }
  }

  std::vector<const std::pair<const std::string, ImageEntry>*> images;
  images.reserve(references.image_count());
  for (const auto& item : references.images()) images.push_back(&item);

  std::vector<MatchResult> per_image(images.size());
  ParallelFor(images.size(), [&](std::size_t i) {
    const auto& [id, entry] = *images[i];
    per_image[i] = MatchImage(predictions.LabelsFor(id), entry.labels,
                              options.iou_threshold, options.record_pairs, id);
  });
  return Aggregate(per_image);
}

void WritePairsJsonl(const MatchResult& result, std::ostream& out) {
  for (const auto& pair : result.pairs) {
    nlohmann::json rec = {{"image_id", pair.image_id},
                          {"prediction", pair.prediction_index},
                          {"reference", pair.reference_index},
                          {"iou", pair.iou}};
    out << rec.dump() << '\n';
  }
}

}  // namespace autolabel::matcher
