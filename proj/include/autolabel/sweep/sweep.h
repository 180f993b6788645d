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

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "autolabel/core/label_set.h"
#include "autolabel/matcher/matcher.h"

namespace autolabel::sweep {

using matcher::MetricPoint;

// Metrics of one auto-labeler on one dataset across confidence thresholds.
// Points are sorted by strictly increasing alpha.
struct MetricCurve {
  std::string model_tag;
  std::string dataset_tag;
  std::vector<MetricPoint> points;
};

// {0.025, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.85, 0.9, 0.95,
//  0.975}
const std::vector<double>& DefaultAlphaGrid();

// Sorts the grid and validates it: non-empty, every value in [0, 1], no
// duplicates. Throws kInvalidArgument otherwise.
std::vector<double> NormalizeAlphaGrid(std::vector<double> alphas);

// For each alpha: keep raw labels with confidence > alpha, match against the
// references, aggregate, and record the dataset-level metrics together with
// the surviving label count.
MetricCurve Sweep(const LabelSet& raw, const LabelSet& reference,
                  const std::vector<double>& alphas, double iou_threshold,
                  std::string model_tag = {}, std::string dataset_tag = {});

// Highest F1 (ties: smallest alpha). Throws kInvalidArgument on an empty
// curve.
const MetricPoint& BestF1(const MetricCurve& curve);
// Highest recall (ties: smallest alpha).
const MetricPoint& BestRecall(const MetricCurve& curve);

inline constexpr char kCurveCsvHeader[] =
    "alpha,label_count,tp,fp,fn,precision,recall,f1";

void WriteCurveCsv(const MetricCurve& curve, std::ostream& out);
// One JSON object per point, tagged with model and dataset.
void WriteCurveJsonl(const MetricCurve& curve, std::ostream& out);
// Reads the CSV written by WriteCurveCsv. Tags are supplied by the caller.
MetricCurve ReadCurveCsv(std::istream& in, std::string model_tag,
                         std::string dataset_tag,
                         const std::string& source_name = "<stream>");

}  // namespace autolabel::sweep
