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

#include "autolabel/sweep/sweep.h"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "autolabel/core/csv.h"
#include "autolabel/core/error.h"
#include "autolabel/core/filter.h"
#include "json.hpp"

namespace autolabel::sweep {

namespace {

template <typename T>
T ParseField(const std::string& s, const std::string& where) {
  T value{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kFormat,
                fmt::format("{}: cannot parse '{}'", where, s));
  }
  return value;
}

template <typename Key>
const MetricPoint& BestBy(const MetricCurve& curve, Key key) {
  if (curve.points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "curve has no points");
  }
  const MetricPoint* best = &curve.points.front();
  for (const auto& p : curve.points) {
    if (key(p) > key(*best)) best = &p;
  }
  return *best;
}

}  // namespace

const std::vector<double>& DefaultAlphaGrid() {
  static const std::vector<double> kGrid = {0.025, 0.05, 0.1, 0.15, 0.2,
                                            0.3,   0.4,  0.5, 0.6,  0.7,
                                            0.8,   0.85, 0.9, 0.95, 0.975};
  return kGrid;
}

std::vector<double> NormalizeAlphaGrid(std::vector<double> alphas) {
  if (alphas.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alpha grid is empty");
  }
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("alpha {} outside [0, 1]", a));
    }
  }
  std::sort(alphas.begin(), alphas.end());
  if (std::adjacent_find(alphas.begin(), alphas.end()) != alphas.end()) {
    throw Error(ErrorCode::kInvalidArgument, "alpha grid has duplicates");
  }
  return alphas;
}

MetricCurve Sweep(const LabelSet& raw, const LabelSet& reference,
                  const std::vector<double>& alphas, double iou_threshold,
                  std::string model_tag, std::string dataset_tag) {
  RequireSameVocabulary(reference.vocabulary(), raw.vocabulary());
  const auto grid = NormalizeAlphaGrid(alphas);
  MetricCurve curve{std::move(model_tag), std::move(dataset_tag), {}};
  curve.points.reserve(grid.size());
  matcher::MatchOptions options;
  options.iou_threshold = iou_threshold;
  for (double alpha : grid) {
    const LabelSet filtered = FilterByConfidence(raw, alpha);
    const auto result = matcher::MatchLabelSets(filtered, reference, options);
    curve.points.push_back(matcher::MetricsFromTallies(
        result, alpha, static_cast<std::int64_t>(filtered.label_count())));
  }
  return curve;
}

const MetricPoint& BestF1(const MetricCurve& curve) {
  return BestBy(curve, [](const MetricPoint& p) { return p.f1; });
}

const MetricPoint& BestRecall(const MetricCurve& curve) {
  return BestBy(curve, [](const MetricPoint& p) { return p.recall; });
}

void WriteCurveCsv(const MetricCurve& curve, std::ostream& out) {
  out << kCurveCsvHeader << '\n';
  for (const auto& p : curve.points) {
    out << fmt::format("{},{},{},{},{},{:.6f},{:.6f},{:.6f}\n", p.alpha,
                       p.label_count, p.tp, p.fp, p.fn, p.precision, p.recall,
                       p.f1);
  }
}

void WriteCurveJsonl(const MetricCurve& curve, std::ostream& out) {
  for (const auto& p : curve.points) {
    nlohmann::json rec = {{"model", curve.model_tag},
                          {"dataset", curve.dataset_tag},
                          {"alpha", p.alpha},
                          {"label_count", p.label_count},
                          {"tp", p.tp},
                          {"fp", p.fp},
                          {"fn", p.fn},
                          {"precision", p.precision},
                          {"recall", p.recall},
                          {"f1", p.f1}};
    out << rec.dump() << '\n';
  }
}

MetricCurve ReadCurveCsv(std::istream& in, std::string model_tag,
                         std::string dataset_tag,
                         const std::string& source_name) {
  MetricCurve curve{std::move(model_tag), std::move(dataset_tag), {}};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1) {
      if (line != kCurveCsvHeader) {
        throw Error(ErrorCode::kFormat,
                    fmt::format("{}: unexpected curve header '{}'",
                                source_name, line));
      }
      continue;
    }
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    const std::string where = fmt::format("{}:{}", source_name, number);
    if (f.size() != 8) {
      throw Error(ErrorCode::kFormat, fmt::format("{}: expected 8 columns", where));
    }
    MetricPoint p;
    p.alpha = ParseField<double>(f[0], where);
    p.label_count = ParseField<std::int64_t>(f[1], where);
    p.tp = ParseField<std::int64_t>(f[2], where);
    p.fp = ParseField<std::int64_t>(f[3], where);
    p.fn = ParseField<std::int64_t>(f[4], where);
    // Ratios are recomputed from the exact tallies rather than the rounded
    // text.
    const auto exact = matcher::MetricsFromTallies(
        matcher::Tally{p.tp, p.fp, p.fn}, p.alpha, p.label_count);
    curve.points.push_back(exact);
  }
  if (number == 0) {
    throw Error(ErrorCode::kFormat, fmt::format("{}: empty curve file", source_name));
  }
  return curve;
}

}  // namespace autolabel::sweep
