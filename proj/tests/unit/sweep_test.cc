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

#include <sstream>

#include <gtest/gtest.h>

#include "autolabel/core/filter.h"
#include "autolabel/sweep/sweep.h"
#include "test_support.h"

namespace autolabel::sweep {
namespace {

using autolabel::testing::Gen;

MetricPoint Point(double alpha, double f1, double recall) {
  MetricPoint p;
  p.alpha = alpha;
  p.f1 = f1;
  p.recall = recall;
  return p;
}

TEST(AlphaGridTest, DefaultGrid) {
  EXPECT_EQ(DefaultAlphaGrid(),
            (std::vector<double>{0.025, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5,
                                 0.6, 0.7, 0.8, 0.85, 0.9, 0.95, 0.975}));
}

TEST(AlphaGridTest, NormalizeSortsAndValidates) {
  EXPECT_EQ(NormalizeAlphaGrid({0.5, 0.1, 0.9}),
            (std::vector<double>{0.1, 0.5, 0.9}));
  for (const auto& bad : std::vector<std::vector<double>>{
           {}, {0.5, 0.5}, {-0.1}, {1.5}}) {
    try {
      NormalizeAlphaGrid(bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}

TEST(BestTest, TiesGoToSmallestAlpha) {
  MetricCurve c{"m", "d", {Point(0.1, 0.5, 0.9), Point(0.2, 0.7, 0.9),
                           Point(0.3, 0.7, 0.4)}};
  EXPECT_EQ(BestF1(c).alpha, 0.2);
  EXPECT_EQ(BestRecall(c).alpha, 0.1);
}

TEST(BestTest, SinglePointAndEmpty) {
  MetricCurve one{"m", "d", {Point(0.4, 0.3, 0.2)}};
  EXPECT_EQ(BestF1(one).alpha, 0.4);
  EXPECT_EQ(BestRecall(one).alpha, 0.4);
  MetricCurve none;
  EXPECT_THROW(BestF1(none), Error);
  EXPECT_THROW(BestRecall(none), Error);
}

TEST(BestTest, TableFiveRecallRows) {
  MetricCurve c{"YOLOW", "VOC", {Point(0.2, 0.715, 0.893), Point(0.5, 0.785, 0.785),
                                 Point(0.8, 0.700, 0.558)}};
  EXPECT_EQ(BestRecall(c).alpha, 0.2);
  EXPECT_EQ(BestF1(c).alpha, 0.5);
}

TEST(BestTest, MonotoneRecallPicksSmallestAlpha) {
  MetricCurve c;
  double recall = 1.0;
  for (double a : DefaultAlphaGrid()) {
    c.points.push_back(Point(a, 0.5, recall));
    recall -= 0.05;
  }
  EXPECT_EQ(BestRecall(c).alpha, 0.025);
}

TEST(SweepTest, SinglePointEqualsDirectComposition) {
  Gen gen(201);
  auto pair = gen.Datasets(10, 3, 6, 4);
  const auto curve = Sweep(pair.predictions, pair.references, {0.4}, 0.5);
  ASSERT_EQ(curve.points.size(), 1u);
  const LabelSet filtered = FilterByConfidence(pair.predictions, 0.4);
  const auto direct = matcher::MetricsFromTallies(
      matcher::MatchLabelSets(filtered, pair.references), 0.4,
      static_cast<std::int64_t>(filtered.label_count()));
  const auto& p = curve.points[0];
  EXPECT_EQ(p.tp, direct.tp);
  EXPECT_EQ(p.fp, direct.fp);
  EXPECT_EQ(p.fn, direct.fn);
  EXPECT_EQ(p.label_count, direct.label_count);
  EXPECT_EQ(p.f1, direct.f1);
}

TEST(SweepTest, MonotoneAndReproduciblePerPoint) {
  Gen gen(202);
  for (int trial = 0; trial < 20; ++trial) {
    auto pair = gen.Datasets(8, 3, 8, 5);
    const auto curve =
        Sweep(pair.predictions, pair.references, DefaultAlphaGrid(), 0.5);
    ASSERT_EQ(curve.points.size(), 15u);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      const auto& prev = curve.points[i - 1];
      const auto& cur = curve.points[i];
      EXPECT_LT(prev.alpha, cur.alpha);
      EXPECT_LE(cur.label_count, prev.label_count);
      EXPECT_LE(cur.tp, prev.tp);
      EXPECT_LE(cur.recall, prev.recall);
    }
    const std::size_t k = static_cast<std::size_t>(gen.Int(0, 14));
    const auto single = Sweep(pair.predictions, pair.references,
                              {curve.points[k].alpha}, 0.5);
    EXPECT_EQ(single.points[0].tp, curve.points[k].tp);
    EXPECT_EQ(single.points[0].fp, curve.points[k].fp);
  }
}

TEST(SweepTest, VocabularyMismatch) {
  LabelSet a(ClassVocabulary({"x"}));
  LabelSet b(ClassVocabulary({"y"}));
  EXPECT_THROW(Sweep(a, b, {0.5}, 0.5), Error);
}

TEST(CurveCsvTest, RoundTrip) {
  Gen gen(203);
  auto pair = gen.Datasets(6, 2, 6, 3);
  const auto curve = Sweep(pair.predictions, pair.references,
                           DefaultAlphaGrid(), 0.5, "m", "d");
  std::ostringstream out;
  WriteCurveCsv(curve, out);
  std::istringstream in(out.str());
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), kCurveCsvHeader);
  const auto back = ReadCurveCsv(in, "m", "d");
  ASSERT_EQ(back.points.size(), curve.points.size());
  for (std::size_t i = 0; i < back.points.size(); ++i) {
    EXPECT_EQ(back.points[i].alpha, curve.points[i].alpha);
    EXPECT_EQ(back.points[i].tp, curve.points[i].tp);
    EXPECT_EQ(back.points[i].label_count, curve.points[i].label_count);
    EXPECT_DOUBLE_EQ(back.points[i].f1, curve.points[i].f1);
  }
}

TEST(CurveCsvTest, RejectsBadHeader) {
  std::istringstream in("alpha,f1\n0.5,0.3\n");
  EXPECT_THROW(ReadCurveCsv(in, "m", "d"), Error);
}

}  // namespace
}  // namespace autolabel::sweep
