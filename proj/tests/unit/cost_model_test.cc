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

#include "autolabel/cost/cost_model.h"
#include "test_support.h"

namespace autolabel::cost {
namespace {

using autolabel::testing::Gen;

TEST(CostTest, HumanHours) {
  const CostAssumptions a;
  EXPECT_NEAR(HumanTime(40058, a).hours(), 77.89, 0.01);
  EXPECT_EQ(FormatWholeHours(HumanTime(40058, a)), "78");
  EXPECT_EQ(FormatWholeHours(HumanTime(0, a)), "0");
  EXPECT_EQ(FormatWholeHours(HumanTime(1286871, a)), "2,502");
}

TEST(CostTest, ServiceCost) {
  const CostAssumptions a;
  EXPECT_EQ(FormatDollars(ServiceCost(40058, a)), "$1,442.09");
  EXPECT_EQ(FormatDollars(ServiceCost(849945, a)), "$30,598.02");
  EXPECT_EQ(FormatDollars(ServiceCost(0, a)), "$0.00");
}

TEST(CostTest, AutoLabelCost) {
  const CostAssumptions a;
  EXPECT_EQ(FormatDollars(AutoLabelCost(ParseHours("1.27"), a)), "$1.18");
  EXPECT_EQ(FormatDollars(AutoLabelCost(ParseHours("0"), a)), "$0.00");
  EXPECT_EQ(FormatDollars(AutoLabelCost(ParseHours("0.45"), a)), "$0.42");
}

TEST(CostTest, HalfUpAtDisplay) {
  EXPECT_EQ(FormatDollars({5'000}), "$0.01");
  EXPECT_EQ(FormatDollars({4'999}), "$0.00");
  EXPECT_EQ(FormatHours2(ParseHours("0.005")), "0.01");
  EXPECT_EQ(FormatWholeHours({1'800'000'000}), "1");
}

TEST(CostTest, ParseFixedPoint) {
  EXPECT_EQ(ParseFixedPoint("1,442.09", 2), 144209);
  EXPECT_EQ(ParseFixedPoint("$0.93", 6), 930000);
  EXPECT_EQ(ParseFixedPoint("7", 6), 7000000);
  EXPECT_EQ(ParseFixedPoint("0.0360", 3), 36);
  EXPECT_THROW(ParseFixedPoint("0.0361", 3), Error);
  EXPECT_THROW(ParseFixedPoint("-1", 2), Error);
  EXPECT_THROW(ParseFixedPoint("abc", 2), Error);
  EXPECT_THROW(ParseFixedPoint("", 2), Error);
}

TEST(CostTest, LinearBeforeRounding) {
  const CostAssumptions a;
  Gen gen(401);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t x = gen.Int(0, 2'000'000);
    const std::int64_t y = gen.Int(0, 2'000'000);
    EXPECT_EQ(HumanTime(x + y, a), HumanTime(x, a) + HumanTime(y, a));
    EXPECT_EQ(ServiceCost(x + y, a), ServiceCost(x, a) + ServiceCost(y, a));
  }
}

TEST(CostTest, TotalsAreColumnSums) {
  Gen gen(402);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CostRow> rows;
    for (int i = 0, n = gen.Int(1, 8); i < n; ++i) {
      rows.push_back({"d" + std::to_string(i), gen.Int(1, 2000),
                      gen.Int(0, 3'000'000), {gen.Int(0, 100'000'000)}});
    }
    const auto report = BuildCostReport(rows);
    Money service;
    Money al;
    Duration human;
    std::int64_t cents_sum = 0;
    for (const auto& l : report.rows) {
      service = service + l.service_cost;
      al = al + l.al_cost;
      human = human + l.human_time;
      cents_sum += (l.service_cost.micro_dollars + 5000) / 10000;
    }
    EXPECT_EQ(report.totals.service_cost, service);
    EXPECT_EQ(report.totals.al_cost, al);
    EXPECT_EQ(report.totals.human_time, human);
    const std::int64_t total_cents =
        (report.totals.service_cost.micro_dollars + 5000) / 10000;
    EXPECT_LT(std::llabs(total_cents - cents_sum),
              static_cast<long long>(report.rows.size()));
  }
}

TEST(CostTest, RowsCsv) {
  std::istringstream in(
      "dataset,classes,objects,al_hours\nVOC,20,\"40,058\",0.06\nX,,5,0\n");
  const auto rows = ReadCostRowsCsv(in, "rows.csv");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].objects, 40058);
  EXPECT_EQ(rows[0].classes, 20);
  EXPECT_FALSE(rows[1].classes.has_value());
  std::istringstream bad("name,objects\n");
  EXPECT_THROW(ReadCostRowsCsv(bad, "bad.csv"), Error);
}

TEST(CostTest, MarkdownColumnOrder) {
  const auto report = BuildCostReport({{"VOC", 20, 40058, ParseHours("0.06")}});
  std::ostringstream out;
  WriteCostMarkdown(report, out);
  const std::string s = out.str();
  EXPECT_EQ(s.substr(0, s.find('\n')),
            "| Dataset | # of Classes | Objects | Human Hours | Annotation "
            "Service Cost | Auto-Labeling Hours | Auto-Labeling Cost |");
  EXPECT_NE(s.find("| VOC | 20 | 40,058 | 78 | $1,442.09 | 0.06 |"),
            std::string::npos)
      << s;
}

}  // namespace
}  // namespace autolabel::cost
