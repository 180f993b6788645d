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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace autolabel::cost {

// Exact fixed-point quantities. Rates such as $0.036/box and $0.93/h are
// integral in micro-dollars, so no float ever touches a displayed cent.
struct Money {
  std::int64_t micro_dollars = 0;

  friend Money operator+(Money a, Money b) {
    return {a.micro_dollars + b.micro_dollars};
  }
  friend bool operator==(Money, Money) = default;
};

struct Duration {
  std::int64_t microseconds = 0;

  double hours() const { return static_cast<double>(microseconds) / 3.6e9; }
  friend Duration operator+(Duration a, Duration b) {
    return {a.microseconds + b.microseconds};
  }
  friend bool operator==(Duration, Duration) = default;
};

struct CostAssumptions {
  Duration time_per_box{7'000'000};           // 7 s
  Money service_cost_per_box{36'000};         // $0.036
  Money gpu_rate_per_hour{930'000};           // $0.93
};

// Parses a plain decimal ("0.036", "1,442.09", "$0.93") into an integer
// scaled by 10^scale_digits. Extra fractional digits beyond the scale must be
// zero. Throws kInvalidArgument on malformed or negative input.
std::int64_t ParseFixedPoint(std::string_view text, int scale_digits);

Money ParseDollars(std::string_view text);
// Hours given as a decimal, kept to the microsecond.
Duration ParseHours(std::string_view text);

Duration HumanTime(std::int64_t objects, const CostAssumptions& assumptions);
Money ServiceCost(std::int64_t objects, const CostAssumptions& assumptions);
// al_wall_time x gpu rate, rounded half-up to the micro-dollar.
Money AutoLabelCost(Duration al_wall_time, const CostAssumptions& assumptions);

// Display helpers, all rounding half-up.
std::int64_t RoundToWholeHours(Duration d);
std::string FormatWholeHours(Duration d);           // "2,502"
std::string FormatHours2(Duration d);               // "0.45"
std::string FormatDollars(Money m);                 // "$1,442.09"
std::string FormatCount(std::int64_t n);            // "1,286,871"

struct CostRow {
  std::string dataset;
  std::optional<std::int64_t> classes;
  std::int64_t objects = 0;
  Duration al_wall_time;
};

struct CostLine {
  std::string dataset;
  std::optional<std::int64_t> classes;
  std::int64_t objects = 0;
  Duration human_time;
  Money service_cost;
  Duration al_time;
  Money al_cost;
};

// Per-dataset lines plus a totals line holding the exact column sums.
struct CostReport {
  std::vector<CostLine> rows;
  CostLine totals;
};

CostReport BuildCostReport(const std::vector<CostRow>& rows,
                           const CostAssumptions& assumptions = {});

// dataset,classes,objects,al_hours rows (header required).
std::vector<CostRow> ReadCostRowsCsv(std::istream& in,
                                     const std::string& source_name);

// Column order: Dataset, # of Classes, Objects, Human Hours, Annotation
// Service Cost, Auto-Labeling Hours, Auto-Labeling Cost.
void WriteCostMarkdown(const CostReport& report, std::ostream& out);
void WriteCostCsv(const CostReport& report, std::ostream& out);

}  // namespace autolabel::cost
