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

#include "autolabel/cost/cost_model.h"

#include <istream>

#include <fmt/format.h>

#include "autolabel/core/csv.h"
#include "autolabel/core/error.h"

namespace autolabel::cost {

namespace {

constexpr std::int64_t kMicrosPerHour = 3'600'000'000;

std::int64_t Pow10(int digits) {
  std::int64_t v = 1;
  for (int i = 0; i < digits; ++i) v *= 10;
  return v;
}

// Half-up division for non-negative operands.
std::int64_t DivRound(std::int64_t num, std::int64_t den) {
  return (num + den / 2) / den;
}

std::string GroupThousands(std::int64_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  const int len = static_cast<int>(digits.size());
  for (int i = 0; i < len; ++i) {
    if (i > 0 && (len - i) % 3 == 0) out += ',';
    out += digits[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

std::int64_t ParseFixedPoint(std::string_view text, int scale_digits) {
  auto bad = [&] {
    return Error(ErrorCode::kInvalidArgument,
                 fmt::format("'{}' is not a non-negative decimal", text));
  };
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '$') s.remove_prefix(1);
  if (s.empty()) throw bad();

  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (char c : s) {
    if (c == ',' && !seen_point) continue;
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw bad();
    any_digit = true;
    const int d = c - '0';
    if (!seen_point) {
      whole = whole * 10 + d;
    } else if (frac_digits < scale_digits) {
      frac = frac * 10 + d;
      ++frac_digits;
    } else if (d != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("'{}' has more than {} decimal places", text,
                              scale_digits));
    }
  }
  if (!any_digit) throw bad();
  return whole * Pow10(scale_digits) + frac * Pow10(scale_digits - frac_digits);
}

Money ParseDollars(std::string_view text) { return {ParseFixedPoint(text, 6)}; }

Duration ParseHours(std::string_view text) {
  // Microhours are exact for any input with up to 6 decimals.
  const std::int64_t micro_hours = ParseFixedPoint(text, 6);
  return {micro_hours * (kMicrosPerHour / 1'000'000)};
}

Duration HumanTime(std::int64_t objects, const CostAssumptions& a) {
  return {objects * a.time_per_box.microseconds};
}

Money ServiceCost(std::int64_t objects, const CostAssumptions& a) {
  return {objects * a.service_cost_per_box.micro_dollars};
}

Money AutoLabelCost(Duration al_wall_time, const CostAssumptions& a) {
  const __int128 product = static_cast<__int128>(al_wall_time.microseconds) *
                           a.gpu_rate_per_hour.micro_dollars;
  return {static_cast<std::int64_t>((product + kMicrosPerHour / 2) /
                                    kMicrosPerHour)};
}

std::int64_t RoundToWholeHours(Duration d) {
  return DivRound(d.microseconds, kMicrosPerHour);
}

std::string FormatWholeHours(Duration d) {
  return GroupThousands(RoundToWholeHours(d));
}

std::string FormatHours2(Duration d) {
  const std::int64_t hundredths = DivRound(d.microseconds, kMicrosPerHour / 100);
  return fmt::format("{}.{:02}", GroupThousands(hundredths / 100),
                     hundredths % 100);
}

std::string FormatDollars(Money m) {
  const std::int64_t cents = DivRound(m.micro_dollars, 10'000);
  return fmt::format("${}.{:02}", GroupThousands(cents / 100), cents % 100);
}

std::string FormatCount(std::int64_t n) { return GroupThousands(n); }

CostReport BuildCostReport(const std::vector<CostRow>& rows,
                           const CostAssumptions& assumptions) {
  CostReport report;
  report.totals.dataset = "Total";
  for (const auto& row : rows) {
    if (row.objects < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("dataset '{}' has a negative object count",
                              row.dataset));
    }
    CostLine line;
    line.dataset = row.dataset;
    line.classes = row.classes;
    line.objects = row.objects;
    line.human_time = HumanTime(row.objects, assumptions);
    line.service_cost = ServiceCost(row.objects, assumptions);
    line.al_time = row.al_wall_time;
    line.al_cost = AutoLabelCost(row.al_wall_time, assumptions);

    report.totals.objects += line.objects;
    report.totals.human_time = report.totals.human_time + line.human_time;
    report.totals.service_cost = report.totals.service_cost + line.service_cost;
    report.totals.al_time = report.totals.al_time + line.al_time;
    report.totals.al_cost = report.totals.al_cost + line.al_cost;
    report.rows.push_back(std::move(line));
  }
  return report;
}

std::vector<CostRow> ReadCostRowsCsv(std::istream& in,
                                     const std::string& source_name) {
  std::vector<CostRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1) {
      if (line != "dataset,classes,objects,al_hours") {
        throw Error(ErrorCode::kFormat,
                    fmt::format("{}: expected header "
                                "'dataset,classes,objects,al_hours'",
                                source_name));
      }
      continue;
    }
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 4) {
      throw Error(ErrorCode::kFormat,
                  fmt::format("{}:{}: expected 4 columns", source_name, number));
    }
    CostRow row;
    row.dataset = f[0];
    if (!f[1].empty()) row.classes = ParseFixedPoint(f[1], 0);
    row.objects = ParseFixedPoint(f[2], 0);
    row.al_wall_time = ParseHours(f[3]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteCostMarkdown(const CostReport& report, std::ostream& out) {
  out << "| Dataset | # of Classes | Objects | Human Hours | "
         "Annotation Service Cost | Auto-Labeling Hours | Auto-Labeling Cost |\n"
      << "|---|---:|---:|---:|---:|---:|---:|\n";
  auto emit = [&out](const CostLine& l, bool total) {
    const std::string classes =
        total ? "-" : (l.classes ? FormatCount(*l.classes) : "");
    out << fmt::format("| {} | {} | {} | {} | {} | {} | {} |\n", l.dataset,
                       classes, FormatCount(l.objects),
                       FormatWholeHours(l.human_time),
                       FormatDollars(l.service_cost), FormatHours2(l.al_time),
                       FormatDollars(l.al_cost));
  };
  for (const auto& l : report.rows) emit(l, false);
  emit(report.totals, true);
}

void WriteCostCsv(const CostReport& report, std::ostream& out) {
  out << "dataset,classes,objects,human_hours,service_cost,al_hours,al_cost\n";
  auto emit = [&out](const CostLine& l) {
    const std::int64_t cents = DivRound(l.service_cost.micro_dollars, 10'000);
    const std::int64_t al_cents = DivRound(l.al_cost.micro_dollars, 10'000);
    const std::int64_t al_hundredths =
        DivRound(l.al_time.microseconds, kMicrosPerHour / 100);
    out << CsvEscape(l.dataset) << ','
        << (l.classes ? std::to_string(*l.classes) : std::string()) << ','
        << l.objects << ',' << RoundToWholeHours(l.human_time) << ','
        << fmt::format("{}.{:02}", cents / 100, cents % 100) << ','
        << fmt::format("{}.{:02}", al_hundredths / 100, al_hundredths % 100)
        << ',' << fmt::format("{}.{:02}", al_cents / 100, al_cents % 100)
        << '\n';
  };
  for (const auto& l : report.rows) emit(l);
  emit(report.totals);
}

}  // namespace autolabel::cost
