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

#include "autolabel/cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "autolabel/cli/digest.h"
#include "autolabel/core/csv.h"
#include "autolabel/core/filter.h"
#include "autolabel/cost/cost_model.h"
#include "autolabel/map_eval/map_eval.h"
#include "autolabel/matcher/matcher.h"
#include "autolabel/sweep/sweep.h"
#include "autolabel/version.h"
#include "json.hpp"

namespace autolabel::cli {

namespace {

namespace fs = std::filesystem;
using formats::DatasetFormat;
using formats::DatasetManifest;
using nlohmann::json;

struct IngestFlags {
  bool keep_crowd = false;
  bool no_segmentation_hull = false;
  bool voc_legacy_coords = false;
  std::string classes_file;
  std::string split;
};

void ApplyFlags(DatasetManifest& m, const IngestFlags& flags, bool strict) {
  m.options.exclude_crowd = !flags.keep_crowd;
  m.options.convert_segmentation = !flags.no_segmentation_hull;
  m.options.voc_legacy_coords = flags.voc_legacy_coords;
  m.options.strict_vocab = strict;
  if (!flags.split.empty()) m.split = flags.split;
  if (!flags.classes_file.empty()) {
    m.vocabulary = formats::ReadClassNames(flags.classes_file);
  }
}

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  }
  return out;
}

// Where a dataset of the given format lands inside an output directory.
fs::path DatasetTarget(const fs::path& dir, DatasetFormat format) {
  switch (format) {
    case DatasetFormat::kCoco:
      return dir / "annotations.json";
    case DatasetFormat::kWire:
      return dir / "labels.jsonl";
    case DatasetFormat::kVoc:
    case DatasetFormat::kYolo:
      return dir;
  }
  return dir;
}

DatasetFormat RequireFormat(const std::string& name) {
  auto f = formats::ParseDatasetFormat(name);
  if (!f) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("unknown dataset format '{}' (coco|voc|yolo|wire)",
                            name));
  }
  return *f;
}

ReportFormat RequireReportFormat(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw Error(ErrorCode::kInvalidArgument,
              fmt::format("unknown report format '{}' (csv|markdown)", name));
}

std::vector<double> ParseAlphaList(const std::string& text) {
  std::vector<double> alphas;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      alphas.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("bad alpha value '{}'", item));
    }
  }
  return alphas;
}

void RequireRatio(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} {} outside [0, 1]", what, value));
  }
}

std::string UtcNow() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Loads the reference set, then predictions; wire predictions without a
// header class list borrow the reference vocabulary.
std::pair<formats::ParsedDataset, formats::ParsedDataset> LoadPair(
    DatasetManifest predictions, const DatasetManifest& references) {
  auto ref = formats::LoadDataset(references);
  if (predictions.format == DatasetFormat::kWire && !predictions.vocabulary) {
    predictions.vocabulary = ref.labels.vocabulary();
  }
  auto pred = formats::LoadDataset(predictions);
  RequireSameVocabulary(ref.labels.vocabulary(), pred.labels.vocabulary());
  return {std::move(pred), std::move(ref)};
}

std::string MetricRow(const std::string& scope, const std::string& cls,
                      const matcher::MetricPoint& p) {
  return fmt::format("{},{},{},{},{},{},{},{:.6f},{:.6f},{:.6f}\n", scope, cls,
                     p.alpha, p.label_count, p.tp, p.fp, p.fn, p.precision,
                     p.recall, p.f1);
}

std::string Summary(const matcher::MetricPoint& p) {
  return fmt::format("alpha={} labels={} tp={} fp={} fn={} precision={:.3f} "
                     "recall={:.3f} f1={:.3f}",
                     p.alpha, p.label_count, p.tp, p.fp, p.fn, p.precision,
                     p.recall, p.f1);
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(const std::vector<std::string>& args);

 private:
  void Convert();
  void Evaluate();
  void SweepCommand();
  void Map();
  void Cost();
  void Export();
  void Report();

  fs::path OutputDir() const {
    if (!out_dir_.empty()) return out_dir_;
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return ".";
  }

  std::ostream& out_;
  std::ostream& err_;

  // Common flags.
  double iou_ = 0.5;
  std::optional<double> alpha_;
  std::string alphas_;
  std::string format_;
  std::string out_dir_;
  bool strict_vocab_ = false;
  std::string pin_timestamp_;
  IngestFlags ingest_;

  // Per-command inputs.
  std::string input_;
  std::string auto_;
  std::string ref_;
  std::string model_ = "unknown";
  std::string dataset_;
  std::string audit_;
  bool exclude_difficult_ = false;
  std::string interpolation_ = "coco";
  std::size_t top_k_ = 5;
  std::string frequency_from_;
  std::string rows_csv_;
  std::vector<std::string> rows_;
  std::string seconds_per_box_ = "7";
  std::string service_cost_ = "0.036";
  std::string gpu_rate_ = "0.93";
  std::vector<std::string> curves_;
};

void AddIngestFlags(CLI::App* cmd, IngestFlags& flags) {
  cmd->add_flag("--keep-crowd", flags.keep_crowd,
                "Keep COCO iscrowd annotations");
  cmd->add_flag("--no-segmentation-hull", flags.no_segmentation_hull,
                "Use COCO bbox fields even when a polygon is present");
  cmd->add_flag("--voc-legacy-coords", flags.voc_legacy_coords,
                "VOC boxes are 1-based inclusive pixels");
  cmd->add_option("--classes", flags.classes_file,
                  "Class names file (one per line)");
  cmd->add_option("--split", flags.split, "Split name (COCO/VOC roots)");
}

int Cli::Run(const std::vector<std::string>& args) {
  CLI::App app{"Auto-label evaluation toolkit", "autolabel-eval"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);

  auto add_common = [this](CLI::App* cmd) {
    cmd->add_option("--out", out_dir_,
                    fmt::format("Output directory (default ${} or .)",
                                kOutputDirEnv));
    cmd->add_flag("--strict-vocab", strict_vocab_,
                  "Reject class names outside the given vocabulary");
  };

  auto* convert = app.add_subcommand("convert", "Rewrite a dataset in another format");
  convert->add_option("--input", input_, "Input dataset FORMAT:PATH")->required();
  convert->add_option("--format", format_, "Target format coco|voc|yolo|wire")
      ->required();
  add_common(convert);
  AddIngestFlags(convert, ingest_);
  convert->callback([this] { Convert(); });

  auto* evaluate = app.add_subcommand(
      "evaluate", "Precision/recall/F1 of auto-labels against references");
  evaluate->add_option("--auto", auto_, "Auto-label dataset FORMAT:PATH")->required();
  evaluate->add_option("--ref", ref_, "Reference dataset FORMAT:PATH")->required();
  evaluate->add_option("--alpha", alpha_,
                       "Confidence threshold (strict >); omit for no filtering");
  evaluate->add_option("--iou", iou_, "IoU threshold (strict >)");
  evaluate->add_option("--audit", audit_, "Write matched pairs as JSON lines");
  evaluate->add_flag("--exclude-difficult", exclude_difficult_,
                     "Drop references flagged difficult");
  add_common(evaluate);
  AddIngestFlags(evaluate, ingest_);
  evaluate->callback([this] { Evaluate(); });

  auto* sweep = app.add_subcommand("sweep", "Metrics across confidence thresholds");
  sweep->add_option("--auto", auto_, "Raw auto-label dataset FORMAT:PATH")->required();
  sweep->add_option("--ref", ref_, "Reference dataset FORMAT:PATH")->required();
  sweep->add_option("--alphas", alphas_, "Comma-separated thresholds");
  sweep->add_option("--iou", iou_, "IoU threshold (strict >)");
  sweep->add_option("--model", model_, "Model tag");
  sweep->add_option("--dataset", dataset_, "Dataset tag");
  sweep->add_flag("--exclude-difficult", exclude_difficult_,
                  "Drop references flagged difficult");
  add_common(sweep);
  AddIngestFlags(sweep, ingest_);
  sweep->callback([this] { SweepCommand(); });

  auto* map = app.add_subcommand("map", "Per-class AP and mAP of predictions");
  map->add_option("--pred", auto_, "Predictions FORMAT:PATH")->required();
  map->add_option("--ref", ref_, "Reference dataset FORMAT:PATH")->required();
  map->add_option("--interp", interpolation_, "coco (101-point) or voc (11-point)");
  map->add_option("--top-k", top_k_, "Classes in the most/least frequent slices");
  map->add_option("--frequency-from", frequency_from_,
                  "Dataset FORMAT:PATH whose label counts rank classes "
                  "(default: references)");
  map->add_option("--format", format_, "csv|markdown summary on stdout");
  add_common(map);
  AddIngestFlags(map, ingest_);
  map->callback([this] { Map(); });

  auto* cost = app.add_subcommand("cost", "Labeling cost comparison");
  cost->add_option("--rows", rows_csv_, "CSV with dataset,classes,objects,al_hours");
  cost->add_option("--row", rows_,
                   "NAME:CLASSES:OBJECTS:AL_HOURS (repeatable)");
  cost->add_option("--seconds-per-box", seconds_per_box_, "Human seconds per box");
  cost->add_option("--service-cost", service_cost_, "Dollars per box");
  cost->add_option("--gpu-rate", gpu_rate_, "GPU dollars per hour");
  cost->add_option("--format", format_, "csv|markdown");
  cost->add_option("--out", out_dir_, "Also write the table into this directory");
  cost->callback([this] { Cost(); });

  auto* exp = app.add_subcommand(
      "export", "Write auto-labels above a threshold as a training dataset");
  exp->add_option("--auto", auto_, "Raw auto-label dataset FORMAT:PATH")->required();
  exp->add_option("--alpha", alpha_, "Confidence threshold (strict >)")->required();
  exp->add_option("--format", format_, "Target format coco|voc|yolo|wire")->required();
  exp->add_option("--model", model_, "Model tag for the provenance record");
  exp->add_option("--pin-timestamp", pin_timestamp_,
                  "Fixed provenance timestamp for reproducible output");
  add_common(exp);
  AddIngestFlags(exp, ingest_);
  exp->callback([this] { Export(); });

  auto* report = app.add_subcommand("report", "Summarize sweep curves");
  report->add_option("--curve", curves_, "MODEL=PATH to a sweep CSV (repeatable)")
      ->required();
  report->add_option("--dataset", dataset_, "Dataset tag");
  report->add_option("--format", format_, "csv|markdown");
  report->add_option("--out", out_dir_, "Also write the summary here");
  report->callback([this] { Report(); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out_ << kToolkitVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err_ << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const fs::filesystem_error& e) {
    err_ << "error [io]: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

void Cli::Convert() {
  auto manifest = ParseManifestSpec(input_);
  ApplyFlags(manifest, ingest_, strict_vocab_);
  const DatasetFormat target = RequireFormat(format_);
  const auto parsed = formats::LoadDataset(manifest);
  const fs::path dir = OutputDir();
  formats::WriteOptions options;
  options.voc_legacy_coords = ingest_.voc_legacy_coords;
  formats::WriteDataset(parsed.labels, target, DatasetTarget(dir, target),
                        options);

  const auto& s = parsed.stats;
  const json report = {{"input", input_},
                       {"output_format", formats::DatasetFormatName(target)},
                       {"images", s.images},
                       {"labels_in", s.raw_annotations},
                       {"labels_out", s.labels},
                       {"crowd_dropped", s.crowd_dropped},
                       {"segmentations_converted", s.segmentations_converted}};
  OpenOutput(dir / "conversion_report.json") << report.dump(2) << '\n';
  out_ << fmt::format(
      "images: {}\nlabels in: {}\nlabels out: {}\ndropped: {}\n"
      "segmentations converted: {}\n",
      s.images, s.raw_annotations, s.labels, s.crowd_dropped,
      s.segmentations_converted);
}

void Cli::Evaluate() {
  if (alpha_) RequireRatio(*alpha_, "alpha");
  RequireRatio(iou_, "iou");
  auto auto_manifest = ParseManifestSpec(auto_);
  auto ref_manifest = ParseManifestSpec(ref_);
  ApplyFlags(auto_manifest, ingest_, strict_vocab_);
  ApplyFlags(ref_manifest, ingest_, strict_vocab_);
  auto [pred, ref] = LoadPair(auto_manifest, ref_manifest);

  LabelSet predictions =
      alpha_ ? FilterByConfidence(pred.labels, *alpha_) : std::move(pred.labels);
  const LabelSet references =
      exclude_difficult_ ? DropDifficult(ref.labels) : std::move(ref.labels);

  matcher::MatchOptions options;
  options.iou_threshold = iou_;
  options.record_pairs = !audit_.empty();
  const auto result = matcher::MatchLabelSets(predictions, references, options);
  const double alpha = alpha_.value_or(0.0);
  const auto overall = matcher::MetricsFromTallies(
      result, alpha, static_cast<std::int64_t>(predictions.label_count()));

  std::vector<std::int64_t> per_class_labels(references.vocabulary().size(), 0);
  for (const auto& [id, entry] : predictions.images()) {
    for (const auto& l : entry.labels) {
      ++per_class_labels[static_cast<std::size_t>(l.class_index)];
    }
  }

  const fs::path dir = OutputDir();
  auto csv = OpenOutput(dir / "evaluate.csv");
  csv << "scope,class,alpha,label_count,tp,fp,fn,precision,recall,f1\n";
  csv << MetricRow("all", "", overall);
  const auto& vocab = references.vocabulary();
  for (std::size_t c = 0; c < vocab.size(); ++c) {
    const int cls = static_cast<int>(c);
    const auto it = result.per_class.find(cls);
    const matcher::Tally tally =
        it == result.per_class.end() ? matcher::Tally{} : it->second;
    csv << MetricRow("class", CsvEscape(vocab.name(cls)),
                     matcher::MetricsFromTallies(tally, alpha,
                                                 per_class_labels[c]));
  }
  if (!audit_.empty()) {
    auto audit = OpenOutput(audit_);
    matcher::WritePairsJsonl(result, audit);
  }
  out_ << Summary(overall) << '\n';
}

void Cli::SweepCommand() {
  RequireRatio(iou_, "iou");
  auto auto_manifest = ParseManifestSpec(auto_);
  auto ref_manifest = ParseManifestSpec(ref_);
  ApplyFlags(auto_manifest, ingest_, strict_vocab_);
  ApplyFlags(ref_manifest, ingest_, strict_vocab_);
  auto [raw, ref] = LoadPair(auto_manifest, ref_manifest);
  const LabelSet references =
      exclude_difficult_ ? DropDifficult(ref.labels) : std::move(ref.labels);

  const std::vector<double> alphas =
      alphas_.empty() ? sweep::DefaultAlphaGrid() : ParseAlphaList(alphas_);
  const auto curve =
      sweep::Sweep(raw.labels, references, alphas, iou_, model_, dataset_);

  const fs::path dir = OutputDir();
  auto csv = OpenOutput(dir / "curve.csv");
  sweep::WriteCurveCsv(curve, csv);
  auto jsonl = OpenOutput(dir / "curve.jsonl");
  sweep::WriteCurveJsonl(curve, jsonl);
  out_ << "best f1:     " << Summary(sweep::BestF1(curve)) << '\n'
       << "best recall: " << Summary(sweep::BestRecall(curve)) << '\n';
}

void Cli::Map() {
  const ReportFormat fmt_choice =
      format_.empty() ? ReportFormat::kMarkdown : RequireReportFormat(format_);
  map_eval::Interpolation interp;
  if (interpolation_ == "coco") {
    interp = map_eval::Interpolation::kCoco101;
  } else if (interpolation_ == "voc") {
    interp = map_eval::Interpolation::kVoc11;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("unknown interpolation '{}'", interpolation_));
  }
  auto pred_manifest = ParseManifestSpec(auto_);
  auto ref_manifest = ParseManifestSpec(ref_);
  ApplyFlags(pred_manifest, ingest_, strict_vocab_);
  ApplyFlags(ref_manifest, ingest_, strict_vocab_);
  auto [pred, ref] = LoadPair(pred_manifest, ref_manifest);
  const auto report = map_eval::MeanAp(
      pred.labels, ref.labels, map_eval::StandardIouThresholds(), interp);

  map_eval::FrequencyRanking ranking;
  if (frequency_from_.empty()) {
    ranking = map_eval::ClassFrequency(ref.labels, top_k_);
  } else {
    auto freq_manifest = ParseManifestSpec(frequency_from_);
    ApplyFlags(freq_manifest, ingest_, strict_vocab_);
    const auto freq = formats::LoadDataset(freq_manifest);
    RequireSameVocabulary(ref.labels.vocabulary(), freq.labels.vocabulary());
    ranking = map_eval::ClassFrequency(freq.labels, top_k_);
  }

  const fs::path dir = OutputDir();
  std::ostringstream csv;
  map_eval::WriteEvalCsv(report, csv);
  OpenOutput(dir / "map.csv") << csv.str();
  std::ostringstream md;
  map_eval::WriteFrequencySummary(report, ranking, md);
  OpenOutput(dir / "map_summary.md") << md.str();

  out_ << fmt::format("mAP50={:.4f} mAP75={:.4f} mAP50-95={:.4f}\n",
                      report.map50.value_or(0.0), report.map75.value_or(0.0),
                      report.map50_95.value_or(0.0));
  out_ << (fmt_choice == ReportFormat::kCsv ? csv.str() : md.str());
}

void Cli::Cost() {
  const ReportFormat fmt_choice =
      format_.empty() ? ReportFormat::kMarkdown : RequireReportFormat(format_);
  cost::CostAssumptions assumptions;
  assumptions.time_per_box = {cost::ParseFixedPoint(seconds_per_box_, 6)};
  assumptions.service_cost_per_box = cost::ParseDollars(service_cost_);
  assumptions.gpu_rate_per_hour = cost::ParseDollars(gpu_rate_);

  std::vector<cost::CostRow> rows;
  if (!rows_csv_.empty()) {
    std::ifstream in(rows_csv_);
    if (!in) {
      throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'", rows_csv_));
    }
    rows = cost::ReadCostRowsCsv(in, rows_csv_);
  }
  for (const auto& spec : rows_) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 4) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("--row '{}' must be NAME:CLASSES:OBJECTS:AL_HOURS",
                              spec));
    }
    cost::CostRow row;
    row.dataset = parts[0];
    if (!parts[1].empty()) row.classes = cost::ParseFixedPoint(parts[1], 0);
    row.objects = cost::ParseFixedPoint(parts[2], 0);
    row.al_wall_time = cost::ParseHours(parts[3]);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no cost rows given (--rows/--row)");
  }

  const auto report = cost::BuildCostReport(rows, assumptions);
  std::ostringstream text;
  if (fmt_choice == ReportFormat::kCsv) {
    cost::WriteCostCsv(report, text);
  } else {
    cost::WriteCostMarkdown(report, text);
  }
  out_ << text.str();
  if (!out_dir_.empty()) {
    const char* name = fmt_choice == ReportFormat::kCsv ? "cost.csv" : "cost.md";
    OpenOutput(fs::path(out_dir_) / name) << text.str();
  }
}

void Cli::Export() {
  RequireRatio(*alpha_, "alpha");
  auto manifest = ParseManifestSpec(auto_);
  ApplyFlags(manifest, ingest_, strict_vocab_);
  const DatasetFormat target = RequireFormat(format_);
  const auto raw = formats::LoadDataset(manifest);
  const LabelSet filtered = FilterByConfidence(raw.labels, *alpha_);

  const fs::path dir = OutputDir();
  formats::WriteOptions options;
  options.model_tag = model_;
  options.voc_legacy_coords = ingest_.voc_legacy_coords;
  formats::WriteDataset(filtered, target, DatasetTarget(dir, target), options);

  json inputs = json::array();
  inputs.push_back({{"path", manifest.root.string()},
                    {"format", formats::DatasetFormatName(manifest.format)},
                    {"sha256", DigestPath(manifest.root)}});
  const json provenance = {
      {"model", model_},
      {"alpha", *alpha_},
      {"filter", "confidence > alpha"},
      {"format", formats::DatasetFormatName(target)},
      {"toolkit_version", kToolkitVersion},
      {"created", pin_timestamp_.empty() ? UtcNow() : pin_timestamp_},
      {"inputs", std::move(inputs)},
      {"labels_in", raw.labels.label_count()},
      {"labels_out", filtered.label_count()},
      {"images", filtered.image_count()}};
  OpenOutput(dir / "provenance.json") << provenance.dump(2) << '\n';
  out_ << fmt::format("exported {} of {} labels at alpha > {} ({})\n",
                      filtered.label_count(), raw.labels.label_count(),
                      *alpha_, formats::DatasetFormatName(target));
}

void Cli::Report() {
  const ReportFormat fmt_choice =
      format_.empty() ? ReportFormat::kMarkdown : RequireReportFormat(format_);
  std::vector<sweep::MetricCurve> curves;
  for (const auto& spec : curves_) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("--curve '{}' must be MODEL=PATH", spec));
    }
    const std::string path = spec.substr(eq + 1);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open '{}'", path));
    curves.push_back(sweep::ReadCurveCsv(in, spec.substr(0, eq), dataset_, path));
  }

  std::ostringstream text;
  if (fmt_choice == ReportFormat::kCsv) {
    text << "model,dataset,criterion,alpha,label_count,precision,recall,f1\n";
  } else {
    text << "| Model | Dataset | Criterion | Alpha | Labels | Precision | "
            "Recall | F1 |\n|---|---|---|---:|---:|---:|---:|---:|\n";
  }
  auto emit = [&](const sweep::MetricCurve& c, const char* criterion,
                  const matcher::MetricPoint& p) {
    if (fmt_choice == ReportFormat::kCsv) {
      text << fmt::format("{},{},{},{},{},{:.3f},{:.3f},{:.3f}\n",
                          CsvEscape(c.model_tag), CsvEscape(c.dataset_tag),
                          criterion, p.alpha, p.label_count, p.precision,
                          p.recall, p.f1);
    } else {
      text << fmt::format("| {} | {} | {} | {} | {} | {:.3f} | {:.3f} | {:.3f} |\n",
                          c.model_tag, c.dataset_tag, criterion, p.alpha,
                          p.label_count, p.precision, p.recall, p.f1);
    }
  };
  const sweep::MetricCurve* best_f1_curve = nullptr;
  const sweep::MetricCurve* best_recall_curve = nullptr;
  for (const auto& c : curves) {
    const auto& f1 = sweep::BestF1(c);
    const auto& recall = sweep::BestRecall(c);
    emit(c, "best-f1", f1);
    emit(c, "best-recall", recall);
    if (!best_f1_curve || f1.f1 > sweep::BestF1(*best_f1_curve).f1) {
      best_f1_curve = &c;
    }
    if (!best_recall_curve ||
        recall.recall > sweep::BestRecall(*best_recall_curve).recall) {
      best_recall_curve = &c;
    }
  }
  if (fmt_choice == ReportFormat::kMarkdown && curves.size() > 1) {
    text << fmt::format("\nHighest F1: {} at alpha {}\n",
                        best_f1_curve->model_tag,
                        sweep::BestF1(*best_f1_curve).alpha);
    text << fmt::format("Highest recall: {} at alpha {}\n",
                        best_recall_curve->model_tag,
                        sweep::BestRecall(*best_recall_curve).alpha);
  }
  out_ << text.str();
  if (!out_dir_.empty()) {
    const char* name =
        fmt_choice == ReportFormat::kCsv ? "report.csv" : "report.md";
    OpenOutput(fs::path(out_dir_) / name) << text.str();
  }
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  return code == ErrorCode::kIo ? kExitIo : kExitValidation;
}

formats::DatasetManifest ParseManifestSpec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon + 1 == spec.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("dataset '{}' must be FORMAT:PATH", spec));
  }
  DatasetManifest m;
  m.format = RequireFormat(spec.substr(0, colon));
  m.root = spec.substr(colon + 1);
  return m;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Cli cli(out, err);
  return cli.Run(args);
}

}  // namespace autolabel::cli
