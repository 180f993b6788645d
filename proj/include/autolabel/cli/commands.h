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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "autolabel/core/error.h"
#include "autolabel/formats/manifest.h"

namespace autolabel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;

// Default output directory when --out is not given.
inline constexpr char kOutputDirEnv[] = "AUTOLABEL_EVAL_OUT";

int ExitCodeFor(ErrorCode code);

enum class ReportFormat { kCsv, kMarkdown };

// Settings shared by all subcommands, filled from the command line.
struct RunConfig {
  std::string subcommand;
  std::vector<formats::DatasetManifest> inputs;
  std::vector<double> alphas;
  std::optional<double> alpha;
  double iou_threshold = 0.5;
  std::filesystem::path output_dir;
  ReportFormat report_format = ReportFormat::kMarkdown;
  bool strict_vocab = false;
  std::optional<std::string> pinned_timestamp;
};

// "coco:path/to/instances.json" -> manifest. Throws kInvalidArgument for an
// unknown format tag or missing path.
formats::DatasetManifest ParseManifestSpec(const std::string& spec);

// Entry point behind the autolabel-eval binary. `args` excludes the program
// name. Returns the process exit code: 0 success, 1 I/O failure, 2
// validation failure (including usage errors).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace autolabel::cli
