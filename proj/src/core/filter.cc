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

#include "autolabel/core/filter.h"

#include <fmt/format.h>

#include "autolabel/core/error.h"

namespace autolabel {

LabelSet FilterByConfidence(const LabelSet& labels, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("alpha {} outside [0, 1]", alpha));
  }
  LabelSet out = labels.EmptyLike();
  for (const auto& [id, entry] : labels.images()) {
    for (const auto& label : entry.labels) {
      if (!label.confidence) {
        throw Error(ErrorCode::kMissingConfidence,
                    fmt::format("image '{}': label without confidence cannot "
                                "be filtered",
                                id));
      }
      if (*label.confidence > alpha) out.AddLabel(id, label);
    }
  }
  return out;
}

LabelSet DropDifficult(const LabelSet& labels) {
  LabelSet out = labels.EmptyLike();
  for (const auto& [id, entry] : labels.images()) {
    for (const auto& label : entry.labels) {
      if (!label.difficult) out.AddLabel(id, label);
    }
  }
  return out;
}

}  // namespace autolabel
