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

#include "autolabel/core/label_set.h"

namespace autolabel {

// Keeps exactly the labels whose confidence is strictly greater than `alpha`.
// Images and vocabulary are carried over unchanged. Throws
// Error(kMissingConfidence) naming the image when a label has no confidence,
// and Error(kInvalidArgument) for alpha outside [0, 1].
LabelSet FilterByConfidence(const LabelSet& labels, double alpha);

// Removes labels flagged difficult (VOC); everything else is kept.
LabelSet DropDifficult(const LabelSet& labels);

}  // namespace autolabel
