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

#include "autolabel/core/error.h"

namespace autolabel {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGeometry:
      return "invalid-geometry";
    case ErrorCode::kMissingConfidence:
      return "missing-confidence";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kReferentialIntegrity:
      return "referential-integrity";
    case ErrorCode::kFormat:
      return "format";
    case ErrorCode::kUnknownClass:
      return "unknown-class";
    case ErrorCode::kRange:
      return "range";
    case ErrorCode::kDuplicateRecord:
      return "duplicate-record";
    case ErrorCode::kVocabularyMismatch:
      return "vocabulary-mismatch";
    case ErrorCode::kImageSetMismatch:
      return "image-set-mismatch";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace autolabel
