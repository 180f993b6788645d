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

#include <stdexcept>
#include <string>
#include <string_view>

namespace autolabel {

enum class ErrorCode {
  kInvalidGeometry,
  kMissingConfidence,
  kParse,
  kReferentialIntegrity,
  kFormat,
  kUnknownClass,
  kRange,
  kDuplicateRecord,
  kVocabularyMismatch,
  kImageSetMismatch,
  kInvalidArgument,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All toolkit failures are reported through this type. The code decides the
// CLI exit status: kIo maps to 1, everything else is a validation failure (2).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace autolabel
