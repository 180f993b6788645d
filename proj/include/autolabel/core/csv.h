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

#include <string>
#include <string_view>
#include <vector>

namespace autolabel {

// Quotes a CSV field when it contains a comma, quote or newline.
std::string CsvEscape(std::string_view field);

// Splits one CSV record; handles double-quoted fields with "" escapes.
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace autolabel
