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

#include <cstddef>
#include <functional>

namespace autolabel {

// Runs fn(i) for i in [0, n) on up to `max_workers` threads (0 = hardware
// concurrency). fn must only touch state owned by index i. The first
// exception thrown by any task is rethrown after all workers join.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn,
                 std::size_t max_workers = 0);

}  // namespace autolabel
