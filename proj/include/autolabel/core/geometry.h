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

namespace autolabel {

// Axis-aligned box in absolute pixels, center format.
struct BoundingBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  bool IsValid() const;
  double Area() const { return w * h; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct Corners {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  friend bool operator==(const Corners&, const Corners&) = default;
};

// Throws Error(kInvalidGeometry) for non-finite or negative dimensions.
void ValidateBox(const BoundingBox& box);

Corners CenterToCorners(const BoundingBox& box);

// Throws Error(kInvalidGeometry) when xmax < xmin or ymax < ymin.
BoundingBox CornersToCenter(const Corners& corners);

// Intersection over union. Zero-area boxes have IoU 0 against everything,
// themselves included.
double Iou(const BoundingBox& a, const BoundingBox& b);

}  // namespace autolabel
