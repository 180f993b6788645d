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

#include "autolabel/core/geometry.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "autolabel/core/error.h"

namespace autolabel {

bool BoundingBox::IsValid() const {
  return std::isfinite(cx) && std::isfinite(cy) && std::isfinite(w) &&
         std::isfinite(h) && w >= 0.0 && h >= 0.0;
}

void ValidateBox(const BoundingBox& box) {
  if (!box.IsValid()) {
    throw Error(ErrorCode::kInvalidGeometry,
                fmt::format("invalid box (cx={}, cy={}, w={}, h={})", box.cx,
                            box.cy, box.w, box.h));
  }
}

Corners CenterToCorners(const BoundingBox& box) {
  ValidateBox(box);
  return {box.cx - box.w / 2.0, box.cy - box.h / 2.0, box.cx + box.w / 2.0,
          box.cy + box.h / 2.0};
}

BoundingBox CornersToCenter(const Corners& c) {
  if (!std::isfinite(c.xmin) || !std::isfinite(c.ymin) ||
      !std::isfinite(c.xmax) || !std::isfinite(c.ymax) || c.xmax < c.xmin ||
      c.ymax < c.ymin) {
    throw Error(ErrorCode::kInvalidGeometry,
                fmt::format("invalid corners ({}, {}, {}, {})", c.xmin, c.ymin,
                            c.xmax, c.ymax));
  }
  const double w = c.xmax - c.xmin;
  const double h = c.ymax - c.ymin;
  return {c.xmin + w / 2.0, c.ymin + h / 2.0, w, h};
}

double Iou(const BoundingBox& a, const BoundingBox& b) {
  const Corners ca = CenterToCorners(a);
  const Corners cb = CenterToCorners(b);
  const double iw = std::min(ca.xmax, cb.xmax) - std::max(ca.xmin, cb.xmin);
  const double ih = std::min(ca.ymax, cb.ymax) - std::max(ca.ymin, cb.ymin);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  const double area_a = (ca.xmax - ca.xmin) * (ca.ymax - ca.ymin);
  const double area_b = (cb.xmax - cb.xmin) * (cb.ymax - cb.ymin);
  const double uni = area_a + area_b - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

}  // namespace autolabel
