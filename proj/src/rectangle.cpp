// Copyright 2026 The corrlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrlab/rectangle.hpp"

#include "corrlab/errors.hpp"

namespace corrlab {

void Rectangle::validate(int m, int n) const {
  if (rows == 0 || cols == 0) throw InvalidRectangle("rectangle has an empty side: " + to_string());
  if ((rows & ~full_mask(m)) != 0 || (cols & ~full_mask(n)) != 0) {
    throw InvalidRectangle("rectangle " + to_string() + " out of range for " + std::to_string(m) +
                           "x" + std::to_string(n));
  }
}

std::string Rectangle::to_string() const {
  auto side = [](Mask s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
      if ((s >> i) & 1U) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
      }
    }
    return out + "}";
  };
  return side(rows) + "x" + side(cols);
}

RectangleRange rectangle_enumerate(int m, int n, const SizeCap& cap) {
  cap.check(m, n, "rectangle enumeration");
  return RectangleRange(m, n);
}

std::vector<Rectangle> complement_partition(const Rectangle& r, int m, int n) {
  r.validate(m, n);
  const Mask rows_out = full_mask(m) & ~r.rows;
  const Mask cols_out = full_mask(n) & ~r.cols;
  std::vector<Rectangle> parts;
  if (rows_out) parts.push_back({rows_out, r.cols});
  if (cols_out) parts.push_back({r.rows, cols_out});
  if (rows_out && cols_out) parts.push_back({rows_out, cols_out});
  return parts;
}

std::vector<Rectangle> complement_partition_two(const Rectangle& r, int m, int n) {
  r.validate(m, n);
  const Mask rows_out = full_mask(m) & ~r.rows;
  const Mask cols_out = full_mask(n) & ~r.cols;
  std::vector<Rectangle> parts;
  if (rows_out) parts.push_back({rows_out, full_mask(n)});
  if (cols_out) parts.push_back({r.rows, cols_out});
  return parts;
}

}  // namespace corrlab
