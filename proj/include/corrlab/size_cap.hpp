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

#pragma once

#include <string_view>

namespace corrlab {

// Absolute limit on either matrix dimension. Index sets are 32-bit masks and
// the rectangle tables are dense in 2^(m+n), so nothing above this is ever
// admitted, even with `force`.
inline constexpr int kHardDimLimit = 12;

inline constexpr int kDefaultCap = 8;
inline constexpr int kDefaultHmonoCap = 7;
inline constexpr int kDefaultDccCap = 8;
inline constexpr int kDefaultDiscCap = 6;

struct SizeCap {
  int limit = kDefaultCap;
  bool force = false;

  // Throws SizeCapExceeded when m or n is above the cap (or the hard limit).
  void check(int m, int n, std::string_view what) const;
};

}  // namespace corrlab
