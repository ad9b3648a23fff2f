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

#include <vector>

#include "corrlab/rational.hpp"
#include "corrlab/sign_matrix.hpp"

namespace corrlab {

// Rank over the rationals (equivalently the reals).
struct RankValue {
  int r = 0;
  friend auto operator<=>(const RankValue&, const RankValue&) = default;
};

// Fraction-free (Bareiss) elimination over arbitrary-precision integers.
// Pivot: first nonzero entry at or below the current row, columns in order.
RankValue rank(const SignMatrix& a);

// Same elimination on an arbitrary integer matrix, row-major.
int integer_rank(std::vector<BigInt> entries, int rows, int cols);

}  // namespace corrlab
