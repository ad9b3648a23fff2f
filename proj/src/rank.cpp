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

#include "corrlab/rank.hpp"

#include <utility>

#include "corrlab/instrumentation.hpp"

namespace corrlab {

int integer_rank(std::vector<BigInt> m, int rows, int cols) {
  auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i * cols + j)]; };
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        BigInt num = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        // Exact: every entry is a minor of the original matrix.
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

RankValue rank(const SignMatrix& a) {
  note_engine_invocation();
  std::vector<BigInt> entries;
  entries.reserve(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) entries.emplace_back(a.value(i, j));
  }
  return {integer_rank(std::move(entries), a.rows(), a.cols())};
}

}  // namespace corrlab
