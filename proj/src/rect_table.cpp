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

#include "corrlab/rect_table.hpp"

#include <bit>

namespace corrlab {

RectTable::RectTable(const SignMatrix& a)
    : m_(a.rows()), n_(a.cols()), table_(std::size_t{1} << (a.rows() + a.cols()), 0) {
  const Mask row_end = full_mask(m_) + 1;
  const Mask col_end = full_mask(n_) + 1;
  for (Mask s = 1; s < row_end; ++s) {
    const int low = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    const Mask neg_row = a.neg_row(low);
    const std::size_t base = static_cast<std::size_t>(s) << n_;
    const std::size_t prev = static_cast<std::size_t>(rest) << n_;
    for (Mask t = 0; t < col_end; ++t) {
      table_[base | t] = static_cast<std::uint8_t>(table_[prev | t] + popcount(neg_row & t));
    }
  }
}

}  // namespace corrlab
