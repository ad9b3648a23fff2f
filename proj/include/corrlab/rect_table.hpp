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

#include <cstdint>
#include <vector>

#include "corrlab/rectangle.hpp"
#include "corrlab/sign_matrix.hpp"

namespace corrlab {

// Count of -1 entries in every rectangle S x T of a matrix, including the
// empty ones (count 0). Built once per matrix; every exhaustive measure
// reads from it.
class RectTable {
 public:
  explicit RectTable(const SignMatrix& a);

  int rows() const { return m_; }
  int cols() const { return n_; }

  int neg(Mask s, Mask t) const { return table_[(static_cast<std::size_t>(s) << n_) | t]; }
  int count(Sign v, Mask s, Mask t) const {
    const int n = neg(s, t);
    return v == Sign::kMinus ? n : popcount(s) * popcount(t) - n;
  }
  bool monochromatic(Mask s, Mask t) const {
    const int n = neg(s, t);
    return n == 0 || n == popcount(s) * popcount(t);
  }

 private:
  int m_;
  int n_;
  std::vector<std::uint8_t> table_;
};

// Calls f(sub) for every nonempty submask of s in increasing numeric order,
// which matches row-mask-major rectangle enumeration.
template <typename F>
void for_each_submask_ascending(Mask s, F&& f) {
  for (Mask sub = (0U - s) & s; sub != 0; sub = (sub - s) & s) f(sub);
}

}  // namespace corrlab
