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

#include "corrlab/symmetry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace corrlab {
namespace {

template <typename F>
void for_each_image(const SignMatrix& a, const SymmetryGroup& group, F&& f) {
  const int m = a.rows();
  const int n = a.cols();
  if (m * n > 64) throw std::invalid_argument("orbit codes need m*n <= 64");
  std::vector<int> rp(static_cast<std::size_t>(m));
  std::vector<int> cp(static_cast<std::size_t>(n));
  std::iota(rp.begin(), rp.end(), 0);
  const bool transpose = group.transpose && m == n;
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      std::uint64_t code = 0;
      std::uint64_t code_t = 0;
      for (int i = 0; i < m; ++i) {
        const Mask row = a.neg_row(rp[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
          if ((row >> cp[static_cast<std::size_t>(j)]) & 1U) {
            code |= std::uint64_t{1} << (i * n + j);
            code_t |= std::uint64_t{1} << (j * m + i);
          }
        }
      }
      const std::uint64_t all = m * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (m * n)) - 1;
      f(code);
      if (group.negation) f(~code & all);
      if (transpose) {
        f(code_t);
        if (group.negation) f(~code_t & all);
      }
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
}

}  // namespace

std::vector<std::uint64_t> orbit_codes(const SignMatrix& a, const SymmetryGroup& group) {
  std::vector<std::uint64_t> codes;
  for_each_image(a, group, [&](std::uint64_t c) { codes.push_back(c); });
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::uint64_t canonical_code(const SignMatrix& a, const SymmetryGroup& group) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for_each_image(a, group, [&](std::uint64_t c) { best = std::min(best, c); });
  return best;
}

OrbitIndex::OrbitIndex(int rows, int cols, const SymmetryGroup& group) : m_(rows), n_(cols) {
  if (rows * cols > 24) throw std::invalid_argument("orbit index needs m*n <= 24");
  const std::uint64_t total = std::uint64_t{1} << (rows * cols);
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  orbit_.assign(total, kUnset);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (orbit_[code] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(code);
    for_each_image(SignMatrix::from_code(rows, cols, code), group,
                   [&](std::uint64_t c) { orbit_[c] = id; });
  }
}

}  // namespace corrlab
