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

#include "corrlab/sign_matrix.hpp"

namespace corrlab {

struct SymmetryGroup {
  bool negation = true;
  bool transpose = false;  // only meaningful for square matrices
};

// Distinct codes of A's images under row permutations, column permutations,
// and the optional global negation / transposition. Requires m*n <= 64.
std::vector<std::uint64_t> orbit_codes(const SignMatrix& a, const SymmetryGroup& group);

// Smallest code in the orbit.
std::uint64_t canonical_code(const SignMatrix& a, const SymmetryGroup& group);

// Orbit partition of all 2^(mn) m x n sign matrices (m*n <= 24).
class OrbitIndex {
 public:
  OrbitIndex(int rows, int cols, const SymmetryGroup& group);

  int rows() const { return m_; }
  int cols() const { return n_; }
  // Position in representatives() of the orbit containing `code`.
  std::uint32_t orbit_of(std::uint64_t code) const { return orbit_[code]; }
  // Smallest code of each orbit, ascending.
  const std::vector<std::uint64_t>& representatives() const { return reps_; }

 private:
  int m_;
  int n_;
  std::vector<std::uint32_t> orbit_;
  std::vector<std::uint64_t> reps_;
};

}  // namespace corrlab
