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
#include <string>
#include <string_view>
#include <vector>

#include "corrlab/rational.hpp"
#include "corrlab/sign_matrix.hpp"
#include "corrlab/size_cap.hpp"

namespace corrlab {

enum class Family { kExhaustive, kRandom, kPlanted, kRank1Blocks, kDiagonalPattern };

Family parse_family(std::string_view name);
std::string family_name(Family f);

struct GeneratorSpec {
  Family family = Family::kRandom;
  int rows = 3;
  int cols = 3;
  std::uint64_t seed = 0;
  int count = 1;  // ignored by the exhaustive family

  // Exhaustive: keep one representative per orbit of row/column
  // permutations and global negation.
  bool dedup = false;

  // Probability of a -1 entry (random family, planted background).
  Rational bias{1, 2};

  // Planted family: a block_rows x block_cols block on seeded rows/columns
  // is overwritten with block_sign.
  int block_rows = 0;
  int block_cols = 0;
  Sign block_sign = Sign::kPlus;

  // Rank-1 blocks family: 1 = outer products s t^T; 2 = 2 x 2 block
  // compositions alpha_ab s_a t_b^T (rank <= 2).
  int blocks = 1;

  std::string describe() const;
};

// Exhaustive corpora hold at most 2^20 matrices.
inline constexpr int kMaxExhaustiveEntries = 20;

// Deterministic: the same spec always yields the same sequence.
std::vector<SignMatrix> generate(const GeneratorSpec& spec, const SizeCap& cap = {});

// s t^T for sign vectors given as '+'/'-' strings.
SignMatrix outer_product(std::string_view s, std::string_view t);

}  // namespace corrlab
