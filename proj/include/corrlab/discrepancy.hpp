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

#include "corrlab/distribution.hpp"
#include "corrlab/rational.hpp"
#include "corrlab/rect_table.hpp"
#include "corrlab/rectangle.hpp"
#include "corrlab/sign_matrix.hpp"
#include "corrlab/size_cap.hpp"

namespace corrlab {

// sum_{(i,j) in R} mu(i,j) A_ij, which equals mu(1,R) - mu(-1,R).
struct SignedMass {
  Rational value;
};

// One pure strategy of the rectangle player: the signed rectangle s * R.
struct SignedRectangle {
  Rectangle rect;
  Sign sign;
};

struct DiscrepancyResult {
  Rational disc;
  Rational d;  // 1 / disc
  EntryDistribution optimal_sigma;
  Rectangle tight_rectangle;
  // Optimality certificate: a mixture over signed rectangles under which
  // every entry scores at least disc, so no sigma can do better.
  std::vector<SignedRectangle> certificate_support;
  std::vector<Rational> certificate_weights;
  std::int64_t pivots = 0;
};

// min over distributions sigma of max_R |sigma(1,R) - sigma(-1,R)|, solved as
// a zero-sum game with the exact simplex. The result is re-verified (see
// verify_discrepancy) before it is returned.
DiscrepancyResult disc(const SignMatrix& a, const SizeCap& cap = {kDefaultDiscCap, false});

struct DiscrepancyCheck {
  bool sigma_valid = false;        // sigma is a distribution and max_R |.| == disc
  bool tight_attained = false;     // tight_rectangle reaches disc
  bool certificate_valid = false;  // every entry scores >= disc under the mixture
  bool ok() const { return sigma_valid && tight_attained && certificate_valid; }
};

// Independent exact re-check of both sides of the LP optimum.
DiscrepancyCheck verify_discrepancy(const SignMatrix& a, const DiscrepancyResult& result);

// argmax_R |sum_R mu A| over all rectangles (first in row-mask-major order on
// ties).
std::pair<Rectangle, SignedMass> discrepancy_witness(const SignMatrix& a,
                                                     const EntryDistribution& mu);
// Same for a uniformly-balanced mu; only rectangles inside the support are
// scanned, since mass outside it is zero.
std::pair<Rectangle, SignedMass> discrepancy_witness(const UniformlyBalancedDistribution& mu);

enum class ComplementSplit {
  kThree,  // (~S x T), (S x ~T), (~S x ~T): guarantees 1/(3d)
  kTwo,    // (~S x [n]), (S x ~T): guarantees 1/(2d); reported only
};

struct LowCorruptionResult {
  Rectangle rect;
  SignedMass witness_mass;  // of the discrepancy witness before any complement step
  SignedMass mass_signed;   // of the returned rectangle
  Rational mass;            // mu(R)
  Rational minus_mass;      // mu(-1, R)
  bool used_complement = false;
};

// Builds a rectangle R with mu(R) >= 1/(3d) and
// mu(-1, R) <= (1/2 - 1/(6d)) mu(R): take the discrepancy witness; if its
// signed mass is negative, the complement (which carries the opposite signed
// mass, the total being 0) is split into rectangles and the best part is
// taken. Throws InternalInvariant if the postconditions fail to re-check.
LowCorruptionResult low_corruption_rectangle(const UniformlyBalancedDistribution& mu,
                                             const Rational& d,
                                             ComplementSplit split = ComplementSplit::kThree);

namespace kernels {

// Integer form of low_corruption_rectangle on a prebuilt table. Masses are
// over the common denominator 2 N P of the support; d = d_num / d_den.
struct LowCorruptionScaled {
  Rectangle rect;
  std::int64_t witness_signed = 0;
  std::int64_t signed_mass = 0;
  std::int64_t mass = 0;
  std::int64_t minus_mass = 0;
  std::int64_t denominator = 1;
  bool used_complement = false;
  bool mass_ok = false;        // mu(R) >= 1/(3d)
  bool corruption_ok = false;  // mu(-1,R) <= (1/2 - 1/(6d)) mu(R)
};

LowCorruptionScaled low_corruption(const RectTable& table, Mask s, Mask t, std::int64_t d_num,
                                   std::int64_t d_den, ComplementSplit split);

}  // namespace kernels

}  // namespace corrlab
