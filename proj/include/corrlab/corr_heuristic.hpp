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

#include "corrlab/distribution.hpp"
#include "corrlab/measures.hpp"

namespace corrlab {

struct CorrHeuristicResult {
  // Smallest min_v size_eps^(v)(A, mu) seen; -log2 of it is a certified
  // lower bound on corr_eps over c-balanced distributions, because `best_mu`
  // is an explicit c-balanced distribution attaining it.
  Rational best_size;
  double log2_value = 0.0;
  EntryDistribution best_mu;
  Sign orientation = Sign::kPlus;
  Rectangle witness;
  // Same quantity at the starting point (uniform, projected to the floor).
  Rational start_size;
  int iterations = 0;
};

// Multiplicative-weights adversary. Each round finds the best feasible
// rectangle of the orientation currently certifying the smallest size,
// doubles the mass of every entry outside it, renormalises, and projects
// onto mu(-1), mu(+1) >= balance_floor. Deterministic for a given seed
// (the seed perturbs the starting weights).
CorrHeuristicResult corr_lower_heuristic(const SignMatrix& a, const Threshold& eps,
                                         const Rational& balance_floor, int iterations,
                                         std::uint64_t seed, const SizeCap& cap = {});

}  // namespace corrlab
