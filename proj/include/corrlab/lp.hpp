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

#include "corrlab/rational.hpp"

namespace corrlab {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LpConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// optimise objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  bool maximize = false;
  std::vector<LpConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
  // Shadow prices in the original row orientation, so that at optimum
  // objective == sum_i duals[i] * rhs[i].
  std::vector<Rational> duals;
  std::int64_t pivots = 0;
};

// Dense-tableau two-phase primal simplex in exact rational arithmetic.
// Entering column: lowest index with negative reduced cost; leaving row:
// minimum ratio, ties to the lowest basic variable index (Bland's rule, so
// the method terminates).
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace corrlab
