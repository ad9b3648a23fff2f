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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrlab/discrepancy.hpp"
#include "corrlab/measures.hpp"
#include "corrlab/sign_matrix.hpp"

namespace corrlab {

struct Violation {
  std::size_t index = 0;  // position in the corpus
  std::string matrix;     // text format
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string corpus;
  std::size_t instances = 0;
  std::size_t checked = 0;
  std::size_t vacuous = 0;
  std::vector<Violation> violations;  // sorted by corpus index
  std::map<std::string, std::string> stats;
  double elapsed_ms = 0.0;

  bool passed() const { return violations.empty(); }
};

struct SuiteParams {
  // Defaults per suite are applied when these are empty.
  std::vector<Threshold> eps;
  std::vector<Threshold> rho;
  ComplementSplit split = ComplementSplit::kThree;
  // Worker threads; 0 means the OpenMP default.
  int threads = 0;
};

// Outcome of one suite predicate on one matrix.
struct InstanceOutcome {
  bool vacuous = false;
  std::vector<std::string> violations;
  // Report-only observations, merged across the corpus by the suite's
  // finalize hook.
  std::map<std::string, Rational> observed_min;
  std::map<std::string, Rational> observed_max;
  std::map<std::string, std::int64_t> counters;
};

// Per-corpus state prepared before the parallel sweep (e.g. discrepancy
// values solved once per symmetry orbit).
class SuiteContext {
 public:
  virtual ~SuiteContext() = default;
};

struct SuiteDefinition {
  std::string name;
  std::string description;
  std::function<std::unique_ptr<SuiteContext>(const std::vector<SignMatrix>&, const SuiteParams&)>
      prepare;
  std::function<InstanceOutcome(const SignMatrix&, std::size_t index, const SuiteParams&,
                                 const SuiteContext*)>
      check;
};

std::vector<std::string> suite_names();
const SuiteDefinition& find_suite(std::string_view name);  // throws ConfigError
void register_suite(SuiteDefinition def);

// Evaluates the suite predicate on every matrix (OpenMP across matrices;
// kernels inside run serially). Result order is independent of scheduling.
SuiteReport run_suite(std::string_view name, const std::vector<SignMatrix>& corpus,
                      const SuiteParams& params, std::string corpus_description);

// Discrepancy values for a corpus, solved once per orbit of row/column
// permutations, negation and (square) transposition.
std::vector<Rational> discrepancy_by_orbit(const std::vector<SignMatrix>& corpus);

// Per-matrix quantities feeding the report-only trend tables.
struct MatrixFacts {
  std::string hash;
  int rows = 0;
  int cols = 0;
  int dcc = 0;
  int rank = 0;
  Rational hmono_half_size;  // max_size of hmono_{1/2}
  Rational hmono_zero_size;  // max_size of hmono_0
  std::optional<Rational> d;  // 1/disc; only filled when requested
};

MatrixFacts compute_facts(const SignMatrix& a, bool with_disc = false);

enum class Trend { kDepthVsHmonoHalf, kDepthVsHmonoZero, kDiscRank };
Trend parse_trend(std::string_view name);

struct TrendTable {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::optional<double> max_ratio;  // display only
  std::size_t defined_rows = 0;     // rows with a nonzero denominator
};

// theorem4 trend columns: hash, D, rank, hmono_half, ratio = D / (hmono_half log2^2 r).
// theorem1 trend columns: hash, D, rank, hmono_zero, ratio = D / (log2^2 r + hmono_zero log2 r).
// disc_rank trend columns: hash, rank, d, sqrt_rank, ratio = d / sqrt(r).
// Ratios are "n/a" where the denominator vanishes.
TrendTable build_trend(Trend trend, const std::vector<MatrixFacts>& facts);

}  // namespace corrlab
