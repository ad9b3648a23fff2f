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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "corrlab/measures.hpp"
#include "corrlab/rect_table.hpp"
#include "corrlab/suites.hpp"

namespace {

using namespace corrlab;

SignMatrix random_square(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return SignMatrix::from_code(n, n, rng() & ((std::uint64_t{1} << (n * n)) - 1));
}

void BM_HmonoSerial(benchmark::State& state) {
  const RectTable table(random_square(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hmono_serial(table, 1, 4));
}

void BM_HmonoParallel(benchmark::State& state) {
  const RectTable table(random_square(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hmono_parallel(table, 1, 4));
}

void BM_UbcSerial(benchmark::State& state) {
  const RectTable table(random_square(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::ubc_serial(table, 1, 4));
}

void BM_UbcParallel(benchmark::State& state) {
  const RectTable table(random_square(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::ubc_parallel(table, 1, 4));
}

void BM_SuiteThreads(benchmark::State& state) {
  std::vector<SignMatrix> corpus;
  for (std::uint64_t code = 0; code < 4096; code += 3) corpus.push_back(SignMatrix::from_code(3, 4, code));
  SuiteParams params;
  params.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("lemma7", corpus, params, "bench"));
}

BENCHMARK(BM_HmonoSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HmonoParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UbcSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UbcParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteThreads)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
