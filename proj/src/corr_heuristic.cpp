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

#include "corrlab/corr_heuristic.hpp"

#include <random>

#include "corrlab/errors.hpp"
#include "corrlab/instrumentation.hpp"

namespace corrlab {
namespace {

// Rescales each sign class so that both carry at least `floor`.
std::vector<Rational> project(const SignMatrix& a, std::vector<Rational> w, const Rational& floor) {
  Rational neg;
  Rational pos;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      (a.at(i, j) == Sign::kMinus ? neg : pos) += w[static_cast<std::size_t>(i * a.cols() + j)];
    }
  }
  const Rational total = neg + pos;
  neg /= total;
  pos /= total;
  Rational neg_target = neg;
  Rational pos_target = pos;
  if (neg < floor) {
    neg_target = floor;
    pos_target = Rational(1) - floor;
  } else if (pos < floor) {
    pos_target = floor;
    neg_target = Rational(1) - floor;
  }
  const Rational neg_scale = neg_target / (neg * total);
  const Rational pos_scale = pos_target / (pos * total);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      auto& x = w[static_cast<std::size_t>(i * a.cols() + j)];
      x *= a.at(i, j) == Sign::kMinus ? neg_scale : pos_scale;
    }
  }
  return w;
}

struct Evaluation {
  Rational size;
  Sign v;
  Rectangle rect;
};

Evaluation evaluate(const SignMatrix& a, const EntryDistribution& mu, const Threshold& eps,
                    const SizeCap& cap) {
  const SizeResult minus = size_eps(a, mu, eps, Sign::kMinus, cap);
  const SizeResult plus = size_eps(a, mu, eps, Sign::kPlus, cap);
  if (plus.size < minus.size) return {plus.size, Sign::kPlus, plus.witness};
  return {minus.size, Sign::kMinus, minus.witness};
}

}  // namespace

CorrHeuristicResult corr_lower_heuristic(const SignMatrix& a, const Threshold& eps,
                                         const Rational& balance_floor, int iterations,
                                         std::uint64_t seed, const SizeCap& cap) {
  cap.check(a.rows(), a.cols(), "corr-heuristic");
  if (balance_floor.sign() <= 0 || balance_floor > Rational(1, 2)) {
    throw InvalidThreshold("balance floor must lie in (0, 1/2]");
  }
  if (!a.has_both_signs()) {
    throw UnbalanceableSupport("a balanced distribution needs both signs");
  }
  if (iterations < 0) throw InvalidThreshold("iterations must be non-negative");
  note_engine_invocation();

  const int m = a.rows();
  const int n = a.cols();
  const auto cells = static_cast<std::size_t>(m * n);
  std::vector<Rational> start = project(a, std::vector<Rational>(cells, Rational(1)), balance_floor);
  EntryDistribution start_mu(m, n, start);
  const Evaluation first = evaluate(a, start_mu, eps, cap);

  CorrHeuristicResult out{first.size, 0.0, start_mu, first.v, first.rect, first.size, iterations};

  std::mt19937_64 rng(seed);
  std::vector<Rational> w = start;
  for (auto& x : w) x *= Rational(static_cast<std::int64_t>(1 + rng() % 3));
  w = project(a, std::move(w), balance_floor);

  for (int it = 0; it < iterations; ++it) {
    EntryDistribution mu(m, n, w);
    const Evaluation e = evaluate(a, mu, eps, cap);
    if (e.size < out.best_size) {
      out.best_size = e.size;
      out.best_mu = mu;
      out.orientation = e.v;
      out.witness = e.rect;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!e.rect.contains(i, j)) w[static_cast<std::size_t>(i * n + j)] *= Rational(2);
      }
    }
    w = project(a, std::move(w), balance_floor);
  }
  out.log2_value = out.best_size.neg_log2();
  return out;
}

}  // namespace corrlab
