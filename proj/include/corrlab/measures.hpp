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
#include <string_view>

#include "corrlab/distribution.hpp"
#include "corrlab/rational.hpp"
#include "corrlab/rect_table.hpp"
#include "corrlab/rectangle.hpp"
#include "corrlab/sign_matrix.hpp"
#include "corrlab/size_cap.hpp"

namespace corrlab {

// A rho or epsilon in [0, 1].
class Threshold {
 public:
  explicit Threshold(Rational value);
  Threshold(std::int64_t num, std::int64_t den) : Threshold(Rational(num, den)) {}
  static Threshold parse(std::string_view text);

  const Rational& value() const { return value_; }
  // Integer parts for the counting kernels. Throws if they exceed int64.
  std::int64_t num() const { return value_.num_i64(); }
  std::int64_t den() const { return value_.den_i64(); }

  std::string to_string() const { return value_.to_string(); }

 private:
  Rational value_;
};

enum class Exec { kSerial, kParallel };

// Result of a maximal-rectangle measure. max_size is the maximised
// rectangle mass, the measure itself is -log2(max_size).
struct MeasureResult {
  Rational max_size;
  double log2_value = 0.0;  // display only
  Rectangle witness_rectangle;
  Rectangle witness_submatrix;  // hmono: the maximising submatrix B
  Rectangle witness_support;    // ubc: support of the maximising distribution
  Sign orientation = Sign::kMinus;
};

// Exact fraction with small int64 parts, compared by 128-bit cross products.
struct SizeFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational to_rational() const { return Rational(num, den); }
};

inline bool operator<(const SizeFraction& a, const SizeFraction& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator<=(const SizeFraction& a, const SizeFraction& b) { return !(b < a); }

// Counting-kernel results. Sizes are fractions of the uniform (mono/hmono)
// or uniformly-balanced (ubc) mass; witnesses live in A's index space.
struct MonoHit {
  SizeFraction size;
  Rectangle submatrix;
  Rectangle rectangle;
  Sign v = Sign::kMinus;
};

struct UbcHit {
  SizeFraction size;
  Rectangle support;
  Rectangle rectangle;
  Sign v = Sign::kPlus;
};

namespace kernels {

// Largest R inside B = (s, t) with u_B(v|R) <= rho u_B(v), v the minority of
// B. Ties go to the first R in row-mask-major order.
MonoHit mono_in(const RectTable& table, Mask s, Mask t, std::int64_t p, std::int64_t q);

MonoHit hmono_serial(const RectTable& table, std::int64_t p, std::int64_t q);
MonoHit hmono_parallel(const RectTable& table, std::int64_t p, std::int64_t q);

// Both orientations of every admissible support. Requires both signs in A.
UbcHit ubc_serial(const RectTable& table, std::int64_t p, std::int64_t q);
UbcHit ubc_parallel(const RectTable& table, std::int64_t p, std::int64_t q);

// Best rectangle for one uniformly-balanced support and orientation.
// size is relative to the support's mass (1); rectangle lies inside it.
UbcHit size_in_support(const RectTable& table, Mask s, Mask t, Sign v, std::int64_t p,
                       std::int64_t q);

// Largest v-monochromatic rectangle; {0,0} when v is absent.
Rectangle largest_monochromatic(const RectTable& table, Sign v);

}  // namespace kernels

// Definition-3 measure for the whole matrix.
MeasureResult mono(const SignMatrix& a, const Threshold& rho, const SizeCap& cap = {},
                   Exec exec = Exec::kSerial);

// max over all submatrices B of mono_rho(B); the minority is recomputed for
// each B.
MeasureResult hmono(const SignMatrix& a, const Threshold& rho,
                    const SizeCap& cap = {kDefaultHmonoCap, false}, Exec exec = Exec::kParallel);

struct SizeResult {
  Rational size;
  Rectangle witness;
  // No feasible rectangle carries positive mass.
  bool degenerate = false;
};

// max_R { mu(R) : mu(-v, R) <= eps mu(R) } for an arbitrary distribution.
SizeResult size_eps(const SignMatrix& a, const EntryDistribution& mu, const Threshold& eps, Sign v,
                    const SizeCap& cap = {});
// Same quantity for a uniformly-balanced distribution, via integer counts.
SizeResult size_eps(const UniformlyBalancedDistribution& mu, const Threshold& eps, Sign v);

// Corruption bound restricted to uniformly-balanced distributions. Throws
// UnbalanceableSupport when A is monochromatic.
MeasureResult ubc(const SignMatrix& a, const Threshold& eps, const SizeCap& cap = {},
                  Exec exec = Exec::kParallel);

}  // namespace corrlab
