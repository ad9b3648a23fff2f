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

#include <vector>

#include "corrlab/rational.hpp"
#include "corrlab/rectangle.hpp"
#include "corrlab/sign_matrix.hpp"

namespace corrlab {

// Exact probability mass on the entries of an m x n matrix.
class EntryDistribution {
 public:
  // Row-major masses. Throws InvalidDistribution unless all are >= 0 and
  // they sum to exactly 1.
  EntryDistribution(int rows, int cols, std::vector<Rational> mass);

  static EntryDistribution uniform(int rows, int cols);

  int rows() const { return m_; }
  int cols() const { return n_; }
  const Rational& at(int i, int j) const { return mass_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<Rational>& masses() const { return mass_; }

  Rational mass(const Rectangle& r) const;

 private:
  int m_;
  int n_;
  std::vector<Rational> mass_;
};

// mu(v, R): mass of the v-valued entries of A inside R.
Rational value_mass(const EntryDistribution& mu, const SignMatrix& a, Sign v, const Rectangle& r);
Rational value_mass(const EntryDistribution& mu, const SignMatrix& a, Sign v);

// mu(v | R) = mu(v, R) / mu(R). Throws UndefinedConditional when mu(R) = 0.
Rational conditional_mass(const EntryDistribution& mu, const SignMatrix& a, Sign v,
                          const Rectangle& r);

// The sign v with u(v) <= 1/2 under the uniform distribution. An exact tie
// resolves to -1; a monochromatic matrix yields its absent sign.
Sign minority_value(const SignMatrix& a);

// Supported on a rectangle, constant on each sign class inside it, and
// giving total mass exactly 1/2 to each sign.
class UniformlyBalancedDistribution {
 public:
  const SignMatrix& matrix() const { return a_; }
  const Rectangle& support() const { return support_; }
  int neg_count() const { return neg_; }
  int pos_count() const { return pos_; }
  Rational weight_neg() const { return Rational(1, 2 * neg_); }
  Rational weight_pos() const { return Rational(1, 2 * pos_); }

  Rational at(int i, int j) const;
  Rational mass(const Rectangle& r) const;
  EntryDistribution to_entry_distribution() const;

  // Integer form: mass(R) = scaled_mass(R) / common_denominator(), where
  // common_denominator = 2 * neg_count * pos_count.
  std::int64_t common_denominator() const { return 2LL * neg_ * pos_; }
  std::int64_t scaled_mass(const Rectangle& r) const;
  // Signed mass sum_{R} mu(i,j) A_ij, over the same denominator.
  std::int64_t scaled_signed_mass(const Rectangle& r) const;
  std::int64_t scaled_value_mass(Sign v, const Rectangle& r) const;

 private:
  friend UniformlyBalancedDistribution uniformly_balanced(const SignMatrix& a,
                                                          const Rectangle& support);
  UniformlyBalancedDistribution(const SignMatrix& a, const Rectangle& support, int neg, int pos)
      : a_(a), support_(support), neg_(neg), pos_(pos) {}

  SignMatrix a_;
  Rectangle support_;
  int neg_;
  int pos_;
};

// Each -1 in the support weighs 1/(2 #(-1)), each +1 weighs 1/(2 #(+1)).
// Throws UnbalanceableSupport when the support is monochromatic.
UniformlyBalancedDistribution uniformly_balanced(const SignMatrix& a, const Rectangle& support);

}  // namespace corrlab
