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

#include "corrlab/distribution.hpp"

#include "corrlab/errors.hpp"

namespace corrlab {

EntryDistribution::EntryDistribution(int rows, int cols, std::vector<Rational> mass)
    : m_(rows), n_(cols), mass_(std::move(mass)) {
  if (rows < 1 || cols < 1) throw InvalidDistribution("dimensions must be positive");
  if (mass_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw InvalidDistribution("mass vector has the wrong length");
  }
  Rational total;
  for (const auto& x : mass_) {
    if (x.sign() < 0) throw InvalidDistribution("negative mass " + x.to_string());
    total += x;
  }
  if (total != Rational(1)) throw InvalidDistribution("total mass is " + total.to_string() + ", not 1");
}

EntryDistribution EntryDistribution::uniform(int rows, int cols) {
  return EntryDistribution(rows, cols,
                           std::vector<Rational>(static_cast<std::size_t>(rows * cols),
                                                 Rational(1, rows * cols)));
}

Rational EntryDistribution::mass(const Rectangle& r) const {
  r.validate(m_, n_);
  Rational total;
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (r.contains(i, j)) total += at(i, j);
    }
  }
  return total;
}

namespace {

void check_dims(const EntryDistribution& mu, const SignMatrix& a) {
  if (mu.rows() != a.rows() || mu.cols() != a.cols()) {
    throw InvalidDistribution("distribution dimensions do not match the matrix");
  }
}

}  // namespace

Rational value_mass(const EntryDistribution& mu, const SignMatrix& a, Sign v, const Rectangle& r) {
  check_dims(mu, a);
  r.validate(a.rows(), a.cols());
  Rational total;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (r.contains(i, j) && a.at(i, j) == v) total += mu.at(i, j);
    }
  }
  return total;
}

Rational value_mass(const EntryDistribution& mu, const SignMatrix& a, Sign v) {
  return value_mass(mu, a, v, Rectangle::full(a.rows(), a.cols()));
}

Rational conditional_mass(const EntryDistribution& mu, const SignMatrix& a, Sign v,
                          const Rectangle& r) {
  check_dims(mu, a);
  const Rational total = mu.mass(r);
  if (total.is_zero()) {
    throw UndefinedConditional("mu(" + std::string(1, to_char(v)) + " | " + r.to_string() +
                               ") is undefined: the rectangle has zero mass");
  }
  return value_mass(mu, a, v, r) / total;
}

Sign minority_value(const SignMatrix& a) {
  return a.count(Sign::kMinus) <= a.count(Sign::kPlus) ? Sign::kMinus : Sign::kPlus;
}

UniformlyBalancedDistribution uniformly_balanced(const SignMatrix& a, const Rectangle& support) {
  support.validate(a.rows(), a.cols());
  const int neg = a.count(Sign::kMinus, support);
  const int pos = support.size() - neg;
  if (neg == 0 || pos == 0) {
    throw UnbalanceableSupport("support " + support.to_string() +
                               " is monochromatic; no uniformly-balanced distribution exists");
  }
  return UniformlyBalancedDistribution(a, support, neg, pos);
}

Rational UniformlyBalancedDistribution::at(int i, int j) const {
  if (!support_.contains(i, j)) return Rational(0);
  return a_.at(i, j) == Sign::kMinus ? weight_neg() : weight_pos();
}

std::int64_t UniformlyBalancedDistribution::scaled_value_mass(Sign v, const Rectangle& r) const {
  const Rectangle in{r.rows & support_.rows, r.cols & support_.cols};
  if (in.rows == 0 || in.cols == 0) return 0;
  const int neg_in = a_.count(Sign::kMinus, in);
  return v == Sign::kMinus ? std::int64_t{neg_in} * pos_
                           : std::int64_t{in.size() - neg_in} * neg_;
}

std::int64_t UniformlyBalancedDistribution::scaled_mass(const Rectangle& r) const {
  return scaled_value_mass(Sign::kMinus, r) + scaled_value_mass(Sign::kPlus, r);
}

std::int64_t UniformlyBalancedDistribution::scaled_signed_mass(const Rectangle& r) const {
  return scaled_value_mass(Sign::kPlus, r) - scaled_value_mass(Sign::kMinus, r);
}

Rational UniformlyBalancedDistribution::mass(const Rectangle& r) const {
  r.validate(a_.rows(), a_.cols());
  return Rational(scaled_mass(r), common_denominator());
}

EntryDistribution UniformlyBalancedDistribution::to_entry_distribution() const {
  std::vector<Rational> mass;
  mass.reserve(static_cast<std::size_t>(a_.size()));
  for (int i = 0; i < a_.rows(); ++i) {
    for (int j = 0; j < a_.cols(); ++j) mass.push_back(at(i, j));
  }
  return EntryDistribution(a_.rows(), a_.cols(), std::move(mass));
}

}  // namespace corrlab
