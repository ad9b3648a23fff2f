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

#include "corrlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "corrlab/errors.hpp"
#include "corrlab/size_cap.hpp"

namespace corrlab {

void SizeCap::check(int m, int n, std::string_view what) const {
  if (m < 1 || n < 1) {
    throw InvalidMatrix(std::string(what) + ": dimensions must be positive");
  }
  if (m > kHardDimLimit || n > kHardDimLimit) {
    throw SizeCapExceeded(std::string(what) + ": " + std::to_string(m) + "x" +
                          std::to_string(n) + " exceeds the hard limit of " +
                          std::to_string(kHardDimLimit));
  }
  if (!force && (m > limit || n > limit)) {
    throw SizeCapExceeded(std::string(what) + ": " + std::to_string(m) + "x" +
                          std::to_string(n) + " exceeds the size cap of " +
                          std::to_string(limit) + " (pass --force-cap to override)");
  }
}

Rational::Rational(std::int64_t value) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(z);
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  const auto slash = trimmed.find('/');
  std::string_view num = trimmed.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not an exact fraction: '" + std::string(text) + "'");
  }
  BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

bool Rational::fits_int64() const {
  return value_.get_num().fits_slong_p() && value_.get_den().fits_slong_p();
}

std::int64_t Rational::num_i64() const {
  if (!value_.get_num().fits_slong_p()) throw std::overflow_error("numerator exceeds int64");
  return value_.get_num().get_si();
}

std::int64_t Rational::den_i64() const {
  if (!value_.get_den().fits_slong_p()) throw std::overflow_error("denominator exceeds int64");
  return value_.get_den().get_si();
}

double Rational::neg_log2() const {
  if (sign() <= 0) return std::numeric_limits<double>::infinity();
  // Split into num/den so huge denominators do not underflow the double.
  long exp_num = 0;
  long exp_den = 0;
  const double mant_num = mpz_get_d_2exp(&exp_num, value_.get_num_mpz_t());
  const double mant_den = mpz_get_d_2exp(&exp_den, value_.get_den_mpz_t());
  return (std::log2(mant_den) + static_cast<double>(exp_den)) -
         (std::log2(mant_num) + static_cast<double>(exp_num));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace corrlab
