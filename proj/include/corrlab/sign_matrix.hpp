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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "corrlab/rectangle.hpp"
#include "corrlab/size_cap.hpp"

namespace corrlab {

enum class Sign : std::int8_t { kMinus = -1, kPlus = 1 };

inline constexpr Sign operator-(Sign v) { return v == Sign::kPlus ? Sign::kMinus : Sign::kPlus; }
inline constexpr int to_int(Sign v) { return static_cast<int>(v); }
inline constexpr char to_char(Sign v) { return v == Sign::kPlus ? '+' : '-'; }

// Dense m x n matrix with entries in {-1, +1}. Stored as one bitmask of
// -1 columns per row, so it is a small trivially-copyable value.
class SignMatrix {
 public:
  // Entries in row-major order, each exactly -1 or +1. Throws InvalidMatrix.
  SignMatrix(int rows, int cols, std::span<const int> entries);

  // Rows written with '+'/'-' (or '0'/'1', 0 -> +1, 1 -> -1).
  static SignMatrix from_rows(std::initializer_list<std::string_view> rows);
  // Bit (i*n + j) of `code` set means entry (i, j) is -1.
  static SignMatrix from_code(int rows, int cols, std::uint64_t code);
  static SignMatrix constant(int rows, int cols, Sign v);
  static SignMatrix from_neg_masks(int rows, int cols, std::span<const Mask> neg_rows);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int size() const { return m_ * n_; }

  Sign at(int i, int j) const { return ((neg_[i] >> j) & 1U) ? Sign::kMinus : Sign::kPlus; }
  int value(int i, int j) const { return to_int(at(i, j)); }

  // Columns holding -1 in row i.
  Mask neg_row(int i) const { return neg_[i]; }

  int count(Sign v) const;
  int count(Sign v, const Rectangle& r) const;
  bool has_both_signs() const { return count(Sign::kMinus) != 0 && count(Sign::kPlus) != 0; }
  bool is_monochromatic(const Rectangle& r) const;

  // Requires m*n <= 64.
  std::uint64_t code() const;

  SignMatrix negated() const;
  SignMatrix transposed() const;

  // Canonical +/- text serialization, hashed with 64-bit FNV-1a; 16 hex digits.
  std::string content_hash() const;

  friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
    if (a.m_ != b.m_ || a.n_ != b.n_) return false;
    for (int i = 0; i < a.m_; ++i) {
      if (a.neg_[i] != b.neg_[i]) return false;
    }
    return true;
  }

 private:
  SignMatrix(int rows, int cols);

  int m_ = 0;
  int n_ = 0;
  std::array<Mask, kHardDimLimit> neg_{};
};

// A restricted to R, rows and columns in ascending index order.
SignMatrix submatrix(const SignMatrix& a, const Rectangle& r);

}  // namespace corrlab
