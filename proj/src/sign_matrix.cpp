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

#include "corrlab/sign_matrix.hpp"

#include <cstdio>
#include <vector>

#include "corrlab/errors.hpp"
#include "corrlab/matrix_io.hpp"

namespace corrlab {

SignMatrix::SignMatrix(int rows, int cols) : m_(rows), n_(cols) {
  if (rows < 1 || cols < 1) throw InvalidMatrix("sign matrix dimensions must be positive");
  if (rows > kHardDimLimit || cols > kHardDimLimit) {
    throw SizeCapExceeded("sign matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " exceeds the hard limit of " + std::to_string(kHardDimLimit));
  }
}

SignMatrix::SignMatrix(int rows, int cols, std::span<const int> entries) : SignMatrix(rows, cols) {
  if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw InvalidMatrix("expected " + std::to_string(rows * cols) + " entries, got " +
                        std::to_string(entries.size()));
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int e = entries[static_cast<std::size_t>(i * cols + j)];
      if (e == -1) {
        neg_[i] |= Mask{1} << j;
      } else if (e != 1) {
        throw InvalidMatrix("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not +1 or -1");
      }
    }
  }
}

SignMatrix SignMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  if (rows.size() == 0) throw InvalidMatrix("no rows");
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.begin()->size());
  SignMatrix a(m, n);
  int i = 0;
  for (auto row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidMatrix("ragged rows");
    for (int j = 0; j < n; ++j) {
      const char c = row[static_cast<std::size_t>(j)];
      if (c == '-' || c == '1') {
        a.neg_[i] |= Mask{1} << j;
      } else if (c != '+' && c != '0') {
        throw InvalidMatrix(std::string("bad entry character '") + c + "'");
      }
    }
    ++i;
  }
  return a;
}

SignMatrix SignMatrix::from_code(int rows, int cols, std::uint64_t code) {
  SignMatrix a(rows, cols);
  if (rows * cols > 64) throw InvalidMatrix("code form needs m*n <= 64");
  for (int i = 0; i < rows; ++i) {
    a.neg_[i] = static_cast<Mask>((code >> (i * cols)) & full_mask(cols));
  }
  return a;
}

SignMatrix SignMatrix::constant(int rows, int cols, Sign v) {
  SignMatrix a(rows, cols);
  if (v == Sign::kMinus) {
    for (int i = 0; i < rows; ++i) a.neg_[i] = full_mask(cols);
  }
  return a;
}

SignMatrix SignMatrix::from_neg_masks(int rows, int cols, std::span<const Mask> neg_rows) {
  SignMatrix a(rows, cols);
  if (neg_rows.size() != static_cast<std::size_t>(rows)) throw InvalidMatrix("row count mismatch");
  for (int i = 0; i < rows; ++i) {
    if ((neg_rows[i] & ~full_mask(cols)) != 0) throw InvalidMatrix("row mask out of range");
    a.neg_[i] = neg_rows[i];
  }
  return a;
}

int SignMatrix::count(Sign v) const { return count(v, Rectangle::full(m_, n_)); }

int SignMatrix::count(Sign v, const Rectangle& r) const {
  int neg = 0;
  for (int i = 0; i < m_; ++i) {
    if ((r.rows >> i) & 1U) neg += popcount(neg_[i] & r.cols);
  }
  return v == Sign::kMinus ? neg : r.size() - neg;
}

bool SignMatrix::is_monochromatic(const Rectangle& r) const {
  const int neg = count(Sign::kMinus, r);
  return neg == 0 || neg == r.size();
}

std::uint64_t SignMatrix::code() const {
  if (m_ * n_ > 64) throw InvalidMatrix("code form needs m*n <= 64");
  std::uint64_t code = 0;
  for (int i = 0; i < m_; ++i) code |= std::uint64_t{neg_[i]} << (i * n_);
  return code;
}

SignMatrix SignMatrix::negated() const {
  SignMatrix a(m_, n_);
  for (int i = 0; i < m_; ++i) a.neg_[i] = ~neg_[i] & full_mask(n_);
  return a;
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix a(n_, m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((neg_[i] >> j) & 1U) a.neg_[j] |= Mask{1} << i;
    }
  }
  return a;
}

std::string SignMatrix::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : serialize_matrix(*this)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SignMatrix submatrix(const SignMatrix& a, const Rectangle& r) {
  r.validate(a.rows(), a.cols());
  std::vector<Mask> rows;
  for (int i = 0; i < a.rows(); ++i) {
    if (!((r.rows >> i) & 1U)) continue;
    Mask packed = 0;
    int k = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (!((r.cols >> j) & 1U)) continue;
      if ((a.neg_row(i) >> j) & 1U) packed |= Mask{1} << k;
      ++k;
    }
    rows.push_back(packed);
  }
  return SignMatrix::from_neg_masks(r.height(), r.width(), rows);
}

}  // namespace corrlab
