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

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "corrlab/size_cap.hpp"

namespace corrlab {

// Index subset of [m] or [n]; bit i set means index i is in the set.
using Mask = std::uint32_t;

inline constexpr Mask full_mask(int k) { return k >= 32 ? ~Mask{0} : ((Mask{1} << k) - 1); }
inline int popcount(Mask s) { return std::popcount(s); }

// Combinatorial rectangle S x T. Both index sets nonempty once validated.
struct Rectangle {
  Mask rows = 0;
  Mask cols = 0;

  int height() const { return popcount(rows); }
  int width() const { return popcount(cols); }
  int size() const { return height() * width(); }
  bool contains(int i, int j) const { return ((rows >> i) & 1U) && ((cols >> j) & 1U); }
  bool contains(const Rectangle& other) const {
    return (other.rows & ~rows) == 0 && (other.cols & ~cols) == 0;
  }
  bool disjoint(const Rectangle& other) const {
    return (rows & other.rows) == 0 || (cols & other.cols) == 0;
  }

  // Throws InvalidRectangle on an empty side or an index outside m x n.
  void validate(int m, int n) const;

  static Rectangle full(int m, int n) { return {full_mask(m), full_mask(n)}; }

  // "{0,2}x{1}"
  std::string to_string() const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
  // Enumeration order: row-mask-major, then column mask.
  friend auto operator<=>(const Rectangle& a, const Rectangle& b) {
    return a.rows != b.rows ? a.rows <=> b.rows : a.cols <=> b.cols;
  }
};

// All (2^m - 1)(2^n - 1) nonempty rectangles, row-mask-major.
class RectangleRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Rectangle;
    using difference_type = std::ptrdiff_t;
    using pointer = const Rectangle*;
    using reference = const Rectangle&;

    iterator() = default;
    iterator(Rectangle cur, Mask row_end, Mask col_end)
        : cur_(cur), row_end_(row_end), col_end_(col_end) {}
    reference operator*() const { return cur_; }
    pointer operator->() const { return &cur_; }
    iterator& operator++() {
      if (++cur_.cols == col_end_) {
        cur_.cols = 1;
        ++cur_.rows;
      }
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.cur_ == b.cur_; }

   private:
    Rectangle cur_;
    Mask row_end_ = 0;
    Mask col_end_ = 0;
  };

  RectangleRange(int m, int n) : m_(m), n_(n) {}
  iterator begin() const { return {Rectangle{1, 1}, full_mask(m_) + 1, full_mask(n_) + 1}; }
  iterator end() const { return {Rectangle{full_mask(m_) + 1, 1}, full_mask(m_) + 1, full_mask(n_) + 1}; }
  std::uint64_t count() const { return std::uint64_t{full_mask(m_)} * full_mask(n_); }

 private:
  int m_;
  int n_;
};

// Throws SizeCapExceeded above the cap.
RectangleRange rectangle_enumerate(int m, int n, const SizeCap& cap = {});

// The complement of R in [m] x [n] as the disjoint rectangles
// (~S x T), (S x ~T), (~S x ~T), dropping empty ones.
std::vector<Rectangle> complement_partition(const Rectangle& r, int m, int n);

// Two-part variant: (~S x [n]), (S x ~T).
std::vector<Rectangle> complement_partition_two(const Rectangle& r, int m, int n);

// Calls f(sub) for every nonempty submask of s, in decreasing numeric order.
template <typename F>
void for_each_submask(Mask s, F&& f) {
  for (Mask sub = s; sub != 0; sub = (sub - 1) & s) f(sub);
}

}  // namespace corrlab
