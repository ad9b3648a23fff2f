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

#include <string>
#include <string_view>
#include <vector>

#include "corrlab/rect_table.hpp"
#include "corrlab/rectangle.hpp"
#include "corrlab/sign_matrix.hpp"
#include "corrlab/size_cap.hpp"

namespace corrlab {

enum class Speaker : std::uint8_t { kRows, kCols };

// Deterministic protocol as a binary tree. Each internal node is one bit:
// the speaker splits its current index set into two nonempty parts. Leaves
// are monochromatic rectangles. Node 0 is the root.
class ProtocolTree {
 public:
  struct Node {
    Rectangle rect;
    bool leaf = true;
    Sign sign = Sign::kPlus;            // leaves only
    Speaker speaker = Speaker::kRows;   // internal only
    Mask left_part = 0;                 // speaker's half sent as bit 0
    Mask right_part = 0;
    int left = -1;
    int right = -1;
  };

  ProtocolTree() = default;
  explicit ProtocolTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }

  // Longest root-to-leaf path, in bits.
  int cost() const;
  std::vector<const Node*> leaves() const;

  // Nested text form:
  //   leaf: (leaf + 0x3 0x1)
  //   node: (rows 0x1 0x2 <left> <right>)   or  (cols ...)
  // Masks are hexadecimal index sets.
  std::string serialize() const;
  static ProtocolTree parse(std::string_view text, int rows, int cols);

  // Throws InternalInvariant unless the tree is a valid protocol for A:
  // splits are proper partitions and every leaf is monochromatic with the
  // recorded sign (so leaves tile the matrix).
  void validate(const SignMatrix& a) const;

 private:
  std::vector<Node> nodes_;
};

struct DccResult {
  int value = 0;
  ProtocolTree tree;
};

// Exact D(A): 0 on monochromatic rectangles, otherwise
// 1 + min over binary row or column splits of max(D(part1), D(part2)),
// memoized on (row set, column set).
DccResult dcc_exact(const SignMatrix& a, const SizeCap& cap = {kDefaultDccCap, false});

// Value only, on a prebuilt table. No cap check.
int dcc_value(const RectTable& table);

struct PartitionPart {
  Rectangle rect;
  Sign sign;
};

// Leaves of the optimal protocol: at most 2^D monochromatic rectangles
// tiling the matrix.
std::vector<PartitionPart> monochromatic_partition(const DccResult& result);

}  // namespace corrlab
