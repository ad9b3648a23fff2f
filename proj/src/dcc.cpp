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

#include "corrlab/dcc.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>

#include "corrlab/errors.hpp"
#include "corrlab/instrumentation.hpp"

namespace corrlab {
namespace {

constexpr std::uint8_t kUnknown = 0xFF;
constexpr std::uint32_t kColsBit = 0x80000000U;

class DccSolver {
 public:
  explicit DccSolver(const RectTable& table)
      : table_(table),
        n_(table.cols()),
        value_(std::size_t{1} << (table.rows() + table.cols()), kUnknown),
        choice_(value_.size(), 0) {}

  int solve(Mask s, Mask t) {
    const std::size_t idx = index(s, t);
    if (value_[idx] != kUnknown) return value_[idx];
    if (table_.monochromatic(s, t)) {
      value_[idx] = 0;
      return 0;
    }
    int best = 255;
    std::uint32_t choice = 0;
    try_splits(s, [&](Mask p, Mask q) { return consider(best, choice, p, t, q, t, p); });
    if (best > 1) {
      try_splits(t, [&](Mask p, Mask q) {
        return consider(best, choice, s, p, s, q, p | kColsBit);
      });
    }
    value_[idx] = static_cast<std::uint8_t>(best);
    choice_[idx] = choice;
    return best;
  }

  ProtocolTree tree(Mask s, Mask t) {
    std::vector<ProtocolTree::Node> nodes;
    build(nodes, s, t);
    return ProtocolTree(std::move(nodes));
  }

 private:
  std::size_t index(Mask s, Mask t) const { return (static_cast<std::size_t>(s) << n_) | t; }

  // Canonical splits of `set`: the left part always holds the lowest index.
  // The callback returns true to stop early.
  template <typename F>
  static void try_splits(Mask set, F&& f) {
    if (popcount(set) < 2) return;
    const Mask low = set & (0U - set);
    const Mask rest = set ^ low;
    Mask sub = 0;
    do {
      if (sub != rest) {
        const Mask p = low | sub;
        if (f(p, set ^ p)) return;
      }
      sub = (sub - rest) & rest;
    } while (sub != 0);
  }

  bool consider(int& best, std::uint32_t& choice, Mask s1, Mask t1, Mask s2, Mask t2,
                std::uint32_t code) {
    const int a = solve(s1, t1);
    if (1 + a >= best) return false;
    const int b = solve(s2, t2);
    const int c = 1 + std::max(a, b);
    if (c < best) {
      best = c;
      choice = code;
    }
    return best == 1;
  }

  int build(std::vector<ProtocolTree::Node>& nodes, Mask s, Mask t) {
    solve(s, t);
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[id].rect = {s, t};
    const std::size_t idx = index(s, t);
    if (value_[idx] == 0) {
      nodes[id].leaf = true;
      nodes[id].sign = table_.neg(s, t) == 0 ? Sign::kPlus : Sign::kMinus;
      return id;
    }
    const std::uint32_t c = choice_[idx];
    const bool cols = (c & kColsBit) != 0;
    const Mask part = c & ~kColsBit;
    const Mask set = cols ? t : s;
    nodes[id].leaf = false;
    nodes[id].speaker = cols ? Speaker::kCols : Speaker::kRows;
    nodes[id].left_part = part;
    nodes[id].right_part = set ^ part;
    const int l = cols ? build(nodes, s, part) : build(nodes, part, t);
    const int r = cols ? build(nodes, s, set ^ part) : build(nodes, set ^ part, t);
    nodes[id].left = l;
    nodes[id].right = r;
    return id;
  }

  const RectTable& table_;
  int n_;
  std::vector<std::uint8_t> value_;
  std::vector<std::uint32_t> choice_;
};

std::string hex(Mask m) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", m);
  return buf;
}

}  // namespace

int ProtocolTree::cost() const {
  std::function<int(int)> depth = [&](int id) -> int {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    return n.leaf ? 0 : 1 + std::max(depth(n.left), depth(n.right));
  };
  return nodes_.empty() ? 0 : depth(0);
}

std::vector<const ProtocolTree::Node*> ProtocolTree::leaves() const {
  std::vector<const Node*> out;
  std::function<void(int)> walk = [&](int id) {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (n.leaf) {
      out.push_back(&n);
    } else {
      walk(n.left);
      walk(n.right);
    }
  };
  if (!nodes_.empty()) walk(0);
  return out;
}

std::string ProtocolTree::serialize() const {
  std::function<std::string(int)> emit = [&](int id) -> std::string {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (n.leaf) {
      return "(leaf " + std::string(1, to_char(n.sign)) + " " + hex(n.rect.rows) + " " +
             hex(n.rect.cols) + ")";
    }
    return "(" + std::string(n.speaker == Speaker::kRows ? "rows" : "cols") + " " +
           hex(n.left_part) + " " + hex(n.right_part) + " " + emit(n.left) + " " +
           emit(n.right) + ")";
  };
  return nodes_.empty() ? std::string() : emit(0);
}

ProtocolTree ProtocolTree::parse(std::string_view text, int rows, int cols) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError("protocol tree: expected '" + std::string(1, c) + "' at offset " +
                       std::to_string(pos));
    }
    ++pos;
  };
  auto word = [&] {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  };
  auto mask = [&] {
    const std::string w = word();
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(w, &used, 16);
      if (used != w.size()) throw std::invalid_argument(w);
      return static_cast<Mask>(v);
    } catch (const std::exception&) {
      throw ParseError("protocol tree: bad mask '" + w + "'");
    }
  };

  std::vector<Node> nodes;
  std::function<int(Rectangle)> node = [&](Rectangle rect) -> int {
    expect('(');
    const std::string kind = word();
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[id].rect = rect;
    if (kind == "leaf") {
      const std::string sign = word();
      if (sign != "+" && sign != "-") throw ParseError("protocol tree: bad leaf sign");
      nodes[id].sign = sign == "+" ? Sign::kPlus : Sign::kMinus;
      const Rectangle stated{mask(), mask()};
      if (stated != rect) throw ParseError("protocol tree: leaf rectangle mismatch");
    } else if (kind == "rows" || kind == "cols") {
      nodes[id].leaf = false;
      nodes[id].speaker = kind == "rows" ? Speaker::kRows : Speaker::kCols;
      nodes[id].left_part = mask();
      nodes[id].right_part = mask();
      const bool by_rows = kind == "rows";
      const int l = node(by_rows ? Rectangle{nodes[id].left_part, rect.cols}
                                 : Rectangle{rect.rows, nodes[id].left_part});
      const Mask rp = nodes[id].right_part;
      const int r = node(by_rows ? Rectangle{rp, rect.cols} : Rectangle{rect.rows, rp});
      nodes[id].left = l;
      nodes[id].right = r;
    } else {
      throw ParseError("protocol tree: unknown node kind '" + kind + "'");
    }
    expect(')');
    return id;
  };
  node(Rectangle::full(rows, cols));
  skip();
  if (pos != text.size()) throw ParseError("protocol tree: trailing text");
  return ProtocolTree(std::move(nodes));
}

void ProtocolTree::validate(const SignMatrix& a) const {
  if (nodes_.empty()) throw InternalInvariant("empty protocol tree");
  if (root().rect != Rectangle::full(a.rows(), a.cols())) {
    throw InternalInvariant("protocol root is not the whole matrix");
  }
  for (const Node& n : nodes_) {
    if (n.leaf) {
      if (a.count(-n.sign, n.rect) != 0) {
        throw InternalInvariant("leaf " + n.rect.to_string() + " is not " +
                                std::string(1, to_char(n.sign)) + "-monochromatic");
      }
      continue;
    }
    const Mask set = n.speaker == Speaker::kRows ? n.rect.rows : n.rect.cols;
    if (n.left_part == 0 || n.right_part == 0 || (n.left_part & n.right_part) != 0 ||
        (n.left_part | n.right_part) != set) {
      throw InternalInvariant("node " + n.rect.to_string() + " does not split its index set");
    }
  }
  int area = 0;
  for (const Node* leaf : leaves()) area += leaf->rect.size();
  if (area != a.size()) throw InternalInvariant("protocol leaves do not tile the matrix");
}

DccResult dcc_exact(const SignMatrix& a, const SizeCap& cap) {
  cap.check(a.rows(), a.cols(), "dcc");
  note_engine_invocation();
  const RectTable table(a);
  DccSolver solver(table);
  const Mask s = full_mask(a.rows());
  const Mask t = full_mask(a.cols());
  DccResult result;
  result.value = solver.solve(s, t);
  result.tree = solver.tree(s, t);
  return result;
}

int dcc_value(const RectTable& table) {
  DccSolver solver(table);
  return solver.solve(full_mask(table.rows()), full_mask(table.cols()));
}

std::vector<PartitionPart> monochromatic_partition(const DccResult& result) {
  std::vector<PartitionPart> parts;
  for (const auto* leaf : result.tree.leaves()) parts.push_back({leaf->rect, leaf->sign});
  return parts;
}

}  // namespace corrlab
