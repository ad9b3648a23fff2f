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

#include "corrlab/corpus.hpp"

#include <random>

#include "corrlab/errors.hpp"
#include "corrlab/symmetry.hpp"

namespace corrlab {
namespace {

// Uniform draw in [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound) - 1;
  while (true) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

Sign draw_sign(std::mt19937_64& rng) { return draw(rng, 2) ? Sign::kMinus : Sign::kPlus; }

std::vector<int> shuffled(std::mt19937_64& rng, int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i;
  for (int i = k - 1; i > 0; --i) {
    const auto j = static_cast<int>(draw(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
  }
  return v;
}

SignMatrix build(int m, int n, const std::vector<int>& entries) {
  return SignMatrix(m, n, std::span<const int>(entries));
}

SignMatrix random_matrix(std::mt19937_64& rng, int m, int n, const Rational& bias) {
  const auto p = static_cast<std::uint64_t>(bias.num_i64());
  const auto q = static_cast<std::uint64_t>(bias.den_i64());
  std::vector<int> e(static_cast<std::size_t>(m * n));
  for (auto& x : e) x = draw(rng, q) < p ? -1 : 1;
  return build(m, n, e);
}

SignMatrix permuted(std::mt19937_64& rng, const SignMatrix& a) {
  const auto rp = shuffled(rng, a.rows());
  const auto cp = shuffled(rng, a.cols());
  std::vector<int> e;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      e.push_back(a.value(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]));
    }
  }
  return build(a.rows(), a.cols(), e);
}

SignMatrix rank_blocks(std::mt19937_64& rng, int m, int n, int blocks) {
  std::vector<int> s(static_cast<std::size_t>(m));
  std::vector<int> t(static_cast<std::size_t>(n));
  for (auto& x : s) x = to_int(draw_sign(rng));
  for (auto& x : t) x = to_int(draw_sign(rng));
  std::vector<int> e(static_cast<std::size_t>(m * n));
  if (blocks == 1 || m < 2 || n < 2) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i * n + j)] = s[i] * t[j];
    }
    return build(m, n, e);
  }
  // diag(s1, s2) * alpha * diag(t1, t2)^T has rank at most 2.
  const int row_split = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(m - 1)));
  const int col_split = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - 1)));
  int alpha[2][2];
  for (auto& row : alpha) {
    for (auto& x : row) x = to_int(draw_sign(rng));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      e[static_cast<std::size_t>(i * n + j)] =
          alpha[i < row_split ? 0 : 1][j < col_split ? 0 : 1] * s[i] * t[j];
    }
  }
  return permuted(rng, build(m, n, e));
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "exhaustive") return Family::kExhaustive;
  if (name == "random") return Family::kRandom;
  if (name == "planted") return Family::kPlanted;
  if (name == "rank1_blocks") return Family::kRank1Blocks;
  if (name == "diagonal_pattern") return Family::kDiagonalPattern;
  throw ConfigError("unknown generator family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kExhaustive: return "exhaustive";
    case Family::kRandom: return "random";
    case Family::kPlanted: return "planted";
    case Family::kRank1Blocks: return "rank1_blocks";
    case Family::kDiagonalPattern: return "diagonal_pattern";
  }
  return "unknown";
}

std::string GeneratorSpec::describe() const {
  std::string out = family_name(family) + " " + std::to_string(rows) + "x" + std::to_string(cols);
  if (family == Family::kExhaustive) return out + (dedup ? " (dedup)" : "");
  out += " count=" + std::to_string(count) + " seed=" + std::to_string(seed);
  if (family == Family::kRandom || family == Family::kPlanted) out += " bias=" + bias.to_string();
  if (family == Family::kPlanted) {
    out += " block=" + std::to_string(block_rows) + "x" + std::to_string(block_cols) + " sign=" +
           std::string(1, to_char(block_sign));
  }
  if (family == Family::kRank1Blocks) out += " blocks=" + std::to_string(blocks);
  return out;
}

std::vector<SignMatrix> generate(const GeneratorSpec& spec, const SizeCap& cap) {
  cap.check(spec.rows, spec.cols, "generate");
  const int m = spec.rows;
  const int n = spec.cols;
  std::vector<SignMatrix> out;

  if (spec.family == Family::kExhaustive) {
    if (m * n > kMaxExhaustiveEntries) {
      throw SizeCapExceeded("exhaustive corpus " + std::to_string(m) + "x" + std::to_string(n) +
                            " has more than 2^" + std::to_string(kMaxExhaustiveEntries) +
                            " matrices");
    }
    if (spec.dedup) {
      const OrbitIndex index(m, n, SymmetryGroup{true, false});
      for (const auto code : index.representatives()) out.push_back(SignMatrix::from_code(m, n, code));
    } else {
      const std::uint64_t total = std::uint64_t{1} << (m * n);
      out.reserve(total);
      for (std::uint64_t code = 0; code < total; ++code) out.push_back(SignMatrix::from_code(m, n, code));
    }
    return out;
  }

  if (spec.count < 0) throw ConfigError("count must be non-negative");
  if (spec.bias < Rational(0) || spec.bias > Rational(1)) throw ConfigError("bias must lie in [0, 1]");
  std::mt19937_64 rng(spec.seed);
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int k = 0; k < spec.count; ++k) {
    switch (spec.family) {
      case Family::kRandom:
        out.push_back(random_matrix(rng, m, n, spec.bias));
        break;
      case Family::kPlanted: {
        if (spec.block_rows < 1 || spec.block_rows > m || spec.block_cols < 1 || spec.block_cols > n) {
          throw ConfigError("planted block must fit inside the matrix");
        }
        const SignMatrix base = random_matrix(rng, m, n, spec.bias);
        const auto rp = shuffled(rng, m);
        const auto cp = shuffled(rng, n);
        std::vector<int> e;
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < n; ++j) e.push_back(base.value(i, j));
        }
        for (int i = 0; i < spec.block_rows; ++i) {
          for (int j = 0; j < spec.block_cols; ++j) {
            e[static_cast<std::size_t>(rp[static_cast<std::size_t>(i)] * n + cp[static_cast<std::size_t>(j)])] =
                to_int(spec.block_sign);
          }
        }
        out.push_back(build(m, n, e));
        break;
      }
      case Family::kRank1Blocks:
        if (spec.blocks != 1 && spec.blocks != 2) throw ConfigError("blocks must be 1 or 2");
        out.push_back(rank_blocks(rng, m, n, spec.blocks));
        break;
      case Family::kDiagonalPattern: {
        std::vector<int> e;
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < n; ++j) e.push_back(i == j ? -1 : 1);
        }
        const SignMatrix base = build(m, n, e);
        out.push_back(k == 0 ? base : permuted(rng, base));
        break;
      }
      case Family::kExhaustive:
        break;
    }
  }
  return out;
}

SignMatrix outer_product(std::string_view s, std::string_view t) {
  auto sign = [](char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw InvalidMatrix(std::string("bad sign character '") + c + "'");
  };
  std::vector<int> e;
  for (const char a : s) {
    for (const char b : t) e.push_back(sign(a) * sign(b));
  }
  return build(static_cast<int>(s.size()), static_cast<int>(t.size()), e);
}

}  // namespace corrlab
