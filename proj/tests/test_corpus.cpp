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

#include <gtest/gtest.h>

#include <set>

#include "corrlab/corpus.hpp"
#include "corrlab/errors.hpp"
#include "corrlab/matrix_io.hpp"
#include "corrlab/rank.hpp"
#include "corrlab/symmetry.hpp"

namespace corrlab {
namespace {

std::string stream_text(const std::vector<SignMatrix>& corpus) {
  std::string s;
  for (const auto& a : corpus) s += serialize_matrix(a);
  return s;
}

GeneratorSpec spec_of(Family f, int m, int n, std::uint64_t seed, int count) {
  GeneratorSpec s;
  s.family = f;
  s.rows = m;
  s.cols = n;
  s.seed = seed;
  s.count = count;
  return s;
}

TEST(Corpus, ExhaustiveCounts) {
  EXPECT_EQ(generate(spec_of(Family::kExhaustive, 2, 2, 0, 0)).size(), 16U);
  EXPECT_EQ(generate(spec_of(Family::kExhaustive, 3, 3, 0, 0)).size(), 512U);
  auto dedup = spec_of(Family::kExhaustive, 2, 2, 0, 0);
  dedup.dedup = true;
  EXPECT_EQ(generate(dedup).size(), 5U);
  EXPECT_THROW(generate(spec_of(Family::kExhaustive, 5, 5, 0, 0)), SizeCapExceeded);
}

TEST(Corpus, DedupKeepsOneMatrixPerOrbit) {
  auto spec = spec_of(Family::kExhaustive, 3, 3, 0, 0);
  spec.dedup = true;
  const auto reps = generate(spec);
  std::set<std::uint64_t> canon;
  for (const auto& a : reps) canon.insert(canonical_code(a, SymmetryGroup{true, false}));
  EXPECT_EQ(canon.size(), reps.size());
  std::set<std::uint64_t> all;
  for (std::uint64_t code = 0; code < 512; ++code) {
    all.insert(canonical_code(SignMatrix::from_code(3, 3, code), SymmetryGroup{true, false}));
  }
  EXPECT_EQ(all, canon);
}

TEST(Corpus, OuterProductHasRankOne) {
  const SignMatrix a = outer_product("++-", "++-");
  EXPECT_EQ(rank(a).r, 1);
  EXPECT_EQ(a.at(2, 2), Sign::kPlus);
  EXPECT_EQ(a.at(0, 2), Sign::kMinus);
  EXPECT_THROW(outer_product("+x", "+"), InvalidMatrix);
}

TEST(Corpus, SeededFamiliesAreDeterministic) {
  for (const Family f : {Family::kRandom, Family::kPlanted, Family::kRank1Blocks,
                         Family::kDiagonalPattern}) {
    auto spec = spec_of(f, 6, 6, 7, 25);
    spec.block_rows = 3;
    spec.block_cols = 3;
    spec.blocks = 2;
    const auto x = stream_text(generate(spec));
    EXPECT_EQ(x, stream_text(generate(spec))) << family_name(f);
    spec.seed = 8;
    if (f != Family::kDiagonalPattern) {
      EXPECT_NE(x, stream_text(generate(spec))) << family_name(f);
    }
  }
}

TEST(Corpus, PlantedBlockIsPresent) {
  auto spec = spec_of(Family::kPlanted, 6, 6, 7, 20);
  spec.block_rows = 3;
  spec.block_cols = 3;
  spec.block_sign = Sign::kPlus;
  for (const auto& a : generate(spec)) {
    bool found = false;
    for (const Rectangle& r : RectangleRange(6, 6)) {
      if (r.height() == 3 && r.width() == 3 && a.count(Sign::kMinus, r) == 0) found = true;
    }
    EXPECT_TRUE(found);
  }
  spec.block_rows = 7;
  EXPECT_THROW(generate(spec), ConfigError);
}

TEST(Corpus, RandomBiasExtremes) {
  auto spec = spec_of(Family::kRandom, 4, 5, 1, 5);
  spec.bias = Rational(0);
  for (const auto& a : generate(spec)) EXPECT_EQ(a.count(Sign::kMinus), 0);
  spec.bias = Rational(1);
  for (const auto& a : generate(spec)) EXPECT_EQ(a.count(Sign::kPlus), 0);
  spec.bias = Rational(3, 2);
  EXPECT_THROW(generate(spec), ConfigError);
}

TEST(Corpus, LowRankFamiliesHaveLowRank) {
  auto spec = spec_of(Family::kRank1Blocks, 6, 6, 3, 100);
  for (const auto& a : generate(spec)) EXPECT_EQ(rank(a).r, 1);
  spec.blocks = 2;
  for (const auto& a : generate(spec)) EXPECT_LE(rank(a).r, 2);
  spec.blocks = 3;
  EXPECT_THROW(generate(spec), ConfigError);
}

TEST(Corpus, DiagonalPatternHasOneMinusPerRowAndColumn) {
  const auto corpus = generate(spec_of(Family::kDiagonalPattern, 4, 4, 2, 6));
  ASSERT_EQ(corpus.size(), 6U);
  EXPECT_EQ(corpus[0], SignMatrix::from_rows({"-+++", "+-++", "++-+", "+++-"}));
  for (const auto& a : corpus) {
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(a.count(Sign::kMinus, Rectangle{Mask{1} << i, 15}), 1);
      EXPECT_EQ(a.count(Sign::kMinus, Rectangle{15, Mask{1} << i}), 1);
    }
  }
}

TEST(Corpus, CapsAndFamilies) {
  EXPECT_THROW(generate(spec_of(Family::kRandom, 9, 2, 0, 1)), SizeCapExceeded);
  EXPECT_NO_THROW(generate(spec_of(Family::kRandom, 9, 2, 0, 1), SizeCap{8, true}));
  EXPECT_EQ(parse_family("rank1_blocks"), Family::kRank1Blocks);
  EXPECT_THROW(parse_family("gaussian"), ConfigError);
  EXPECT_EQ(spec_of(Family::kRandom, 5, 5, 1, 1000).describe(),
            "random 5x5 count=1000 seed=1 bias=1/2");
}

}  // namespace
}  // namespace corrlab
