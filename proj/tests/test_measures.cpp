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

#include <random>

#include "corrlab/corr_heuristic.hpp"
#include "corrlab/errors.hpp"
#include "corrlab/matrix_io.hpp"
#include "corrlab/measures.hpp"
#include "oracle.hpp"

namespace corrlab {
namespace {

const SignMatrix kCorner = SignMatrix::from_rows({"++", "+-"});
const SignMatrix kChecker = SignMatrix::from_rows({"+-", "-+"});

Rectangle whole(const SignMatrix& a) { return Rectangle::full(a.rows(), a.cols()); }

TEST(Threshold, ParsesAndValidates) {
  EXPECT_EQ(Threshold::parse("1/4").value(), Rational(1, 4));
  EXPECT_EQ(Threshold::parse("0").value(), Rational(0));
  EXPECT_EQ(Threshold::parse("1").value(), Rational(1));
  EXPECT_THROW(Threshold::parse("3/2"), InvalidThreshold);
  EXPECT_THROW(Threshold::parse("-1/2"), InvalidThreshold);
  EXPECT_THROW(Threshold::parse("x"), ParseError);
}

TEST(Mono, Examples) {
  const auto ones = mono(SignMatrix::constant(3, 3, Sign::kPlus), Threshold(0, 1));
  EXPECT_EQ(ones.max_size, Rational(1));
  EXPECT_EQ(ones.log2_value, 0.0);
  EXPECT_EQ(ones.witness_rectangle, Rectangle::full(3, 3));

  const auto corner = mono(kCorner, Threshold(0, 1));
  EXPECT_EQ(corner.max_size, Rational(1, 2));
  EXPECT_DOUBLE_EQ(corner.log2_value, 1.0);
  EXPECT_EQ(corner.witness_rectangle, (Rectangle{1, 3}));
  EXPECT_EQ(corner.orientation, Sign::kMinus);

  const auto checker = mono(kChecker, Threshold(0, 1));
  EXPECT_EQ(checker.max_size, Rational(1, 4));
  EXPECT_DOUBLE_EQ(checker.log2_value, 2.0);
  EXPECT_EQ(kChecker.at(0, 0), Sign::kPlus);
  EXPECT_EQ(checker.witness_rectangle, (Rectangle{1, 1}));
}

TEST(Hmono, Examples) {
  EXPECT_EQ(hmono(SignMatrix::constant(3, 3, Sign::kPlus), Threshold(0, 1)).max_size, Rational(1));
  EXPECT_EQ(hmono(kCorner, Threshold(0, 1)).max_size, Rational(1, 2));
  for (std::uint64_t code = 0; code < 512; code += 7) {
    EXPECT_EQ(hmono(SignMatrix::from_code(3, 3, code), Threshold(1, 1)).max_size, Rational(1));
  }
  EXPECT_THROW(hmono(SignMatrix::constant(8, 2, Sign::kPlus), Threshold(0, 1)), SizeCapExceeded);
}

TEST(SizeEps, Examples) {
  const auto ones = SignMatrix::constant(2, 3, Sign::kPlus);
  EXPECT_EQ(size_eps(ones, EntryDistribution::uniform(2, 3), Threshold(0, 1), Sign::kPlus).size,
            Rational(1));
  const auto mu = uniformly_balanced(kCorner, whole(kCorner));
  EXPECT_EQ(size_eps(mu, Threshold(0, 1), Sign::kPlus).size, Rational(1, 3));
  EXPECT_EQ(size_eps(mu, Threshold(0, 1), Sign::kMinus).size, Rational(1, 2));
  const auto general =
      size_eps(kCorner, mu.to_entry_distribution(), Threshold(0, 1), Sign::kPlus);
  EXPECT_EQ(general.size, Rational(1, 3));
  EXPECT_FALSE(general.degenerate);
}

TEST(SizeEps, DegenerateWhenNoPositiveFeasibleMass) {
  // All mass on a -1 entry; with v = +1 and eps = 0 no rectangle of
  // positive mass avoids it.
  const SignMatrix a = SignMatrix::from_rows({"-+"});
  const EntryDistribution point(1, 2, {Rational(1), Rational(0)});
  const auto r = size_eps(a, point, Threshold(0, 1), Sign::kPlus);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.size, Rational(0));
}

TEST(Ubc, Examples) {
  const auto pair = ubc(SignMatrix::from_rows({"+-"}), Threshold(0, 1));
  EXPECT_EQ(pair.max_size, Rational(1, 2));
  EXPECT_DOUBLE_EQ(pair.log2_value, 1.0);
  const auto corner = ubc(kCorner, Threshold(0, 1));
  EXPECT_EQ(corner.max_size, Rational(1, 3));
  EXPECT_EQ(corner.witness_support, whole(kCorner));
  EXPECT_EQ(corner.orientation, Sign::kPlus);
  for (std::uint64_t code = 1; code < 511; code += 5) {
    EXPECT_EQ(ubc(SignMatrix::from_code(3, 3, code), Threshold(1, 1)).max_size, Rational(1));
  }
  EXPECT_THROW(ubc(SignMatrix::constant(2, 2, Sign::kMinus), Threshold(0, 1)),
               UnbalanceableSupport);
}

TEST(MeasuresProperty, MonoAndHmonoMatchOracleExhaustive3x3) {
  const std::vector<Rational> grid = {Rational(0), Rational(1, 8), Rational(1, 4),
                                      Rational(1, 2), Rational(3, 4), Rational(1)};
  for (std::uint64_t code = 0; code < 512; ++code) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    const auto o = oracle::from(a);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Threshold rho(grid[k]);
      ASSERT_EQ(mono(a, rho).max_size, oracle::mono(o, grid[k])) << code << " rho " << grid[k];
      // The hereditary oracle is slower; cover each threshold on a stride.
      if ((code + k) % 3 == 0) {
        ASSERT_EQ(hmono(a, rho).max_size, oracle::hmono(o, grid[k])) << code << " rho " << grid[k];
      }
    }
  }
}

TEST(MeasuresProperty, MonoAndHmonoMatchOracleRectangular) {
  for (const auto& [m, n] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 2}}) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m * n)); ++code) {
      const SignMatrix a = SignMatrix::from_code(m, n, code);
      const auto o = oracle::from(a);
      for (const Rational& rho : {Rational(0), Rational(1, 3), Rational(2, 3)}) {
        ASSERT_EQ(mono(a, Threshold(rho)).max_size, oracle::mono(o, rho));
        ASSERT_EQ(hmono(a, Threshold(rho)).max_size, oracle::hmono(o, rho));
      }
    }
  }
}

TEST(MeasuresProperty, UbcMatchesOracle) {
  const std::vector<Rational> grid = {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2)};
  for (std::uint64_t code = 1; code + 1 < 64; ++code) {
    const SignMatrix a = SignMatrix::from_code(2, 3, code);
    for (const auto& eps : grid) {
      ASSERT_EQ(ubc(a, Threshold(eps)).max_size, oracle::ubc(oracle::from(a), eps)) << code;
    }
  }
  for (std::uint64_t code = 1; code + 1 < 512; code += 9) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    for (const auto& eps : grid) {
      ASSERT_EQ(ubc(a, Threshold(eps)).max_size, oracle::ubc(oracle::from(a), eps)) << code;
    }
  }
}

TEST(MeasuresProperty, SizeEpsMatchesOracleOnRandomDistributions) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> w(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const SignMatrix a = SignMatrix::from_code(3, 3, rng() & 511);
    std::vector<Rational> raw;
    std::int64_t total = 0;
    for (int k = 0; k < 9; ++k) {
      raw.emplace_back(w(rng));
      total += raw.back().num_i64();
    }
    if (total == 0) continue;
    for (auto& x : raw) x = x / Rational(total);
    const EntryDistribution mu(3, 3, raw);
    for (const Rational& eps : {Rational(0), Rational(1, 5), Rational(1, 2)}) {
      for (const Sign v : {Sign::kMinus, Sign::kPlus}) {
        const auto r = size_eps(a, mu, Threshold(eps), v);
        ASSERT_EQ(r.size, oracle::size_eps(oracle::from(a), raw, eps, to_int(v)));
        if (!r.degenerate) {
          ASSERT_LE(value_mass(mu, a, -v, r.witness), eps * mu.mass(r.witness));
          ASSERT_EQ(mu.mass(r.witness), r.size);
        }
      }
    }
  }
}

TEST(MeasuresProperty, BalancedSizeAgreesWithGeneralForm) {
  for (std::uint64_t code = 1; code + 1 < 512; code += 3) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    for (const Rectangle& s : RectangleRange(3, 3)) {
      if (a.is_monochromatic(s)) continue;
      const auto mu = uniformly_balanced(a, s);
      for (const Sign v : {Sign::kMinus, Sign::kPlus}) {
        ASSERT_EQ(size_eps(mu, Threshold(1, 4), v).size,
                  size_eps(a, mu.to_entry_distribution(), Threshold(1, 4), v).size);
      }
    }
  }
}

TEST(MeasuresProperty, SerialAndParallelKernelsAgree) {
  std::mt19937_64 rng(3);
  std::vector<SignMatrix> corpus;
  for (std::uint64_t code = 0; code < 512; ++code) corpus.push_back(SignMatrix::from_code(3, 3, code));
  for (int k = 0; k < 40; ++k) corpus.push_back(SignMatrix::from_code(5, 5, rng() & 0x1FFFFFF));
  for (const auto& a : corpus) {
    const RectTable t(a);
    for (const auto& [p, q] : {std::pair{0, 1}, std::pair{1, 4}, std::pair{1, 2}}) {
      const auto hs = kernels::hmono_serial(t, p, q);
      const auto hp = kernels::hmono_parallel(t, p, q);
      ASSERT_EQ(hs.size.to_rational(), hp.size.to_rational());
      ASSERT_EQ(hs.submatrix, hp.submatrix);
      ASSERT_EQ(hs.rectangle, hp.rectangle);
      if (!a.has_both_signs()) continue;
      const auto us = kernels::ubc_serial(t, p, q);
      const auto up = kernels::ubc_parallel(t, p, q);
      ASSERT_EQ(us.size.to_rational(), up.size.to_rational());
      ASSERT_EQ(us.support, up.support);
      ASSERT_EQ(us.rectangle, up.rectangle);
      ASSERT_EQ(us.v, up.v);
    }
  }
}

// Re-derive each hmono witness from counts: the inner rectangle lies in the
// submatrix, meets the threshold, and has the reported relative size.
TEST(MeasuresProperty, HmonoWitnessIsSelfConsistent) {
  for (std::uint64_t code = 0; code < 512; ++code) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    for (const Rational& rho : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
      const auto r = hmono(a, Threshold(rho));
      const Rectangle& b = r.witness_submatrix;
      const Rectangle& w = r.witness_rectangle;
      ASSERT_TRUE(b.contains(w));
      const SignMatrix sub = submatrix(a, b);
      const Sign v = minority_value(sub);
      EXPECT_EQ(r.orientation, v);
      EXPECT_EQ(Rational(w.size(), b.size()), r.max_size);
      EXPECT_LE(Rational(a.count(v, w), w.size()), rho * Rational(sub.count(v), sub.size()));
    }
  }
}

TEST(MeasuresProperty, MonotoneInThresholdExhaustive3x3) {
  const std::vector<Rational> grid = {Rational(0), Rational(1, 8), Rational(1, 4),
                                      Rational(1, 2), Rational(3, 4), Rational(1)};
  for (std::uint64_t code = 0; code < 512; ++code) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    for (std::size_t k = 1; k < grid.size(); ++k) {
      EXPECT_GE(mono(a, Threshold(grid[k])).max_size, mono(a, Threshold(grid[k - 1])).max_size);
      EXPECT_GE(hmono(a, Threshold(grid[k])).max_size, hmono(a, Threshold(grid[k - 1])).max_size);
      if (a.has_both_signs()) {
        EXPECT_GE(ubc(a, Threshold(grid[k])).max_size, ubc(a, Threshold(grid[k - 1])).max_size);
      }
    }
  }
}

TEST(MeasuresProperty, InvariantUnderPermutationAndTranspose) {
  std::mt19937_64 rng(8);
  for (std::uint64_t code = 0; code < 512; ++code) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    std::vector<int> rp = {0, 1, 2};
    std::vector<int> cp = {0, 1, 2};
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<int> e;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) e.push_back(a.value(rp[i], cp[j]));
    }
    const SignMatrix b(3, 3, e);
    for (const Rational& rho : {Rational(0), Rational(1, 2)}) {
      const Threshold t(rho);
      EXPECT_EQ(hmono(b, t).max_size, hmono(a, t).max_size);
      EXPECT_EQ(hmono(a.transposed(), t).max_size, hmono(a, t).max_size);
      EXPECT_EQ(mono(b, t).max_size, mono(a, t).max_size);
      if (a.has_both_signs()) {
        EXPECT_EQ(ubc(b, t).max_size, ubc(a, t).max_size);
        EXPECT_EQ(ubc(a.negated(), t).max_size, ubc(a, t).max_size);
      }
    }
  }
}

// Negation swaps the minority value except at exact ties, where the tie rule
// pins v = -1 for both A and -A. Away from ties the measures are symmetric;
// at ties they can differ, which is why exhaustive corpora are not
// deduplicated under negation by default.
TEST(MeasuresProperty, NegationSymmetryAwayFromTies) {
  int tie_differences = 0;
  for (std::uint64_t code = 0; code < 1U << 12; ++code) {
    const SignMatrix a = SignMatrix::from_code(3, 4, code);
    const Threshold t(1, 2);
    const bool tie = a.count(Sign::kMinus) == a.count(Sign::kPlus);
    const Rational x = mono(a, t).max_size;
    const Rational y = mono(a.negated(), t).max_size;
    if (!tie) {
      ASSERT_EQ(x, y) << serialize_matrix(a);
    } else if (x != y) {
      ++tie_differences;
    }
  }
  EXPECT_GT(tie_differences, 0);
}

TEST(CorrHeuristic, IsDeterministicAndCertified) {
  const SignMatrix a = SignMatrix::from_rows({"+++-", "++-+", "+-++", "-+++"});
  const Threshold eps(1, 4);
  const Rational c(1, 4);
  const auto r1 = corr_lower_heuristic(a, eps, c, 15, 42);
  const auto r2 = corr_lower_heuristic(a, eps, c, 15, 42);
  EXPECT_EQ(r1.best_size, r2.best_size);
  EXPECT_EQ(r1.best_mu.masses(), r2.best_mu.masses());
  EXPECT_LE(r1.best_size, r1.start_size);
  EXPECT_GE(value_mass(r1.best_mu, a, Sign::kMinus), c);
  EXPECT_GE(value_mass(r1.best_mu, a, Sign::kPlus), c);
  const auto o = oracle::from(a);
  const Rational recheck = std::min(oracle::size_eps(o, r1.best_mu.masses(), eps.value(), -1),
                                    oracle::size_eps(o, r1.best_mu.masses(), eps.value(), +1));
  EXPECT_EQ(recheck, r1.best_size);
  EXPECT_THROW(corr_lower_heuristic(SignMatrix::constant(2, 2, Sign::kPlus), eps, c, 5, 1),
               UnbalanceableSupport);
  EXPECT_THROW(corr_lower_heuristic(a, eps, Rational(3, 4), 5, 1), InvalidThreshold);
}

TEST(CorrHeuristic, DrainsWeightFromPlantedBlock) {
  // A 3x3 all-plus block inside an otherwise mixed 6x6 matrix.
  const SignMatrix a = SignMatrix::from_rows(
      {"+++-+-", "+++--+", "+++-++", "-+-+--", "+--+-+", "-++--+"});
  const auto r = corr_lower_heuristic(a, Threshold(0, 1), Rational(1, 4), 30, 7);
  EXPECT_LE(r.best_size, r.start_size);
  EXPECT_GT(r.best_size, Rational(0));
}

}  // namespace
}  // namespace corrlab
