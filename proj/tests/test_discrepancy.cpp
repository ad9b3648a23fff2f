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

#include "corrlab/discrepancy.hpp"
#include "corrlab/errors.hpp"
#include "corrlab/lp.hpp"
#include "corrlab/symmetry.hpp"
#include "oracle.hpp"

namespace corrlab {
namespace {

LpConstraint row(std::vector<Rational> c, Relation rel, Rational rhs) {
  return LpConstraint{std::move(c), rel, std::move(rhs)};
}

TEST(Lp, SolvesSmallMaximisation) {
  // max 3x + 2y  s.t.  x + y <= 4, x + 3y <= 6, x <= 3
  LinearProgram lp;
  lp.num_vars = 2;
  lp.maximize = true;
  lp.objective = {Rational(3), Rational(2)};
  lp.constraints = {row({Rational(1), Rational(1)}, Relation::kLessEqual, Rational(4)),
                    row({Rational(1), Rational(3)}, Relation::kLessEqual, Rational(6)),
                    row({Rational(1), Rational(0)}, Relation::kLessEqual, Rational(3))};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(11));
  EXPECT_EQ(s.x[0], Rational(3));
  EXPECT_EQ(s.x[1], Rational(1));
  // Strong duality in exact arithmetic.
  Rational dual_obj(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) dual_obj += s.duals[i] * lp.constraints[i].rhs;
  EXPECT_EQ(dual_obj, s.objective);
}

TEST(Lp, HandlesEqualityGreaterEqualAndFractions) {
  // min x + y  s.t.  2x + y >= 3, x + 3y >= 4, x - y = 0
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.constraints = {row({Rational(2), Rational(1)}, Relation::kGreaterEqual, Rational(3)),
                    row({Rational(1), Rational(3)}, Relation::kGreaterEqual, Rational(4)),
                    row({Rational(1), Rational(-1)}, Relation::kEqual, Rational(0))};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.x[0], Rational(1));
  EXPECT_EQ(s.objective, Rational(2));
}

TEST(Lp, DetectsInfeasibleAndUnbounded) {
  LinearProgram bad;
  bad.num_vars = 1;
  bad.objective = {Rational(1)};
  bad.constraints = {row({Rational(1)}, Relation::kLessEqual, Rational(1)),
                     row({Rational(1)}, Relation::kGreaterEqual, Rational(2))};
  EXPECT_EQ(solve_lp(bad).status, LpStatus::kInfeasible);

  LinearProgram open;
  open.num_vars = 2;
  open.maximize = true;
  open.objective = {Rational(1), Rational(0)};
  open.constraints = {row({Rational(1), Rational(-1)}, Relation::kLessEqual, Rational(1))};
  EXPECT_EQ(solve_lp(open).status, LpStatus::kUnbounded);
}

TEST(Lp, NegativeRightHandSide) {
  // min x  s.t.  -x <= -5/2
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {Rational(1)};
  lp.constraints = {row({Rational(-1)}, Relation::kLessEqual, Rational(-5, 2))};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(5, 2));
  EXPECT_EQ(s.duals[0] * Rational(-5, 2), s.objective);
}

TEST(Lp, DegenerateProblemTerminates) {
  // A classic cycling-prone instance; Bland's rule must terminate.
  LinearProgram lp;
  lp.num_vars = 4;
  lp.maximize = true;
  lp.objective = {Rational(3, 4), Rational(-20), Rational(1, 2), Rational(-6)};
  lp.constraints = {
      row({Rational(1, 4), Rational(-8), Rational(-1), Rational(9)}, Relation::kLessEqual, Rational(0)),
      row({Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3)}, Relation::kLessEqual, Rational(0)),
      row({Rational(0), Rational(0), Rational(1), Rational(0)}, Relation::kLessEqual, Rational(1))};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(5, 4));
}

// Independent check of a discrepancy result: sigma attains disc and the dual
// mixture forces every sigma to reach disc.
void expect_certified(const SignMatrix& a, const DiscrepancyResult& r) {
  const auto o = oracle::from(a);
  ASSERT_EQ(oracle::max_signed(o, r.optimal_sigma.masses()), r.disc);
  Rational total(0);
  for (const auto& w : r.certificate_weights) {
    ASSERT_GE(w, Rational(0));
    total += w;
  }
  ASSERT_EQ(total, Rational(1));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      Rational score(0);
      for (std::size_t c = 0; c < r.certificate_support.size(); ++c) {
        const auto& sr = r.certificate_support[c];
        if (sr.rect.contains(i, j)) score += r.certificate_weights[c] * Rational(to_int(sr.sign) * a.value(i, j));
      }
      ASSERT_GE(score, r.disc) << "entry " << i << "," << j;
    }
  }
  EXPECT_EQ(r.d * r.disc, Rational(1));
}

TEST(Disc, Examples) {
  const auto ones = disc(SignMatrix::constant(3, 3, Sign::kPlus));
  EXPECT_EQ(ones.disc, Rational(1));
  expect_certified(SignMatrix::constant(3, 3, Sign::kPlus), ones);

  const SignMatrix pair = SignMatrix::from_rows({"+-"});
  const auto p = disc(pair);
  EXPECT_EQ(p.disc, Rational(1, 2));
  EXPECT_EQ(p.optimal_sigma.masses(), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  expect_certified(pair, p);

  const SignMatrix corner = SignMatrix::from_rows({"++", "+-"});
  const auto c = disc(corner);
  EXPECT_EQ(c.disc, Rational(1, 3));
  EXPECT_EQ(c.d, Rational(3));
  expect_certified(corner, c);
  EXPECT_TRUE(verify_discrepancy(corner, c).ok());
}

TEST(Disc, SizeCap) {
  EXPECT_THROW(disc(SignMatrix::constant(7, 2, Sign::kPlus)), SizeCapExceeded);
}

TEST(Disc, VerifierRejectsTamperedResults) {
  const SignMatrix a = SignMatrix::from_rows({"++", "+-"});
  auto r = disc(a);
  auto smaller = r;
  smaller.disc = Rational(1, 4);
  EXPECT_FALSE(verify_discrepancy(a, smaller).ok());
  for (const Rectangle& rect : RectangleRange(2, 2)) {
    const Rational signed_mass = value_mass(r.optimal_sigma, a, Sign::kPlus, rect) -
                                 value_mass(r.optimal_sigma, a, Sign::kMinus, rect);
    if (abs(signed_mass) == r.disc) continue;
    auto wrong_rect = r;
    wrong_rect.tight_rectangle = rect;
    const auto check = verify_discrepancy(a, wrong_rect);
    EXPECT_TRUE(check.sigma_valid);
    EXPECT_FALSE(check.tight_attained);
  }
}

TEST(DiscProperty, CertifiedAndSymmetricExhaustive3x3) {
  const OrbitIndex orbits(3, 3, SymmetryGroup{true, true});
  std::vector<Rational> by_orbit(orbits.representatives().size());
  for (std::size_t k = 0; k < by_orbit.size(); ++k) {
    const SignMatrix a = SignMatrix::from_code(3, 3, orbits.representatives()[k]);
    const auto r = disc(a);
    expect_certified(a, r);
    by_orbit[k] = r.disc;
    EXPECT_GT(r.disc, Rational(0));
    EXPECT_LE(r.disc, Rational(1));
  }
  // Spot-check symmetry by solving non-representatives directly.
  for (std::uint64_t code = 0; code < 512; code += 13) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    const Rational expected = by_orbit[orbits.orbit_of(code)];
    EXPECT_EQ(disc(a).disc, expected);
    EXPECT_EQ(disc(a.negated()).disc, expected);
    EXPECT_EQ(disc(a.transposed()).disc, expected);
  }
}

TEST(Symmetry, OrbitsPartitionTheCodes) {
  const OrbitIndex plain(2, 2, SymmetryGroup{false, false});
  const OrbitIndex neg(2, 2, SymmetryGroup{true, false});
  // 2x2 sign matrices up to row and column swaps: counts by number of -1s
  // give 1, 1, 3 (same row, same column, diagonal), 1, 1 orbits; negation
  // then merges 0 with 4 and 1 with 3.
  EXPECT_EQ(plain.representatives().size(), 7U);
  EXPECT_EQ(neg.representatives().size(), 5U);
  for (std::uint64_t code = 0; code < 16; ++code) {
    const auto rep = neg.representatives()[neg.orbit_of(code)];
    EXPECT_LE(rep, code);
    EXPECT_EQ(canonical_code(SignMatrix::from_code(2, 2, code), SymmetryGroup{true, false}), rep);
  }
}

TEST(Witness, Examples) {
  const SignMatrix ones = SignMatrix::constant(2, 2, Sign::kPlus);
  const auto [rect, sm] = discrepancy_witness(ones, EntryDistribution::uniform(2, 2));
  EXPECT_EQ(rect, Rectangle::full(2, 2));
  EXPECT_EQ(sm.value, Rational(1));

  const SignMatrix corner = SignMatrix::from_rows({"++", "+-"});
  const auto mu = uniformly_balanced(corner, Rectangle::full(2, 2));
  EXPECT_EQ(mu.scaled_signed_mass(Rectangle::full(2, 2)), 0);
  const auto r = disc(corner);
  EXPECT_EQ(abs(discrepancy_witness(corner, r.optimal_sigma).second.value), r.disc);
}

TEST(Witness, BalancedMatchesGeneralWitnessValue) {
  for (std::uint64_t code = 1; code + 1 < 512; code += 11) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    for (const Rectangle& s : RectangleRange(3, 3)) {
      if (a.is_monochromatic(s)) continue;
      const auto mu = uniformly_balanced(a, s);
      const auto ubd = discrepancy_witness(mu);
      const auto gen = discrepancy_witness(a, mu.to_entry_distribution());
      EXPECT_EQ(abs(ubd.second.value), abs(gen.second.value));
      EXPECT_TRUE(s.contains(ubd.first));
    }
  }
}

TEST(LowCorruption, PairExample) {
  const SignMatrix a = SignMatrix::from_rows({"+-"});
  const auto mu = uniformly_balanced(a, Rectangle::full(1, 2));
  const auto r = low_corruption_rectangle(mu, Rational(2));
  EXPECT_EQ(r.rect, (Rectangle{1, 1}));
  EXPECT_EQ(r.witness_mass.value, Rational(1, 2));
  EXPECT_EQ(r.minus_mass, Rational(0));
  EXPECT_FALSE(r.used_complement);

  // On -A the same procedure finds the other entry, with few +1s.
  const auto neg = uniformly_balanced(a.negated(), Rectangle::full(1, 2));
  const auto rn = low_corruption_rectangle(neg, Rational(2));
  EXPECT_EQ(rn.rect, (Rectangle{1, 2}));
}

TEST(LowCorruption, PostconditionsExhaustive3x3) {
  for (std::uint64_t code = 1; code + 1 < 512; ++code) {
    const SignMatrix a = SignMatrix::from_code(3, 3, code);
    const Rational d = Rational(1) / disc(a, SizeCap{6, false}).disc;
    for (const SignMatrix& m : {a, a.negated()}) {
      for (const Rectangle& s : RectangleRange(3, 3)) {
        if (m.is_monochromatic(s)) continue;
        const auto mu = uniformly_balanced(m, s);
        for (const auto split : {ComplementSplit::kThree, ComplementSplit::kTwo}) {
          const auto r = low_corruption_rectangle(mu, d, split);
          const Rational bound = split == ComplementSplit::kThree ? Rational(1) / (Rational(3) * d)
                                                                  : Rational(1) / (Rational(2) * d);
          ASSERT_EQ(r.mass, mu.mass(r.rect));
          ASSERT_GE(r.mass, Rational(1) / (Rational(3) * d));
          ASSERT_GE(r.mass_signed.value, bound);
          ASSERT_LE(r.minus_mass, (Rational(1, 2) - Rational(1) / (Rational(6) * d)) * r.mass);
        }
      }
    }
  }
}

TEST(LowCorruption, RejectsNonPositiveD) {
  const SignMatrix a = SignMatrix::from_rows({"+-"});
  const auto mu = uniformly_balanced(a, Rectangle::full(1, 2));
  EXPECT_THROW(low_corruption_rectangle(mu, Rational(0)), InvalidThreshold);
}

}  // namespace
}  // namespace corrlab
