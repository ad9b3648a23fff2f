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

#include "corrlab/discrepancy.hpp"

#include <bit>

#include "corrlab/errors.hpp"
#include "corrlab/instrumentation.hpp"
#include "corrlab/lp.hpp"

namespace corrlab {
namespace {

using i128 = __int128;

std::vector<SignedRectangle> pure_strategies(int m, int n) {
  std::vector<SignedRectangle> cols;
  for (const Rectangle& r : RectangleRange(m, n)) {
    cols.push_back({r, Sign::kPlus});
    cols.push_back({r, Sign::kMinus});
  }
  return cols;
}

}  // namespace

std::pair<Rectangle, SignedMass> discrepancy_witness(const SignMatrix& a,
                                                     const EntryDistribution& mu) {
  if (mu.rows() != a.rows() || mu.cols() != a.cols()) {
    throw InvalidDistribution("distribution dimensions do not match the matrix");
  }
  const int m = a.rows();
  const int n = a.cols();
  const Mask col_end = full_mask(n) + 1;
  std::vector<Rational> row_signed(static_cast<std::size_t>(m) << n);
  for (int i = 0; i < m; ++i) {
    for (Mask t = 1; t < col_end; ++t) {
      const int j = std::countr_zero(t);
      const std::size_t idx = (static_cast<std::size_t>(i) << n) | t;
      const std::size_t prev = (static_cast<std::size_t>(i) << n) | (t & (t - 1));
      row_signed[idx] = row_signed[prev];
      if (a.at(i, j) == Sign::kPlus) {
        row_signed[idx] += mu.at(i, j);
      } else {
        row_signed[idx] -= mu.at(i, j);
      }
    }
  }
  const Mask row_end = full_mask(m) + 1;
  std::vector<Rational> signed_mass(static_cast<std::size_t>(row_end) << n);
  Rectangle best_rect{1, 1};
  Rational best_value;
  Rational best_abs(-1);
  for (Mask s = 1; s < row_end; ++s) {
    const int low = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    for (Mask t = 1; t < col_end; ++t) {
      const std::size_t idx = (static_cast<std::size_t>(s) << n) | t;
      signed_mass[idx] = signed_mass[(static_cast<std::size_t>(rest) << n) | t] +
                         row_signed[(static_cast<std::size_t>(low) << n) | t];
      const Rational mag = abs(signed_mass[idx]);
      if (mag > best_abs) {
        best_abs = mag;
        best_value = signed_mass[idx];
        best_rect = {s, t};
      }
    }
  }
  return {best_rect, SignedMass{best_value}};
}

std::pair<Rectangle, SignedMass> discrepancy_witness(const UniformlyBalancedDistribution& mu) {
  const RectTable table(mu.matrix());
  const Mask s = mu.support().rows;
  const Mask t = mu.support().cols;
  const std::int64_t neg = mu.neg_count();
  const std::int64_t pos = mu.pos_count();
  std::int64_t best_abs = -1;
  std::int64_t best = 0;
  Rectangle best_rect{};
  for_each_submask_ascending(s, [&](Mask rs) {
    const int h = popcount(rs);
    for_each_submask_ascending(t, [&](Mask cs) {
      const std::int64_t a = table.neg(rs, cs);
      const std::int64_t b = std::int64_t{h} * popcount(cs) - a;
      const std::int64_t v = b * neg - a * pos;
      const std::int64_t mag = v < 0 ? -v : v;
      if (mag > best_abs) {
        best_abs = mag;
        best = v;
        best_rect = {rs, cs};
      }
    });
  });
  return {best_rect, SignedMass{Rational(best, mu.common_denominator())}};
}

DiscrepancyResult disc(const SignMatrix& a, const SizeCap& cap) {
  cap.check(a.rows(), a.cols(), "disc");
  note_engine_invocation();
  const int m = a.rows();
  const int n = a.cols();
  const auto strategies = pure_strategies(m, n);
  const int k = static_cast<int>(strategies.size());

  // Rectangle player's LP after shifting payoffs by +1 (so the game value
  // v + 1 is positive): minimise sum y subject to, for every entry e,
  // sum_c (1 + s_c A_e [e in R_c]) y_c >= 1. Then sum y = 1/(v + 1); the
  // entry player's optimal sigma is (v + 1) times the row duals.
  LinearProgram lp;
  lp.num_vars = k;
  lp.objective.assign(static_cast<std::size_t>(k), Rational(1));
  lp.maximize = false;
  const Rational zero(0), one(1), two(2);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      LpConstraint con;
      con.relation = Relation::kGreaterEqual;
      con.rhs = one;
      con.coeffs.reserve(static_cast<std::size_t>(k));
      for (const auto& c : strategies) {
        if (!c.rect.contains(i, j)) {
          con.coeffs.push_back(one);
        } else {
          con.coeffs.push_back(to_int(c.sign) * a.value(i, j) > 0 ? two : zero);
        }
      }
      lp.constraints.push_back(std::move(con));
    }
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw InternalInvariant("discrepancy LP did not reach an optimum");
  }
  const Rational shifted_value = Rational(1) / sol.objective;

  std::vector<Rational> sigma;
  sigma.reserve(static_cast<std::size_t>(m * n));
  for (const auto& y : sol.duals) sigma.push_back(y * shifted_value);

  DiscrepancyResult result{shifted_value - Rational(1), Rational(0),
                           EntryDistribution(m, n, std::move(sigma)), Rectangle{}, {}, {}, sol.pivots};
  result.d = Rational(1) / result.disc;
  result.tight_rectangle = discrepancy_witness(a, result.optimal_sigma).first;
  for (int c = 0; c < k; ++c) {
    const Rational& x = sol.x[static_cast<std::size_t>(c)];
    if (x.is_zero()) continue;
    result.certificate_support.push_back(strategies[static_cast<std::size_t>(c)]);
    result.certificate_weights.push_back(x * shifted_value);
  }
  if (!verify_discrepancy(a, result).ok()) {
    throw InternalInvariant("discrepancy LP optimum failed exact re-verification");
  }
  return result;
}

DiscrepancyCheck verify_discrepancy(const SignMatrix& a, const DiscrepancyResult& r) {
  DiscrepancyCheck check;
  const auto& sigma = r.optimal_sigma;
  if (sigma.rows() != a.rows() || sigma.cols() != a.cols()) return check;

  const auto [rect, mass] = discrepancy_witness(a, sigma);
  check.sigma_valid = abs(mass.value) == r.disc;
  Rational tight;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (r.tight_rectangle.contains(i, j)) tight += sigma.at(i, j) * Rational(a.value(i, j));
    }
  }
  check.tight_attained = abs(tight) == r.disc;

  if (r.certificate_support.size() != r.certificate_weights.size()) return check;
  Rational total;
  for (const auto& w : r.certificate_weights) {
    if (w.sign() < 0) return check;
    total += w;
  }
  if (total != Rational(1)) return check;
  bool all_entries = true;
  for (int i = 0; i < a.rows() && all_entries; ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      Rational score;
      for (std::size_t c = 0; c < r.certificate_support.size(); ++c) {
        const auto& sr = r.certificate_support[c];
        if (!sr.rect.contains(i, j)) continue;
        const Rational& w = r.certificate_weights[c];
        if (to_int(sr.sign) * a.value(i, j) > 0) {
          score += w;
        } else {
          score -= w;
        }
      }
      if (score < r.disc) {
        all_entries = false;
        break;
      }
    }
  }
  check.certificate_valid = all_entries;
  return check;
}

namespace kernels {

LowCorruptionScaled low_corruption(const RectTable& table, Mask s, Mask t, std::int64_t d_num,
                                   std::int64_t d_den, ComplementSplit split) {
  const std::int64_t neg = table.neg(s, t);
  const std::int64_t pos = std::int64_t{popcount(s)} * popcount(t) - neg;
  if (neg == 0 || pos == 0) {
    throw UnbalanceableSupport("support " + Rectangle{s, t}.to_string() + " is monochromatic");
  }
  auto scaled = [&](const Rectangle& r, std::int64_t& minus, std::int64_t& plus) {
    const Mask rs = r.rows & s;
    const Mask cs = r.cols & t;
    if (rs == 0 || cs == 0) {
      minus = plus = 0;
      return;
    }
    const std::int64_t a = table.neg(rs, cs);
    minus = a * pos;
    plus = (std::int64_t{popcount(rs)} * popcount(cs) - a) * neg;
  };

  LowCorruptionScaled out;
  out.denominator = 2 * neg * pos;

  // Discrepancy witness inside the support.
  std::int64_t best_abs = -1;
  for_each_submask_ascending(s, [&](Mask rs) {
    const int h = popcount(rs);
    for_each_submask_ascending(t, [&](Mask cs) {
      const std::int64_t a = table.neg(rs, cs);
      const std::int64_t v = (std::int64_t{h} * popcount(cs) - a) * neg - a * pos;
      const std::int64_t mag = v < 0 ? -v : v;
      if (mag > best_abs) {
        best_abs = mag;
        out.witness_signed = v;
        out.rect = {rs, cs};
      }
    });
  });

  if (out.witness_signed < 0) {
    // The whole matrix has signed mass 0, so the complement carries
    // -witness_signed > 0; some part carries at least its share.
    out.used_complement = true;
    const int m = table.rows();
    const int n = table.cols();
    const auto parts = split == ComplementSplit::kThree ? complement_partition(out.rect, m, n)
                                                        : complement_partition_two(out.rect, m, n);
    std::int64_t best_part = 0;
    bool have = false;
    for (const Rectangle& part : parts) {
      std::int64_t minus = 0;
      std::int64_t plus = 0;
      scaled(part, minus, plus);
      if (!have || plus - minus > best_part) {
        best_part = plus - minus;
        out.rect = part;
        have = true;
      }
    }
  }

  std::int64_t minus = 0;
  std::int64_t plus = 0;
  scaled(out.rect, minus, plus);
  out.mass = minus + plus;
  out.minus_mass = minus;
  out.signed_mass = plus - minus;
  // mu(R) >= 1/(3d) with d = d_num/d_den.
  out.mass_ok = static_cast<i128>(3) * d_num * out.mass >= static_cast<i128>(d_den) * out.denominator;
  // mu(-1,R) <= (1/2 - 1/(6d)) mu(R).
  out.corruption_ok = static_cast<i128>(6) * d_num * minus <=
                      (static_cast<i128>(3) * d_num - d_den) * out.mass;
  return out;
}

}  // namespace kernels

LowCorruptionResult low_corruption_rectangle(const UniformlyBalancedDistribution& mu,
                                             const Rational& d, ComplementSplit split) {
  if (d.sign() <= 0) throw InvalidThreshold("d must be positive");
  const RectTable table(mu.matrix());
  const auto k = kernels::low_corruption(table, mu.support().rows, mu.support().cols, d.num_i64(),
                                         d.den_i64(), split);
  if (!k.mass_ok || !k.corruption_ok) {
    throw InternalInvariant("low-corruption rectangle " + k.rect.to_string() +
                            " fails its postcondition for d = " + d.to_string());
  }
  LowCorruptionResult r;
  r.rect = k.rect;
  r.witness_mass = SignedMass{Rational(k.witness_signed, k.denominator)};
  r.mass_signed = SignedMass{Rational(k.signed_mass, k.denominator)};
  r.mass = Rational(k.mass, k.denominator);
  r.minus_mass = Rational(k.minus_mass, k.denominator);
  r.used_complement = k.used_complement;
  return r;
}

}  // namespace corrlab
