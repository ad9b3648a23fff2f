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

#include "corrlab/measures.hpp"

#include <omp.h>

#include <atomic>
#include <vector>

#include "corrlab/errors.hpp"
#include "corrlab/instrumentation.hpp"

namespace corrlab {

namespace {
std::atomic<std::uint64_t> g_engine_calls{0};
}  // namespace

std::uint64_t engine_invocations() { return g_engine_calls.load(); }
void note_engine_invocation() { g_engine_calls.fetch_add(1, std::memory_order_relaxed); }

Threshold::Threshold(Rational value) : value_(std::move(value)) {
  if (value_ < Rational(0) || value_ > Rational(1)) {
    throw InvalidThreshold("threshold " + value_.to_string() + " is outside [0, 1]");
  }
}

Threshold Threshold::parse(std::string_view text) { return Threshold(Rational::parse(text)); }

namespace kernels {
namespace {

using i128 = __int128;

bool same_size(const SizeFraction& a, const SizeFraction& b) { return !(a < b) && !(b < a); }

bool better_mono(const MonoHit& a, const MonoHit& b) {
  if (a.size < b.size) return true;
  return same_size(a.size, b.size) && a.submatrix < b.submatrix;
}

bool better_ubc(const UbcHit& a, const UbcHit& b) {
  if (a.size < b.size) return true;
  if (!same_size(a.size, b.size)) return false;
  if (a.support != b.support) return a.support < b.support;
  // kMinus is tried before kPlus at a given support.
  return a.v == Sign::kMinus && b.v == Sign::kPlus;
}

struct SupportBest {
  std::int64_t scaled[2] = {0, 0};  // [0] orientation -1, [1] orientation +1
  Rectangle rect[2];
};

// Best feasible scaled mass X = a P + b N for both orientations inside the
// support, where a/b are the -1/+1 counts of R and N/P those of the support.
// Orientation +1 is corrupted by -1 entries (mass a/(2N)); orientation -1 by
// +1 entries (mass b/(2P)).
SupportBest support_scan(const RectTable& table, Mask s, Mask t, std::int64_t p, std::int64_t q,
                         bool want_minus, bool want_plus) {
  const std::int64_t neg = table.neg(s, t);
  const std::int64_t pos = std::int64_t{popcount(s)} * popcount(t) - neg;
  SupportBest best;
  for_each_submask_ascending(s, [&](Mask rs) {
    const int h = popcount(rs);
    for_each_submask_ascending(t, [&](Mask cs) {
      const std::int64_t area = std::int64_t{h} * popcount(cs);
      const std::int64_t a = table.neg(rs, cs);
      const std::int64_t b = area - a;
      const std::int64_t x = a * pos + b * neg;
      if (want_minus && x > best.scaled[0] &&
          static_cast<i128>(b * neg) * q <= static_cast<i128>(p) * x) {
        best.scaled[0] = x;
        best.rect[0] = {rs, cs};
      }
      if (want_plus && x > best.scaled[1] &&
          static_cast<i128>(a * pos) * q <= static_cast<i128>(p) * x) {
        best.scaled[1] = x;
        best.rect[1] = {rs, cs};
      }
    });
  });
  return best;
}

void scan_support(const RectTable& table, Mask s, Mask t, std::int64_t p, std::int64_t q,
                  UbcHit& best, bool& have) {
  const int neg = table.neg(s, t);
  const int area = popcount(s) * popcount(t);
  if (neg == 0 || neg == area) return;
  const std::int64_t den = 2LL * neg * (area - neg);
  const SupportBest sb = support_scan(table, s, t, p, q, true, true);
  for (int k = 0; k < 2; ++k) {
    UbcHit hit{{sb.scaled[k], den}, {s, t}, sb.rect[k], k == 0 ? Sign::kMinus : Sign::kPlus};
    if (!have || better_ubc(hit, best)) {
      best = hit;
      have = true;
    }
  }
}

}  // namespace

MonoHit mono_in(const RectTable& table, Mask s, Mask t, std::int64_t p, std::int64_t q) {
  const int width = popcount(t);
  const std::int64_t size_b = std::int64_t{popcount(s)} * width;
  const int neg_b = table.neg(s, t);
  const Sign v = neg_b <= size_b - neg_b ? Sign::kMinus : Sign::kPlus;
  const std::int64_t cv = v == Sign::kMinus ? neg_b : size_b - neg_b;
  MonoHit hit{{size_b, size_b}, {s, t}, {s, t}, v};
  if (cv == 0 || p >= q) return hit;

  // cnt_v(R) / |R| <= rho * cv / |B|, cross-multiplied.
  const i128 lhs_scale = static_cast<i128>(size_b) * q;
  const i128 rhs_scale = static_cast<i128>(p) * cv;
  std::int64_t best = 0;
  Rectangle best_rect{};
  for_each_submask_ascending(s, [&](Mask rs) {
    const int h = popcount(rs);
    if (std::int64_t{h} * width <= best) return;
    for_each_submask_ascending(t, [&](Mask cs) {
      const std::int64_t area = std::int64_t{h} * popcount(cs);
      if (area <= best) return;
      const std::int64_t cnt = table.count(v, rs, cs);
      if (cnt * lhs_scale <= rhs_scale * area) {
        best = area;
        best_rect = {rs, cs};
      }
    });
  });
  hit.size = {best, size_b};
  hit.rectangle = best_rect;
  return hit;
}

MonoHit hmono_serial(const RectTable& table, std::int64_t p, std::int64_t q) {
  const Mask row_end = full_mask(table.rows()) + 1;
  const Mask col_end = full_mask(table.cols()) + 1;
  MonoHit best = mono_in(table, 1, 1, p, q);
  for (Mask s = 1; s < row_end; ++s) {
    for (Mask t = 1; t < col_end; ++t) {
      MonoHit hit = mono_in(table, s, t, p, q);
      if (better_mono(hit, best)) best = hit;
    }
  }
  return best;
}

MonoHit hmono_parallel(const RectTable& table, std::int64_t p, std::int64_t q) {
  const std::int64_t row_end = std::int64_t{full_mask(table.rows())} + 1;
  const Mask col_end = full_mask(table.cols()) + 1;
  MonoHit best = mono_in(table, 1, 1, p, q);
#pragma omp parallel
  {
    MonoHit local = best;
#pragma omp for schedule(dynamic)
    for (std::int64_t s = 1; s < row_end; ++s) {
      for (Mask t = 1; t < col_end; ++t) {
        MonoHit hit = mono_in(table, static_cast<Mask>(s), t, p, q);
        if (better_mono(hit, local)) local = hit;
      }
    }
#pragma omp critical(corrlab_hmono_reduce)
    {
      if (better_mono(local, best)) best = local;
    }
  }
  return best;
}

UbcHit ubc_serial(const RectTable& table, std::int64_t p, std::int64_t q) {
  const Mask row_end = full_mask(table.rows()) + 1;
  const Mask col_end = full_mask(table.cols()) + 1;
  UbcHit best;
  bool have = false;
  for (Mask s = 1; s < row_end; ++s) {
    for (Mask t = 1; t < col_end; ++t) scan_support(table, s, t, p, q, best, have);
  }
  if (!have) throw UnbalanceableSupport("ubc is undefined for a monochromatic matrix");
  return best;
}

UbcHit ubc_parallel(const RectTable& table, std::int64_t p, std::int64_t q) {
  const std::int64_t row_end = std::int64_t{full_mask(table.rows())} + 1;
  const Mask col_end = full_mask(table.cols()) + 1;
  UbcHit best;
  bool have = false;
#pragma omp parallel
  {
    UbcHit local;
    bool local_have = false;
#pragma omp for schedule(dynamic)
    for (std::int64_t s = 1; s < row_end; ++s) {
      for (Mask t = 1; t < col_end; ++t) {
        scan_support(table, static_cast<Mask>(s), t, p, q, local, local_have);
      }
    }
#pragma omp critical(corrlab_ubc_reduce)
    {
      if (local_have && (!have || better_ubc(local, best))) {
        best = local;
        have = true;
      }
    }
  }
  if (!have) throw UnbalanceableSupport("ubc is undefined for a monochromatic matrix");
  return best;
}

UbcHit size_in_support(const RectTable& table, Mask s, Mask t, Sign v, std::int64_t p,
                       std::int64_t q) {
  const int neg = table.neg(s, t);
  const int area = popcount(s) * popcount(t);
  if (neg == 0 || neg == area) {
    throw UnbalanceableSupport("support " + Rectangle{s, t}.to_string() + " is monochromatic");
  }
  const SupportBest sb =
      support_scan(table, s, t, p, q, v == Sign::kMinus, v == Sign::kPlus);
  const int k = v == Sign::kMinus ? 0 : 1;
  return UbcHit{{sb.scaled[k], 2LL * neg * (area - neg)}, {s, t}, sb.rect[k], v};
}

Rectangle largest_monochromatic(const RectTable& table, Sign v) {
  const Mask row_end = full_mask(table.rows()) + 1;
  const Mask col_end = full_mask(table.cols()) + 1;
  int best = 0;
  Rectangle best_rect{0, 0};
  for (Mask s = 1; s < row_end; ++s) {
    const int h = popcount(s);
    for (Mask t = 1; t < col_end; ++t) {
      const int area = h * popcount(t);
      if (area > best && table.count(-v, s, t) == 0) {
        best = area;
        best_rect = {s, t};
      }
    }
  }
  return best_rect;
}

}  // namespace kernels

namespace {

MeasureResult from_mono_hit(const MonoHit& hit) {
  MeasureResult r;
  r.max_size = hit.size.to_rational();
  r.log2_value = r.max_size.neg_log2();
  r.witness_rectangle = hit.rectangle;
  r.witness_submatrix = hit.submatrix;
  r.witness_support = hit.submatrix;
  r.orientation = hit.v;
  return r;
}

}  // namespace

MeasureResult mono(const SignMatrix& a, const Threshold& rho, const SizeCap& cap, Exec) {
  cap.check(a.rows(), a.cols(), "mono");
  note_engine_invocation();
  const RectTable table(a);
  return from_mono_hit(kernels::mono_in(table, full_mask(a.rows()), full_mask(a.cols()),
                                        rho.num(), rho.den()));
}

MeasureResult hmono(const SignMatrix& a, const Threshold& rho, const SizeCap& cap, Exec exec) {
  cap.check(a.rows(), a.cols(), "hmono");
  note_engine_invocation();
  const RectTable table(a);
  return from_mono_hit(exec == Exec::kParallel ? kernels::hmono_parallel(table, rho.num(), rho.den())
                                               : kernels::hmono_serial(table, rho.num(), rho.den()));
}

SizeResult size_eps(const SignMatrix& a, const EntryDistribution& mu, const Threshold& eps, Sign v,
                    const SizeCap& cap) {
  cap.check(a.rows(), a.cols(), "size_eps");
  if (mu.rows() != a.rows() || mu.cols() != a.cols()) {
    throw InvalidDistribution("distribution dimensions do not match the matrix");
  }
  note_engine_invocation();
  const int m = a.rows();
  const int n = a.cols();
  const Mask col_end = full_mask(n) + 1;

  // Per-row masses of the good (v) and bad (-v) entries for every column set.
  std::vector<Rational> good_row(static_cast<std::size_t>(m) << n);
  std::vector<Rational> bad_row(static_cast<std::size_t>(m) << n);
  for (int i = 0; i < m; ++i) {
    for (Mask t = 1; t < col_end; ++t) {
      const int j = std::countr_zero(t);
      const std::size_t idx = (static_cast<std::size_t>(i) << n) | t;
      const std::size_t prev = (static_cast<std::size_t>(i) << n) | (t & (t - 1));
      good_row[idx] = good_row[prev];
      bad_row[idx] = bad_row[prev];
      (a.at(i, j) == v ? good_row[idx] : bad_row[idx]) += mu.at(i, j);
    }
  }

  // Rectangle masses built up one row at a time, row-mask-major.
  const Mask row_end = full_mask(m) + 1;
  std::vector<Rational> good(static_cast<std::size_t>(row_end) << n);
  std::vector<Rational> bad(static_cast<std::size_t>(row_end) << n);
  SizeResult best{Rational(0), Rectangle{}, true};
  bool have_feasible = false;
  for (Mask s = 1; s < row_end; ++s) {
    const int low = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    for (Mask t = 1; t < col_end; ++t) {
      const std::size_t idx = (static_cast<std::size_t>(s) << n) | t;
      const std::size_t prev = (static_cast<std::size_t>(rest) << n) | t;
      const std::size_t row_idx = (static_cast<std::size_t>(low) << n) | t;
      good[idx] = good[prev] + good_row[row_idx];
      bad[idx] = bad[prev] + bad_row[row_idx];
      const Rational total = good[idx] + bad[idx];
      if (bad[idx] <= eps.value() * total) {
        if (!have_feasible || total > best.size) {
          best.size = total;
          best.witness = {s, t};
          have_feasible = true;
        }
      }
    }
  }
  best.degenerate = best.size.is_zero();
  return best;
}

SizeResult size_eps(const UniformlyBalancedDistribution& mu, const Threshold& eps, Sign v) {
  note_engine_invocation();
  const RectTable table(mu.matrix());
  const auto hit = kernels::size_in_support(table, mu.support().rows, mu.support().cols, v,
                                            eps.num(), eps.den());
  return SizeResult{hit.size.to_rational(), hit.rectangle, hit.size.num == 0};
}

MeasureResult ubc(const SignMatrix& a, const Threshold& eps, const SizeCap& cap, Exec exec) {
  cap.check(a.rows(), a.cols(), "ubc");
  if (!a.has_both_signs()) {
    throw UnbalanceableSupport("ubc is undefined for a monochromatic matrix");
  }
  note_engine_invocation();
  const RectTable table(a);
  const auto hit = exec == Exec::kParallel ? kernels::ubc_parallel(table, eps.num(), eps.den())
                                           : kernels::ubc_serial(table, eps.num(), eps.den());
  MeasureResult r;
  r.max_size = hit.size.to_rational();
  r.log2_value = r.max_size.neg_log2();
  r.witness_rectangle = hit.rectangle;
  r.witness_submatrix = hit.support;
  r.witness_support = hit.support;
  r.orientation = hit.v;
  return r;
}

}  // namespace corrlab
