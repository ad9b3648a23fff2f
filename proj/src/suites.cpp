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

#include "corrlab/suites.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <tuple>

#include "corrlab/dcc.hpp"
#include "corrlab/errors.hpp"
#include "corrlab/matrix_io.hpp"
#include "corrlab/rank.hpp"
#include "corrlab/rect_table.hpp"
#include "corrlab/symmetry.hpp"

namespace corrlab {
namespace {

using i128 = __int128;

std::vector<Threshold> or_default(const std::vector<Threshold>& given,
                                  std::initializer_list<std::pair<int, int>> fallback) {
  if (!given.empty()) return given;
  std::vector<Threshold> out;
  for (const auto& [p, q] : fallback) out.emplace_back(p, q);
  return out;
}

SizeFraction hmono_size(const RectTable& table, const Rational& rho) {
  return kernels::hmono_serial(table, rho.num_i64(), rho.den_i64()).size;
}

SizeFraction mono_size(const RectTable& table, const Rational& rho) {
  return kernels::mono_in(table, full_mask(table.rows()), full_mask(table.cols()), rho.num_i64(),
                          rho.den_i64())
      .size;
}

std::string frac(const SizeFraction& f) { return f.to_rational().to_string(); }

// x >= y * z
bool ge_product(const SizeFraction& x, const SizeFraction& y, const SizeFraction& z) {
  return static_cast<i128>(x.num) * y.den * z.den >= static_cast<i128>(y.num) * z.num * x.den;
}

// x >= num / den
bool ge_value(const SizeFraction& x, std::int64_t num, std::int64_t den) {
  return static_cast<i128>(x.num) * den >= static_cast<i128>(num) * x.den;
}

void keep_min(std::map<std::string, Rational>& m, const std::string& key, const Rational& v) {
  auto it = m.find(key);
  if (it == m.end() || v < it->second) m[key] = v;
}

void keep_max(std::map<std::string, Rational>& m, const std::string& key, const Rational& v) {
  auto it = m.find(key);
  if (it == m.end() || v > it->second) m[key] = v;
}

// ---------------------------------------------------------------- suites

InstanceOutcome check_hmono_ubc(const SignMatrix& a, std::size_t, const SuiteParams& params,
                             const SuiteContext*) {
  InstanceOutcome out;
  if (!a.has_both_signs()) {
    out.vacuous = true;
    return out;
  }
  const RectTable table(a);
  for (const auto& eps : or_default(params.eps, {{0, 1}, {1, 8}, {1, 4}, {1, 2}})) {
    if (eps.value() > Rational(1, 2)) throw ConfigError("lemma7 needs eps <= 1/2");
    const Rational rho = eps.value() * Rational(2);
    const SizeFraction h = hmono_size(table, rho);
    const SizeFraction u = kernels::ubc_serial(table, eps.num(), eps.den()).size;
    if (h < u) {
      out.violations.push_back("eps=" + eps.to_string() + ": hmono_{2eps} size " + frac(h) +
                               " < ubc_eps size " + frac(u));
    } else if (!(u < h)) {
      ++out.counters["tight_eps_" + eps.to_string()];
    }
  }
  return out;
}

InstanceOutcome check_amplification(const SignMatrix& a, std::size_t, const SuiteParams& params,
                                    const SuiteContext*) {
  InstanceOutcome out;
  const RectTable table(a);
  const auto grid = or_default(params.rho, {{1, 2}, {1, 4}, {3, 4}});
  std::map<Rational, SizeFraction> cache;
  auto size_at = [&](const Rational& rho) {
    auto it = cache.find(rho);
    if (it == cache.end()) it = cache.emplace(rho, hmono_size(table, rho)).first;
    return it->second;
  };
  for (const auto& r1 : grid) {
    for (const auto& r2 : grid) {
      const Rational prod = r1.value() * r2.value();
      const SizeFraction s12 = size_at(prod);
      const SizeFraction s1 = size_at(r1.value());
      const SizeFraction s2 = size_at(r2.value());
      if (!ge_product(s12, s1, s2)) {
        out.violations.push_back("rho1=" + r1.to_string() + " rho2=" + r2.to_string() +
                                 ": size " + frac(s12) + " < " + frac(s1) + " * " + frac(s2));
      }
    }
  }
  return out;
}

InstanceOutcome check_monotonicity(const SignMatrix& a, std::size_t, const SuiteParams& params,
                                   const SuiteContext*) {
  InstanceOutcome out;
  const RectTable table(a);
  const auto grid = or_default(params.rho, {{0, 1}, {1, 8}, {1, 4}, {1, 2}, {3, 4}, {1, 1}});
  std::vector<SizeFraction> mono_sizes;
  std::vector<SizeFraction> hmono_sizes;
  for (const auto& rho : grid) {
    mono_sizes.push_back(mono_size(table, rho.value()));
    hmono_sizes.push_back(hmono_size(table, rho.value()));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (!(grid[i].value() >= grid[j].value())) continue;
      // rho_i >= rho_j means a larger admissible rectangle, i.e. smaller measure.
      if (mono_sizes[i] < mono_sizes[j]) {
        out.violations.push_back("mono: rho " + grid[i].to_string() + " size " + frac(mono_sizes[i]) +
                                 " < rho " + grid[j].to_string() + " size " + frac(mono_sizes[j]));
      }
      if (hmono_sizes[i] < hmono_sizes[j]) {
        out.violations.push_back("hmono: rho " + grid[i].to_string() + " size " +
                                 frac(hmono_sizes[i]) + " < rho " + grid[j].to_string() + " size " +
                                 frac(hmono_sizes[j]));
      }
    }
  }
  return out;
}

InstanceOutcome check_sparse_minority(const SignMatrix& a, std::size_t, const SuiteParams&,
                               const SuiteContext*) {
  InstanceOutcome out;
  const int r = rank(a).r;
  const int mn = a.size();
  const int minority = std::min(a.count(Sign::kMinus), a.count(Sign::kPlus));
  if (minority * 4 * r > mn) {
    out.vacuous = true;
    return out;
  }
  const RectTable table(a);
  const int best = std::max(kernels::largest_monochromatic(table, Sign::kPlus).size(),
                            kernels::largest_monochromatic(table, Sign::kMinus).size());
  if (8 * best < mn) {
    out.violations.push_back("largest monochromatic rectangle has " + std::to_string(best) +
                             " entries; 8|R| < mn = " + std::to_string(mn));
  }
  return out;
}

InstanceOutcome check_sparse_value(const SignMatrix& a, std::size_t, const SuiteParams&,
                             const SuiteContext*) {
  InstanceOutcome out;
  const int r = rank(a).r;
  const int mn = a.size();
  const RectTable table(a);
  bool any = false;
  for (const Sign v : {Sign::kPlus, Sign::kMinus}) {
    if (a.count(-v) * 10 * r > mn) continue;
    any = true;
    const int best = kernels::largest_monochromatic(table, v).size();
    if (8 * best < mn) {
      out.violations.push_back(std::string("v=") + to_char(v) + ": largest v-monochromatic rectangle has " +
                               std::to_string(best) + " entries; 8|R| < mn = " + std::to_string(mn));
    }
  }
  out.vacuous = !any;
  return out;
}

InstanceOutcome check_protocol_bound(const SignMatrix& a, std::size_t, const SuiteParams&,
                                const SuiteContext*) {
  InstanceOutcome out;
  const DccResult dcc = dcc_exact(a, SizeCap{kHardDimLimit, true});
  try {
    dcc.tree.validate(a);
  } catch (const InternalInvariant& e) {
    out.violations.push_back(std::string("invalid protocol tree: ") + e.what());
  }
  if (dcc.tree.cost() != dcc.value) out.violations.push_back("tree cost differs from D");
  const auto leaves = monochromatic_partition(dcc).size();
  if (leaves > (std::size_t{1} << dcc.value)) {
    out.violations.push_back(std::to_string(leaves) + " leaves exceed 2^D");
  }
  const RectTable table(a);
  const SizeFraction h0 = hmono_size(table, Rational(0));
  if (!ge_value(h0, 1, std::int64_t{1} << (dcc.value + 1))) {
    out.violations.push_back("hmono_0 size " + frac(h0) + " < 2^-(D+1), D = " +
                             std::to_string(dcc.value));
  }
  keep_max(out.observed_max, "D", Rational(dcc.value));
  return out;
}

InstanceOutcome check_logrank(const SignMatrix& a, std::size_t, const SuiteParams&,
                              const SuiteContext*) {
  InstanceOutcome out;
  const int d = dcc_value(RectTable(a));
  const int r = rank(a).r;
  if (static_cast<std::int64_t>(r) > (std::int64_t{1} << d)) {
    out.violations.push_back("rank " + std::to_string(r) + " > 2^D = " +
                             std::to_string(std::int64_t{1} << d));
  }
  return out;
}

InstanceOutcome check_composition(const SignMatrix& a, std::size_t, const SuiteParams&,
                                  const SuiteContext*) {
  InstanceOutcome out;
  const int r = rank(a).r;
  const RectTable table(a);
  const SizeFraction s0 = hmono_size(table, Rational(0));
  const SizeFraction sr = hmono_size(table, Rational(1, 10 * r));
  // hmono_0 <= hmono_{1/(10r)} + 3  <=>  size_0 >= size_{1/(10r)} / 8.
  if (static_cast<i128>(8) * s0.num * sr.den < static_cast<i128>(sr.num) * s0.den) {
    out.violations.push_back("hmono_0 size " + frac(s0) + " < hmono_{1/(10r)} size " + frac(sr) +
                             " / 8 (r = " + std::to_string(r) + ")");
  }
  return out;
}

class DiscContext : public SuiteContext {
 public:
  explicit DiscContext(std::vector<Rational> values) : values(std::move(values)) {}
  std::vector<Rational> values;
};

InstanceOutcome check_low_corruption(const SignMatrix& a, std::size_t index, const SuiteParams& params,
                               const SuiteContext* ctx) {
  InstanceOutcome out;
  if (!a.has_both_signs()) {
    out.vacuous = true;
    return out;
  }
  const Rational& delta = static_cast<const DiscContext*>(ctx)->values.at(index);
  const std::int64_t d_num = delta.den_i64();  // d = 1/disc
  const std::int64_t d_den = delta.num_i64();

  // (a) constructive rectangle for every uniformly-balanced mu, both
  // orientations (A and -A).
  std::int64_t min_mass = 1;
  std::int64_t min_den = 1;
  for (const SignMatrix& m : {a, a.negated()}) {
    const RectTable table(m);
    for (const Rectangle& support : RectangleRange(a.rows(), a.cols())) {
      if (table.monochromatic(support.rows, support.cols)) continue;
      const auto k = kernels::low_corruption(table, support.rows, support.cols, d_num, d_den,
                                             params.split);
      ++out.counters["supports_checked"];
      if (!k.mass_ok || !k.corruption_ok) {
        out.violations.push_back(std::string(m == a ? "A" : "-A") + " support " +
                                 support.to_string() + ": rectangle " + k.rect.to_string() +
                                 " mass " + Rational(k.mass, k.denominator).to_string() +
                                 " minus-mass " + Rational(k.minus_mass, k.denominator).to_string() +
                                 " fails with disc " + delta.to_string());
      }
      if (static_cast<i128>(k.mass) * min_den < static_cast<i128>(min_mass) * k.denominator) {
        min_mass = k.mass;
        min_den = k.denominator;
      }
      if (static_cast<i128>(k.mass) * d_num < static_cast<i128>(d_den) * k.denominator) {
        ++out.counters["mass_below_1_over_d"];
      }
      if (k.used_complement) ++out.counters["used_complement"];
    }
  }
  keep_min(out.observed_min, "mass_times_d", Rational(min_mass, min_den) / delta);

  const RectTable table(a);
  const Rational third = delta / Rational(3);  // 1/(3d)
  // (b) ubc_{1/2 - 1/(6d)}(A) <= log2(3d)
  const Threshold eps(Rational(1, 2) - delta / Rational(6));
  const SizeFraction u = kernels::ubc_serial(table, eps.num(), eps.den()).size;
  if (!ge_value(u, third.num_i64(), third.den_i64())) {
    out.violations.push_back("ubc_{" + eps.to_string() + "} size " + frac(u) + " < 1/(3d) = " +
                             third.to_string());
  }
  // (c) hmono_{1 - 1/(3d)}(A) <= log2(3d)
  const Rational rho = Rational(1) - third;
  const SizeFraction h = hmono_size(table, rho);
  if (!ge_value(h, third.num_i64(), third.den_i64())) {
    out.violations.push_back("hmono_{" + rho.to_string() + "} size " + frac(h) + " < 1/(3d) = " +
                             third.to_string());
  }
  keep_max(out.observed_max, "d", delta.is_zero() ? Rational(0) : Rational(1) / delta);
  return out;
}

InstanceOutcome check_lp_certification(const SignMatrix& a, std::size_t, const SuiteParams&,
                                       const SuiteContext*) {
  InstanceOutcome out;
  const SizeCap cap{kHardDimLimit, true};
  const DiscrepancyResult base = disc(a, cap);
  const DiscrepancyCheck check = verify_discrepancy(a, base);
  if (!check.sigma_valid) out.violations.push_back("sigma does not re-verify at disc");
  if (!check.tight_attained) out.violations.push_back("tight rectangle misses disc");
  if (!check.certificate_valid) out.violations.push_back("dual certificate fails");
  const Rational neg = disc(a.negated(), cap).disc;
  const Rational tr = disc(a.transposed(), cap).disc;
  if (neg != base.disc) {
    out.violations.push_back("disc(-A) = " + neg.to_string() + " != disc(A) = " + base.disc.to_string());
  }
  if (tr != base.disc) {
    out.violations.push_back("disc(A^T) = " + tr.to_string() + " != disc(A) = " + base.disc.to_string());
  }
  keep_max(out.observed_max, "pivots", Rational(base.pivots));
  keep_min(out.observed_min, "disc", base.disc);
  return out;
}

std::vector<SuiteDefinition>& registry() {
  static std::vector<SuiteDefinition> suites = [] {
    std::vector<SuiteDefinition> s;
    s.push_back({"lemma7", "hmono_{2eps}(A) <= ubc_eps(A)", nullptr, check_hmono_ubc});
    s.push_back({"amplification", "hmono_{r1 r2} <= hmono_{r1} + hmono_{r2}", nullptr,
                 check_amplification});
    s.push_back({"monotonicity", "rho1 >= rho2 => mono_{rho1} <= mono_{rho2} (and hmono)", nullptr,
                 check_monotonicity});
    s.push_back({"theorem2", "minority fraction <= 1/(4r) => monochromatic R with |R| >= mn/8",
                 nullptr, check_sparse_minority});
    s.push_back({"claim5", "fraction of -v <= 1/(10r) => v-monochromatic R with |R| >= mn/8",
                 nullptr, check_sparse_value});
    s.push_back({"footnote2", "hmono_0(A) <= D(A) + 1; protocol leaves <= 2^D", nullptr,
                 check_protocol_bound});
    s.push_back({"logrank", "log2 rank(A) <= D(A)", nullptr, check_logrank});
    s.push_back({"composition", "hmono_0(A) <= hmono_{1/(10r)}(A) + 3", nullptr, check_composition});
    s.push_back({"theorem8",
                 "low-corruption rectangle postconditions; ubc_{1/2-1/(6d)} and "
                 "hmono_{1-1/(3d)} <= log2(3d)",
                 [](const std::vector<SignMatrix>& corpus, const SuiteParams&) {
                   return std::unique_ptr<SuiteContext>(
                       std::make_unique<DiscContext>(discrepancy_by_orbit(corpus)));
                 },
                 check_low_corruption});
    s.push_back({"lp_certification", "exact LP certificates; disc(A) = disc(-A) = disc(A^T)",
                 nullptr, check_lp_certification});
    return s;
  }();
  return suites;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::string display(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (~%.6f)", r.to_double());
  return r.to_string() + buf;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::lock_guard lock(registry_mutex());
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

const SuiteDefinition& find_suite(std::string_view name) {
  std::lock_guard lock(registry_mutex());
  for (const auto& s : registry()) {
    if (s.name == name) return s;
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

void register_suite(SuiteDefinition def) {
  std::lock_guard lock(registry_mutex());
  for (auto& s : registry()) {
    if (s.name == def.name) {
      s = std::move(def);
      return;
    }
  }
  registry().push_back(std::move(def));
}

SuiteReport run_suite(std::string_view name, const std::vector<SignMatrix>& corpus,
                      const SuiteParams& params, std::string corpus_description) {
  const SuiteDefinition def = find_suite(name);
  const auto start = std::chrono::steady_clock::now();
  const std::unique_ptr<SuiteContext> ctx = def.prepare ? def.prepare(corpus, params) : nullptr;

  const auto n = static_cast<std::int64_t>(corpus.size());
  std::vector<InstanceOutcome> outcomes(corpus.size());
  const int threads = params.threads > 0 ? params.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      outcomes[idx] = def.check(corpus[idx], idx, params, ctx.get());
    } catch (const std::exception& e) {
      outcomes[idx].violations.push_back(std::string("exception: ") + e.what());
    }
  }

  SuiteReport report;
  report.suite = def.name;
  report.corpus = std::move(corpus_description);
  report.instances = corpus.size();
  std::map<std::string, Rational> mins;
  std::map<std::string, Rational> maxs;
  std::map<std::string, std::int64_t> counters;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.vacuous) ++report.vacuous;
    for (const auto& v : o.violations) report.violations.push_back({i, serialize_matrix(corpus[i]), v});
    for (const auto& [k, v] : o.observed_min) keep_min(mins, k, v);
    for (const auto& [k, v] : o.observed_max) keep_max(maxs, k, v);
    for (const auto& [k, v] : o.counters) counters[k] += v;
  }
  report.checked = report.instances - report.vacuous;
  for (const auto& [k, v] : mins) report.stats["min_" + k] = display(v);
  for (const auto& [k, v] : maxs) report.stats["max_" + k] = display(v);
  for (const auto& [k, v] : counters) report.stats[k] = std::to_string(v);
  if (report.checked == 0) report.stats["vacuous"] = "no instance met the hypothesis";
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Rational> discrepancy_by_orbit(const std::vector<SignMatrix>& corpus) {
  const SymmetryGroup group{true, true};
  std::map<std::pair<int, int>, std::unique_ptr<OrbitIndex>> indices;
  using Key = std::tuple<int, int, std::uint64_t>;
  std::map<Key, std::size_t> unique;
  std::vector<Key> keys;
  std::vector<std::size_t> slot(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SignMatrix& a = corpus[i];
    std::uint64_t canon = 0;
    if (a.size() <= 16) {
      auto& idx = indices[{a.rows(), a.cols()}];
      if (!idx) idx = std::make_unique<OrbitIndex>(a.rows(), a.cols(), group);
      canon = idx->representatives()[idx->orbit_of(a.code())];
    } else {
      canon = canonical_code(a, group);
    }
    const Key key{a.rows(), a.cols(), canon};
    auto [it, inserted] = unique.emplace(key, keys.size());
    if (inserted) keys.push_back(key);
    slot[i] = it->second;
  }
  std::vector<Rational> values(keys.size());
  const auto k = static_cast<std::int64_t>(keys.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t u = 0; u < k; ++u) {
    const auto& [m, n, code] = keys[static_cast<std::size_t>(u)];
    values[static_cast<std::size_t>(u)] =
        disc(SignMatrix::from_code(m, n, code), SizeCap{kHardDimLimit, true}).disc;
  }
  std::vector<Rational> out;
  out.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) out.push_back(values[slot[i]]);
  return out;
}

MatrixFacts compute_facts(const SignMatrix& a, bool with_disc) {
  MatrixFacts f;
  f.hash = a.content_hash();
  f.rows = a.rows();
  f.cols = a.cols();
  const RectTable table(a);
  f.dcc = dcc_value(table);
  f.rank = rank(a).r;
  f.hmono_half_size = kernels::hmono_serial(table, 1, 2).size.to_rational();
  f.hmono_zero_size = kernels::hmono_serial(table, 0, 1).size.to_rational();
  if (with_disc) f.d = disc(a, SizeCap{kHardDimLimit, true}).d;
  return f;
}

Trend parse_trend(std::string_view name) {
  if (name == "theorem4") return Trend::kDepthVsHmonoHalf;
  if (name == "theorem1") return Trend::kDepthVsHmonoZero;
  if (name == "disc_rank") return Trend::kDiscRank;
  throw ConfigError("unknown trend '" + std::string(name) + "'");
}

TrendTable build_trend(Trend trend, const std::vector<MatrixFacts>& facts) {
  TrendTable t;
  auto fmt = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return std::string(buf);
  };
  auto add = [&](std::vector<std::string> row, double num, double denom) {
    std::string ratio = "n/a";
    if (denom > 0.0) {
      const double r = num / denom;
      ratio = fmt(r);
      ++t.defined_rows;
      if (!t.max_ratio || r > *t.max_ratio) t.max_ratio = r;
    }
    row.push_back(ratio);
    t.rows.push_back(std::move(row));
  };
  switch (trend) {
    case Trend::kDepthVsHmonoHalf:
    case Trend::kDepthVsHmonoZero: {
      const bool t4 = trend == Trend::kDepthVsHmonoHalf;
      t.name = t4 ? "theorem4" : "theorem1";
      t.header = {"hash", "D", "rank", t4 ? "hmono_half" : "hmono_zero", "ratio"};
      for (const auto& f : facts) {
        const double lr = std::log2(static_cast<double>(f.rank));
        const double h = (t4 ? f.hmono_half_size : f.hmono_zero_size).neg_log2();
        add({f.hash, std::to_string(f.dcc), std::to_string(f.rank), fmt(h)}, f.dcc,
            t4 ? h * lr * lr : lr * lr + h * lr);
      }
      break;
    }
    case Trend::kDiscRank:
      t.name = "disc_rank";
      t.header = {"hash", "rank", "d", "sqrt_rank", "ratio"};
      for (const auto& f : facts) {
        if (!f.d) throw ConfigError("disc_rank trend needs discrepancy facts");
        const double s = std::sqrt(static_cast<double>(f.rank));
        add({f.hash, std::to_string(f.rank), f.d->to_string(), fmt(s)}, f.d->to_double(), s);
      }
      break;
  }
  return t;
}

}  // namespace corrlab
