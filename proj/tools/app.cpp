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

#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "corrlab/corpus.hpp"
#include "corrlab/corr_heuristic.hpp"
#include "corrlab/dcc.hpp"
#include "corrlab/discrepancy.hpp"
#include "corrlab/errors.hpp"
#include "corrlab/matrix_io.hpp"
#include "corrlab/measures.hpp"
#include "corrlab/rank.hpp"
#include "corrlab/report_io.hpp"
#include "corrlab/suites.hpp"
#include "result_cache.hpp"

namespace corrlab::cli {
namespace {

constexpr const char* kVersion = CORRLAB_VERSION;

const std::vector<std::string> kMeasures = {"rank", "dcc",  "mono",          "hmono",
                                            "ubc",  "disc", "corr-heuristic"};

std::string display_log(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::pair<int, int> parse_dims(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int m = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    const int n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::logic_error&) {
    throw ConfigError("expected dimensions of the form MxN, got '" + text + "'");
  }
}

struct CorpusFlags {
  std::string in;
  std::string exhaustive;
  std::string family;
  std::string dims = "3x3";
  std::string block;
  std::string block_sign = "+";
  std::string bias = "1/2";
  int blocks = 1;
  int count = 1;
  std::uint64_t seed = 0;
  bool dedup = false;
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& f) {
  cmd->add_option("--in", f.in, "Matrix file (one or more matrices)");
  cmd->add_option("--exhaustive", f.exhaustive, "All sign matrices of the given shape, MxN");
  cmd->add_option("--family", f.family,
                  "Generator family: exhaustive, random, planted, rank1_blocks, diagonal_pattern");
  cmd->add_option("--dims", f.dims, "Matrix shape MxN for --family")->capture_default_str();
  cmd->add_option("--block", f.block, "Planted block shape RxC");
  cmd->add_option("--block-sign", f.block_sign, "Planted block sign, + or -")
      ->capture_default_str();
  cmd->add_option("--bias", f.bias, "Probability of a -1 entry (random, planted)")
      ->capture_default_str();
  cmd->add_option("--blocks", f.blocks, "rank1_blocks: 1 (outer products) or 2 (2x2 blocks)")
      ->capture_default_str();
  cmd->add_option("--count", f.count, "Number of matrices for seeded families")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Generator seed")->capture_default_str();
  cmd->add_flag("--dedup", f.dedup,
                "Exhaustive: one representative per row/column-permutation and negation orbit");
}

bool has_generator(const CorpusFlags& f) { return !f.exhaustive.empty() || !f.family.empty(); }

GeneratorSpec make_spec(const CorpusFlags& f) {
  GeneratorSpec spec;
  if (!f.exhaustive.empty()) {
    spec.family = Family::kExhaustive;
    std::tie(spec.rows, spec.cols) = parse_dims(f.exhaustive);
  } else {
    spec.family = parse_family(f.family);
    std::tie(spec.rows, spec.cols) = parse_dims(f.dims);
  }
  spec.seed = f.seed;
  spec.count = f.count;
  spec.dedup = f.dedup;
  spec.bias = Rational::parse(f.bias);
  spec.blocks = f.blocks;
  if (!f.block.empty()) std::tie(spec.block_rows, spec.block_cols) = parse_dims(f.block);
  if (f.block_sign == "+" || f.block_sign == "+1") {
    spec.block_sign = Sign::kPlus;
  } else if (f.block_sign == "-" || f.block_sign == "-1") {
    spec.block_sign = Sign::kMinus;
  } else {
    throw ConfigError("--block-sign must be + or -");
  }
  return spec;
}

std::pair<std::vector<SignMatrix>, std::string> load_corpus(const CorpusFlags& f,
                                                            const SizeCap& cap) {
  if (!f.in.empty() && has_generator(f)) {
    throw ConfigError("give either --in or a generator (--exhaustive/--family), not both");
  }
  if (!f.in.empty()) return {read_matrices_file(f.in), "file " + f.in};
  if (!has_generator(f)) throw ConfigError("no corpus: pass --in, --exhaustive or --family");
  const GeneratorSpec spec = make_spec(f);
  return {generate(spec, cap), spec.describe()};
}

// ------------------------------------------------------------- compute

struct ComputeFlags {
  std::string measure;
  std::string rho;
  std::string eps;
  std::string balance = "1/4";
  int iterations = 20;
  std::uint64_t seed = 0;
};

void require(const std::string& value, const char* flag, const std::string& measure) {
  if (value.empty()) throw ConfigError("measure " + measure + " needs " + flag);
}

std::string canonical_params(const std::string& measure, const ComputeFlags& f) {
  if (measure == "mono" || measure == "hmono") require(f.rho, "--rho", measure);
  if (measure == "ubc" || measure == "corr-heuristic") require(f.eps, "--eps", measure);
  if (measure == "mono" || measure == "hmono") return "rho=" + Threshold::parse(f.rho).to_string();
  if (measure == "ubc") return "eps=" + Threshold::parse(f.eps).to_string();
  if (measure == "corr-heuristic") {
    return "eps=" + Threshold::parse(f.eps).to_string() +
           ";balance=" + Rational::parse(f.balance).to_string() +
           ";iterations=" + std::to_string(f.iterations) + ";seed=" + std::to_string(f.seed);
  }
  return "";
}

int default_cap(const std::string& measure) {
  if (measure == "hmono") return kDefaultHmonoCap;
  if (measure == "dcc") return kDefaultDccCap;
  if (measure == "disc") return kDefaultDiscCap;
  return kDefaultCap;
}

std::string measure_block(const MeasureResult& r, const std::string& measure) {
  std::ostringstream os;
  os << "max_size " << r.max_size.to_string() << "\n";
  os << "log2 " << display_log(r.log2_value) << " (display only)\n";
  os << "witness " << r.witness_rectangle.to_string() << "\n";
  if (measure == "hmono") os << "submatrix " << r.witness_submatrix.to_string() << "\n";
  if (measure == "ubc") {
    os << "support " << r.witness_support.to_string() << "\n";
    os << "orientation " << to_char(r.orientation) << "\n";
  }
  return os.str();
}

// Computes one measure, printing exactly what is stored in the cache.
ResultRecord compute_record(const SignMatrix& a, const std::string& measure, const ComputeFlags& f,
                            const SizeCap& cap) {
  ResultRecord rec;
  rec.hash = a.content_hash();
  rec.op = measure;
  rec.params = canonical_params(measure, f);
  rec.version = kVersion;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream os;
  if (measure == "rank") {
    cap.check(a.rows(), a.cols(), "rank");
    const int r = rank(a).r;
    rec.value = std::to_string(r);
    os << r << "\n";
  } else if (measure == "dcc") {
    const DccResult d = dcc_exact(a, cap);
    rec.value = std::to_string(d.value);
    rec.witness = d.tree.serialize();
    os << d.value << "\n";
    os << "protocol " << rec.witness << "\n";
  } else if (measure == "mono" || measure == "hmono") {
    const Threshold rho = Threshold::parse(f.rho);
    const MeasureResult r = measure == "mono" ? mono(a, rho, cap) : hmono(a, rho, cap);
    rec.value = r.max_size.to_string();
    rec.witness = r.witness_rectangle.to_string();
    os << measure_block(r, measure);
  } else if (measure == "ubc") {
    const MeasureResult r = ubc(a, Threshold::parse(f.eps), cap);
    rec.value = r.max_size.to_string();
    rec.witness = r.witness_support.to_string() + " " + r.witness_rectangle.to_string();
    os << measure_block(r, measure);
  } else if (measure == "disc") {
    const DiscrepancyResult r = disc(a, cap);
    rec.value = r.disc.to_string();
    rec.witness = r.tight_rectangle.to_string();
    os << r.disc.to_string() << "\n";
    os << "d " << r.d.to_string() << "\n";
    os << "tight " << r.tight_rectangle.to_string() << "\n";
    os << "sigma";
    for (const auto& x : r.optimal_sigma.masses()) os << " " << x.to_string();
    os << "\n";
    os << "certificate";
    for (std::size_t i = 0; i < r.certificate_support.size(); ++i) {
      os << " " << r.certificate_weights[i].to_string() << "*"
         << to_char(r.certificate_support[i].sign) << r.certificate_support[i].rect.to_string();
    }
    os << "\n";
  } else if (measure == "corr-heuristic") {
    const CorrHeuristicResult r = corr_lower_heuristic(
        a, Threshold::parse(f.eps), Rational::parse(f.balance), f.iterations, f.seed, cap);
    rec.value = r.best_size.to_string();
    rec.witness = r.witness.to_string();
    os << "best_size " << r.best_size.to_string() << "\n";
    os << "lower_bound_log2 " << display_log(r.log2_value) << " (display only)\n";
    os << "start_size " << r.start_size.to_string() << "\n";
    os << "orientation " << to_char(r.orientation) << "\n";
    os << "witness " << r.witness.to_string() << "\n";
    os << "mu";
    for (const auto& x : r.best_mu.masses()) os << " " << x.to_string();
    os << "\n";
  } else {
    throw ConfigError("unknown measure '" + measure + "'");
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.output = os.str();
  return rec;
}

ResultRecord cached_compute(ResultCache& cache, const SignMatrix& a, const std::string& measure,
                            const ComputeFlags& f, const SizeCap& cap) {
  if (cache.enabled()) {
    if (auto hit = cache.find(a.content_hash(), measure, canonical_params(measure, f), kVersion)) {
      return *hit;
    }
  }
  ResultRecord rec = compute_record(a, measure, f, cap);
  cache.append(rec);
  return rec;
}

// ------------------------------------------------------------- report

struct FactsRow {
  std::optional<int> dcc;
  std::optional<int> rank;
  std::optional<Rational> half;
  std::optional<Rational> zero;
  std::optional<Rational> disc;
};

std::vector<MatrixFacts> facts_from_cache(const ResultCache& cache,
                                          const std::vector<std::string>& hashes, bool need_disc) {
  std::map<std::string, FactsRow> rows;
  const std::string half = "rho=1/2";
  const std::string zero = "rho=0/1";
  for (const auto& r : cache.records()) {
    if (r.version != kVersion) continue;
    auto& row = rows[r.hash];
    if (r.op == "dcc") row.dcc = std::stoi(r.value);
    if (r.op == "rank") row.rank = std::stoi(r.value);
    if (r.op == "hmono" && r.params == half) row.half = Rational::parse(r.value);
    if (r.op == "hmono" && r.params == zero) row.zero = Rational::parse(r.value);
    if (r.op == "disc") row.disc = Rational::parse(r.value);
  }
  std::vector<std::string> order = hashes;
  if (order.empty()) {
    for (const auto& [h, _] : rows) order.push_back(h);
  }
  std::vector<MatrixFacts> facts;
  std::set<std::string> seen;
  for (const auto& h : order) {
    if (!seen.insert(h).second) continue;
    const auto it = rows.find(h);
    if (it == rows.end()) continue;
    const FactsRow& row = it->second;
    if (!row.dcc || !row.rank || !row.half || !row.zero) continue;
    if (need_disc && !row.disc) continue;
    MatrixFacts f;
    f.hash = h;
    f.dcc = *row.dcc;
    f.rank = *row.rank;
    f.hmono_half_size = *row.half;
    f.hmono_zero_size = *row.zero;
    if (row.disc) f.d = Rational(1) / *row.disc;
    facts.push_back(std::move(f));
  }
  return facts;
}

int map_error(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidMatrix*>(&e)) {
    return kExitParse;
  }
  if (dynamic_cast<const SizeCapExceeded*>(&e)) return kExitSizeCap;
  if (dynamic_cast<const UnbalanceableSupport*>(&e)) return kExitUnbalanceable;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const InternalInvariant*>(&e)) return kExitInternal;
  if (dynamic_cast<const Error*>(&e)) return kExitConfig;
  return kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"corrlab: exact corruption, hereditary monochromatic rectangle, discrepancy and "
               "communication complexity measures for small sign matrices"};
  app.name("corrlab");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string cache_path;
  int cap_value = 0;
  bool force_cap = false;
  int threads = 0;
  app.add_option("--cache", cache_path, "Append-only JSON Lines result cache")->configurable();
  app.add_option("--cap", cap_value, "Largest dimension accepted without --force-cap");
  app.add_flag("--force-cap", force_cap, "Allow sizes above the cap (hard limit 12)");
  app.add_option("--threads", threads, "Worker threads (0 = OpenMP default)");

  // compute
  auto* compute = app.add_subcommand("compute", "Compute one measure of one matrix");
  ComputeFlags cf;
  std::string compute_in;
  compute->add_option("--measure", cf.measure, "Measure to compute")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  compute->add_option("--in", compute_in, "Matrix file")->required();
  compute->add_option("--rho", cf.rho, "Threshold rho for mono/hmono, p/q");
  compute->add_option("--eps", cf.eps, "Threshold eps for ubc/corr-heuristic, p/q");
  compute->add_option("--balance", cf.balance, "corr-heuristic balance floor c")
      ->capture_default_str();
  compute->add_option("--iterations", cf.iterations, "corr-heuristic reweighting steps")
      ->capture_default_str();
  compute->add_option("--seed", cf.seed, "corr-heuristic seed")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a property suite over a corpus");
  std::string suite;
  std::vector<std::string> eps_list;
  std::vector<std::string> rho_list;
  std::string json_path;
  std::string csv_path;
  bool two_split = false;
  CorpusFlags vf;
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--eps", eps_list, "Override the suite's eps grid")->delimiter(',');
  verify->add_option("--rho", rho_list, "Override the suite's rho grid")->delimiter(',');
  verify->add_option("--json", json_path, "JSON report path (default <suite>_report.json)");
  verify->add_option("--csv", csv_path, "CSV report path (default <suite>_report.csv)");
  verify->add_flag("--two-way-split", two_split,
                   "theorem8: split the complement in two parts instead of three");
  add_corpus_flags(verify, vf);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated corpus in the matrix text format");
  CorpusFlags gf;
  std::string gen_out;
  add_corpus_flags(gen, gf);
  gen->add_option("--out", gen_out, "Output file (default: standard output)");

  // report
  auto* report = app.add_subcommand("report", "Aggregate cached results into trend tables");
  std::string trend_name;
  std::string from_path;
  std::string report_csv;
  CorpusFlags rf;
  report->add_option("--trend", trend_name, "theorem4, theorem1 or disc_rank")
      ->required()
      ->check(CLI::IsMember({"theorem4", "theorem1", "disc_rank"}));
  report->add_option("--from", from_path, "Cache file to read (default: --cache)");
  report->add_option("--csv", report_csv, "Write the table here instead of standard output");
  add_corpus_flags(report, rf);

  // list
  auto* list = app.add_subcommand("list", "List suites and measures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    auto cap_for = [&](const std::string& measure) {
      return SizeCap{cap_value > 0 ? cap_value : default_cap(measure), force_cap};
    };
    if (*list) {
      out << "measures:";
      for (const auto& m : kMeasures) out << " " << m;
      out << "\nsuites:\n";
      for (const auto& s : suite_names()) {
        out << "  " << s << ": " << find_suite(s).description << "\n";
      }
      return kExitOk;
    }

    if (*compute) {
      ResultCache cache = cache_path.empty() ? ResultCache() : ResultCache(cache_path);
      const SignMatrix a = read_matrix_file(compute_in);
      const ResultRecord rec = cached_compute(cache, a, cf.measure, cf, cap_for(cf.measure));
      out << rec.output;
      return kExitOk;
    }

    if (*verify) {
      SuiteParams params;
      for (const auto& e : eps_list) params.eps.push_back(Threshold::parse(e));
      for (const auto& r : rho_list) params.rho.push_back(Threshold::parse(r));
      params.split = two_split ? ComplementSplit::kTwo : ComplementSplit::kThree;
      params.threads = threads;
      find_suite(suite);  // fail fast on unknown names
      auto [corpus, description] = load_corpus(vf, cap_for(""));
      const SuiteReport rep = run_suite(suite, corpus, params, description);
      write_text_file(json_path.empty() ? suite + "_report.json" : json_path, report_to_json(rep));
      write_text_file(csv_path.empty() ? suite + "_report.csv" : csv_path, report_to_csv(rep));
      out << "suite " << rep.suite << " on " << rep.corpus << ": " << rep.instances
          << " instances, " << rep.checked << " checked, " << rep.vacuous << " vacuous, "
          << rep.violations.size() << " violations\n";
      for (const auto& [k, v] : rep.stats) out << "  " << k << " = " << v << "\n";
      const std::size_t shown = std::min<std::size_t>(rep.violations.size(), 5);
      for (std::size_t i = 0; i < shown; ++i) {
        out << "violation #" << rep.violations[i].index << ": " << rep.violations[i].detail
            << "\n"
            << rep.violations[i].matrix;
      }
      out << (rep.passed() ? "PASS" : "FAIL") << "\n";
      return rep.passed() ? kExitOk : kExitViolations;
    }

    if (*gen) {
      auto [corpus, description] = load_corpus(gf, cap_for(""));
      std::string text = "# " + description + "\n";
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (i) text += "\n";
        text += serialize_matrix(corpus[i]);
      }
      if (gen_out.empty()) {
        out << text;
      } else {
        write_text_file(gen_out, text);
      }
      return kExitOk;
    }

    if (*report) {
      const std::string path = from_path.empty() ? cache_path : from_path;
      if (path.empty()) throw ConfigError("report needs --from or --cache");
      ResultCache cache(path);
      const Trend trend = parse_trend(trend_name);
      const bool need_disc = trend == Trend::kDiscRank;
      std::vector<std::string> hashes;
      if (!rf.in.empty() || has_generator(rf)) {
        auto [corpus, description] = load_corpus(rf, cap_for(""));
        ComputeFlags half;
        half.rho = "1/2";
        ComputeFlags zero;
        zero.rho = "0";
        for (const auto& a : corpus) {
          hashes.push_back(a.content_hash());
          cached_compute(cache, a, "dcc", {}, cap_for("dcc"));
          cached_compute(cache, a, "rank", {}, cap_for("rank"));
          cached_compute(cache, a, "hmono", half, cap_for("hmono"));
          cached_compute(cache, a, "hmono", zero, cap_for("hmono"));
          if (need_disc) cached_compute(cache, a, "disc", {}, cap_for("disc"));
        }
      }
      const auto facts = facts_from_cache(cache, hashes, need_disc);
      const TrendTable table = build_trend(trend, facts);
      const std::string csv = trend_to_csv(table);
      if (report_csv.empty()) {
        out << csv;
      } else {
        write_text_file(report_csv, csv);
      }
      err << "trend " << table.name << ": " << table.rows.size() << " rows, "
          << table.defined_rows << " with a defined ratio, max ratio "
          << (table.max_ratio ? display_log(*table.max_ratio) : std::string("n/a"))
          << " (report only)\n";
      if (cache.skipped_lines() > 0) {
        err << "note: skipped " << cache.skipped_lines() << " malformed cache lines\n";
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    return map_error(e, err);
  }
  return kExitConfig;
}

}  // namespace corrlab::cli
