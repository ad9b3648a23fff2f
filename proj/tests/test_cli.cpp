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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "corrlab/instrumentation.hpp"
#include "corrlab/suites.hpp"
#include "result_cache.hpp"

namespace corrlab::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("corrlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << content;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ComputeExamples) {
  const auto ones = file("ones3.txt", "3 3\n+++\n+++\n+++\n");
  const auto m = file("m.txt", "2 2\n++\n+-\n");
  EXPECT_EQ(call({"compute", "--measure", "rank", "--in", ones}), 0);
  EXPECT_EQ(out_.str(), "1\n");
  EXPECT_EQ(call({"compute", "--measure", "mono", "--rho", "0", "--in", m}), 0);
  EXPECT_EQ(out_.str(), "max_size 1/2\nlog2 1.000000 (display only)\nwitness {0}x{0,1}\n");
  EXPECT_EQ(call({"compute", "--measure", "disc", "--in", ones}), 0);
  EXPECT_EQ(out_.str().substr(0, 4), "1/1\n");
  EXPECT_EQ(call({"compute", "--measure", "dcc", "--in", m}), 0);
  EXPECT_EQ(out_.str().substr(0, 2), "2\n");
  EXPECT_EQ(call({"compute", "--measure", "ubc", "--eps", "0", "--in", m}), 0);
  EXPECT_NE(out_.str().find("max_size 1/3"), std::string::npos);
  EXPECT_EQ(call({"compute", "--measure", "corr-heuristic", "--eps", "1/4", "--in", m}), 0);
  EXPECT_NE(out_.str().find("best_size"), std::string::npos);
}

TEST_F(CliTest, ExitCodesAreDistinct) {
  const auto ones = file("ones3.txt", "3 3\n+++\n+++\n+++\n");
  const auto bad = file("bad.txt", "2 2\n+?\n++\n");
  const auto big = file("big.txt", "9 1\n+\n+\n+\n+\n+\n+\n+\n+\n+\n");
  EXPECT_EQ(call({"compute", "--measure", "rank", "--in", bad}), kExitParse);
  EXPECT_EQ(call({"compute", "--measure", "hmono", "--rho", "0", "--in", big}), kExitSizeCap);
  EXPECT_EQ(call({"compute", "--measure", "ubc", "--eps", "0", "--in", ones}), kExitUnbalanceable);
  EXPECT_EQ(call({"compute", "--measure", "rank", "--in", path("missing.txt")}), kExitIo);
  EXPECT_EQ(call({"compute", "--measure", "mono", "--in", ones}), kExitConfig);  // no --rho
  EXPECT_EQ(call({"compute", "--measure", "mono", "--rho", "5/4", "--in", ones}), kExitConfig);
  EXPECT_EQ(call({"compute", "--measure", "volume", "--in", ones}), kExitConfig);
  EXPECT_EQ(call({"verify", "--suite", "nope", "--exhaustive", "2x2"}), kExitConfig);
  EXPECT_EQ(call({"verify", "--suite", "logrank", "--exhaustive", "2by2"}), kExitConfig);
  EXPECT_EQ(call({"--bogus"}), kExitConfig);
  EXPECT_EQ(call({"compute", "--measure", "rank", "--in", big, "--cap", "8"}), kExitSizeCap);
  EXPECT_EQ(call({"--force-cap", "compute", "--measure", "rank", "--in", big}), kExitOk);
}

TEST_F(CliTest, VerifyExamplesPassAndWriteReports) {
  const auto json = path("r.json");
  const auto csv = path("r.csv");
  EXPECT_EQ(call({"verify", "--suite", "lemma7", "--exhaustive", "3x3", "--eps", "1/4", "--json",
                  json, "--csv", csv}),
            kExitOk);
  EXPECT_NE(out_.str().find("PASS"), std::string::npos);
  EXPECT_NE(slurp(json).find("\"passed\": true"), std::string::npos);
  EXPECT_NE(slurp(csv).find("summary,,result,PASS"), std::string::npos);
  EXPECT_EQ(call({"verify", "--suite", "amplification", "--exhaustive", "3x3", "--json", json,
                  "--csv", csv}),
            kExitOk);
  EXPECT_EQ(call({"verify", "--suite", "theorem8", "--exhaustive", "3x3", "--json", json, "--csv",
                  csv}),
            kExitOk);
}

TEST_F(CliTest, VerifyReturnsOneOnViolations) {
  register_suite({"test_cli_always_fails", "rejects everything", nullptr,
                  [](const SignMatrix&, std::size_t, const SuiteParams&, const SuiteContext*) {
                    InstanceOutcome o;
                    o.violations.push_back("rejected");
                    return o;
                  }});
  const auto json = path("f.json");
  const auto csv = path("f.csv");
  EXPECT_EQ(call({"verify", "--suite", "test_cli_always_fails", "--exhaustive", "1x2", "--json",
                  json, "--csv", csv}),
            kExitViolations);
  EXPECT_NE(out_.str().find("FAIL"), std::string::npos);
  EXPECT_NE(slurp(json).find("\"matrix\": \"1 2\\n++\\n\""), std::string::npos);
}

TEST_F(CliTest, WarmCacheReproducesOutputWithoutEngines) {
  const auto m = file("m.txt", "3 3\n+-+\n--+\n+++\n");
  const auto cache = path("cache.jsonl");
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"compute", "--measure", "hmono", "--rho", "1/2", "--in", m},
        std::vector<std::string>{"compute", "--measure", "disc", "--in", m},
        std::vector<std::string>{"compute", "--measure", "dcc", "--in", m}}) {
    std::vector<std::string> args = {"--cache", cache};
    args.insert(args.end(), cmd.begin(), cmd.end());
    const auto before = engine_invocations();
    ASSERT_EQ(call(args), kExitOk);
    const std::string cold = out_.str();
    EXPECT_GT(engine_invocations(), before);
    const auto warm_before = engine_invocations();
    ASSERT_EQ(call(args), kExitOk);
    EXPECT_EQ(out_.str(), cold);
    EXPECT_EQ(engine_invocations(), warm_before);
  }
  // A different threshold is a different key.
  const auto before = engine_invocations();
  ASSERT_EQ(call({"--cache", cache, "compute", "--measure", "hmono", "--rho", "2/4", "--in", m}), 0);
  EXPECT_EQ(engine_invocations(), before);  // 2/4 canonicalises to 1/2
  ASSERT_EQ(call({"--cache", cache, "compute", "--measure", "hmono", "--rho", "1/3", "--in", m}), 0);
  EXPECT_GT(engine_invocations(), before);
}

TEST_F(CliTest, CorruptCacheLinesAreSkipped) {
  const auto cache = path("cache.jsonl");
  ResultRecord r{"abc", "rank", "", "2", "", CORRLAB_VERSION, 1.0, "2\n"};
  {
    std::ofstream out(cache);
    out << record_to_line(r) << "\n{not json\n" << R"({"hash": 3})" << "\n";
    r.hash = "def";
    out << record_to_line(r) << "\n";
  }
  const ResultCache c(cache);
  EXPECT_EQ(c.records().size(), 2U);
  EXPECT_EQ(c.skipped_lines(), 2U);
  EXPECT_TRUE(c.find("def", "rank", "", CORRLAB_VERSION).has_value());
  EXPECT_FALSE(c.find("def", "rank", "", "0.0.0").has_value());
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const auto a = path("a.txt");
  const auto b = path("b.txt");
  ASSERT_EQ(call({"generate", "--family", "planted", "--dims", "6x6", "--block", "3x3", "--seed",
                  "7", "--out", a}),
            0);
  ASSERT_EQ(call({"generate", "--family", "planted", "--dims", "6x6", "--block", "3x3", "--seed",
                  "7", "--out", b}),
            0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a).substr(0, 1), "#");
  ASSERT_EQ(call({"verify", "--suite", "logrank", "--in", a, "--json", path("x.json"), "--csv",
                  path("x.csv")}),
            0);
  EXPECT_NE(out_.str().find("1 instances"), std::string::npos);
}

TEST_F(CliTest, ReportBuildsTrendTablesFromCache) {
  const auto cache = path("cache.jsonl");
  ASSERT_EQ(call({"report", "--trend", "theorem4", "--from", cache, "--exhaustive", "2x2"}), 0);
  const std::string table = out_.str();
  EXPECT_EQ(table.rfind("hash,D,rank,hmono_half,ratio\n", 0), 0U);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 17);
  EXPECT_NE(err_.str().find("max ratio"), std::string::npos);
  // Second pass reads everything back from the cache.
  const auto before = engine_invocations();
  ASSERT_EQ(call({"report", "--trend", "theorem1", "--from", cache}), 0);
  EXPECT_EQ(engine_invocations(), before);
  EXPECT_EQ(out_.str().rfind("hash,D,rank,hmono_zero,ratio\n", 0), 0U);
  EXPECT_EQ(call({"report", "--trend", "theorem4"}), kExitConfig);
  ASSERT_EQ(call({"report", "--trend", "disc_rank", "--from", cache, "--exhaustive", "1x2"}), 0);
  const std::string disc_table = out_.str();
  EXPECT_EQ(disc_table.rfind("hash,rank,d,sqrt_rank,ratio\n", 0), 0U);
  EXPECT_EQ(std::count(disc_table.begin(), disc_table.end(), '\n'), 5);
}

}  // namespace
}  // namespace corrlab::cli
