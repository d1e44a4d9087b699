// Copyright 2026 The fbl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.h"
#include "fbl/error.h"
#include "grid.h"

namespace fbl::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fbl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<double> row;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) row.push_back(std::stod(f));
    rows.push_back(row);
  }
  return rows;
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("fbl_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Grid, Linear) {
  auto g = parse_grid("0:1:lin:5");
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_EQ(g[2], 0.5);
  EXPECT_EQ(g[4], 1.0);
  EXPECT_EQ(parse_grid("-0.95:10").size(), kDefaultGridPoints);
}

TEST(Grid, Log) {
  auto g = parse_grid("1e-8:1e3:log");
  ASSERT_EQ(g.size(), 100u);
  EXPECT_EQ(g.front(), 1e-8);
  EXPECT_EQ(g.back(), 1e3);
  EXPECT_NEAR(g[1] / g[0], std::pow(1e11, 1.0 / 99), 1e-12);
  EXPECT_EQ(parse_grid("2:2:log:1"), std::vector<double>{2.0});
}

TEST(Grid, Errors) {
  for (const char* bad : {"", "1", "1:x", "2:1", "0:1:log", "1:2:cubic", "1:2:log:0", "1:2:lin:1"}) {
    EXPECT_THROW(parse_grid(bad), Error) << bad;
  }
}

TEST(Cli, ConjectureCounterexample) {
  auto r = invoke({"conjecture", "--dist", "twopoint:1:0.2:20:0.8", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"below_half\":true"), std::string::npos);
  EXPECT_NE(r.out.find("\"value\":0.2553402322211"), std::string::npos);
}

TEST(Cli, HerSweepShape) {
  auto r = invoke({"sweep", "--model", "her", "--param", "lambda", "--grid", "1e-8:1e3:log",
                   "--op", "significance"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "param,value,bound_lo,bound_hi\r");
  auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 100u);
  EXPECT_GE(rows.front()[1], 0.999);
  EXPECT_LE(rows.back()[1], 0.55);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i][1], rows[i - 1][1]);
}

TEST(Cli, ZetaBoundsSweep) {
  auto r = invoke({"sweep", "--model", "cm", "--param", "tau", "--grid", "2.1:10:lin:80", "--op",
                   "bounds"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 80u);
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_LE(rows[i][2], rows[i][3]);
    EXPECT_GT(rows[i][2], 0.8);
    if (rows[i][2] < rows[argmin][2]) argmin = i;
  }
  EXPECT_GE(rows.front()[2], 0.9);
  EXPECT_GE(rows.back()[2], 0.9);
  EXPECT_GE(rows[argmin][0], 2.0);
  EXPECT_LE(rows[argmin][0], 4.0);
}

TEST(Cli, ConfigErrorsExitTwoWithoutOutput) {
  fs::path out = temp_path("never.csv");
  fs::remove(out);
  auto bad_tau = invoke({"--output", out.string(), "sweep", "--model", "cm", "--param", "tau",
                         "--grid", "1.5:3", "--op", "bounds"});
  EXPECT_EQ(bad_tau.code, kExitConfig);
  EXPECT_NE(bad_tau.err.find("TauOutOfRange"), std::string::npos);
  EXPECT_FALSE(fs::exists(out));

  EXPECT_EQ(invoke({}).code, kExitConfig);
  EXPECT_EQ(invoke({"conjecture", "--dist", "poisson:1", "--format", "xml"}).code, kExitConfig);
  EXPECT_EQ(invoke({"conjecture", "--dist", "nonsense"}).code, kExitConfig);
  EXPECT_EQ(invoke({"limit-sample", "--model", "pam", "--delta", "-2"}).code, kExitConfig);
  EXPECT_EQ(invoke({"generate", "--model", "ier", "--lambda", "1"}).code, kExitConfig);
  EXPECT_EQ(invoke({"generate", "--config", "/nonexistent/config.json"}).code, kExitConfig);
  EXPECT_EQ(invoke({"sweep", "--model", "her", "--param", "tau", "--grid", "1:2"}).code, kExitConfig);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, OutputFileMatchesStdout) {
  fs::path out = temp_path("sig.csv");
  std::vector<std::string> args = {"analytic", "--op", "her-significance", "--lambda", "2"};
  auto plain = invoke(args);
  ASSERT_EQ(plain.code, 0);
  args.insert(args.begin(), {"--output", out.string()});
  auto to_file = invoke(args);
  ASSERT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(slurp(out), plain.out);
  fs::remove(out);
}

TEST(Cli, GenerateAndBiasRoundTrip) {
  fs::path cfg = temp_path("cfg.json");
  fs::path edges = temp_path("edges.txt");
  {
    std::ofstream f(cfg);
    f << R"({"model": "cm", "degrees": {"explicit": [1, 2, 1]}, "seed": 4})";
  }
  ASSERT_EQ(invoke({"--output", edges.string(), "generate", "--config", cfg.string()}).code, 0);
  auto r = invoke({"bias", "--input", edges.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"n\":3"), std::string::npos);
  auto csv = invoke({"bias", "--input", edges.string()});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "vertex,degree,bias\r");
  fs::remove(cfg);
  fs::remove(edges);
}

TEST(Cli, ThreadsDoNotChangeBytes) {
  const std::vector<std::vector<std::string>> commands = {
      {"limit-sample", "--model", "her", "--lambda", "1.5", "--samples", "9000"},
      {"compare", "--model", "cm", "--law", "zeta:3.5", "--n", "3000", "--replicates", "3",
       "--samples", "20000"},
      {"compare", "--model", "her", "--lambda", "1", "--n-grid", "100,1000", "--replicates", "2",
       "--samples", "5000"},
  };
  for (auto cmd : commands) {
    auto base = cmd;
    base.insert(base.begin(), {"--seed", "7", "--threads", "1"});
    auto ref = invoke(base);
    ASSERT_EQ(ref.code, 0) << ref.err;
    for (const char* t : {"2", "5"}) {
      auto other = cmd;
      other.insert(other.begin(), {"--seed", "7", "--threads", t});
      EXPECT_EQ(invoke(other).out, ref.out) << cmd[0] << " threads=" << t;
    }
    setenv("FBL_THREADS", "3", 1);
    auto env_cmd = cmd;
    env_cmd.insert(env_cmd.begin(), {"--seed", "7"});
    EXPECT_EQ(invoke(env_cmd).out, ref.out);
    unsetenv("FBL_THREADS");
  }
}

}  // namespace
}  // namespace fbl::cli
