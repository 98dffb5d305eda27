// Copyright 2026 The cvtele Authors
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

#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cli_support.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

namespace cvtele::cli {
namespace {

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / "cvtele_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

int run_cli(const std::string &args) {
  const std::string command = std::string(CVTELE_CLI_PATH) + " " + args + " > " +
                              scratch("stdout.txt").string() + " 2> " + scratch("stderr.txt").string();
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<double> column(const Table &table, std::size_t c) {
  std::vector<double> out;
  for (const auto &row : table.rows) out.push_back(std::get<double>(row[c]));
  return out;
}

TEST(Sweep, FigurePointsDefault) {
  const auto q = figure_q_points(SweepConfig{});
  ASSERT_EQ(q.size(), 102u);
  EXPECT_EQ(q.front(), 0.0);
  EXPECT_NEAR(q[100], 0.99, 1e-15);
  EXPECT_EQ(q.back(), 1.0);
}

TEST(Sweep, Linspace) {
  const auto q = linspace(0.0, 0.9, 4);
  ASSERT_EQ(q.size(), 4u);
  EXPECT_NEAR(q[1], 0.3, 1e-15);
  EXPECT_EQ(q.back(), 0.9);
  EXPECT_THROW(linspace(0.5, 0.2, 3), UsageError);
  EXPECT_THROW(linspace(0.0, 0.5, 0), UsageError);
  EXPECT_THROW(linspace(-0.1, 0.5, 3), UsageError);
}

TEST(Sweep, VerifyPoints) {
  EXPECT_EQ(verify_q_points(SweepConfig{}), (std::vector<double>{0.0, 0.3, 0.5, 0.7, 0.9}));
  SweepConfig high;
  high.q_start = 0.0;
  high.q_end = 0.95;
  high.q_steps = 3;
  EXPECT_THROW(verify_q_points(high), UsageError);
  high.radial = 256;
  EXPECT_EQ(verify_q_points(high).size(), 3u);
  high.q_end = 1.0;
  EXPECT_THROW(verify_q_points(high), UsageError);
}

TEST(ParseComplex, Forms) {
  const auto a = parse_complex("0.5");
  EXPECT_EQ(a.re, 0.5);
  EXPECT_EQ(a.im, 0.0);
  const auto b = parse_complex("0.6,-0.8");
  EXPECT_EQ(b.re, 0.6);
  EXPECT_EQ(b.im, -0.8);
  EXPECT_THROW(parse_complex("abc"), UsageError);
  EXPECT_THROW(parse_complex("1,"), UsageError);
  EXPECT_THROW(parse_complex("1,2,3"), UsageError);
  EXPECT_THROW(parse_complex("nan"), UsageError);
}

TEST(Figures, Fig2Columns) {
  SweepConfig cfg;
  cfg.q_start = 0.0;
  cfg.q_end = 0.5;
  cfg.q_steps = 2;
  const Table t = figure_table(Figure::Fig2, cfg);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"q", "F_av", "F_1"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_NEAR(std::get<double>(t.rows[1][1]), 0.8, 1e-15);
  EXPECT_NEAR(std::get<double>(t.rows[1][2]), 10.0 / 11.0, 1e-15);
}

TEST(Figures, Fig3And4Endpoint) {
  SweepConfig cfg;
  const Table fig3 = figure_table(Figure::Fig3, cfg);
  EXPECT_EQ(fig3.columns, (std::vector<std::string>{"q", "P1", "P2", "P3", "P4"}));
  EXPECT_NEAR(std::get<double>(fig3.rows[0][1]), 0.1875, 1e-15);
  EXPECT_EQ(std::get<double>(fig3.rows.back()[1]), 1.0);
  EXPECT_EQ(std::get<double>(fig3.rows.back()[2]), 0.0);
  const Table fig4 = figure_table(Figure::Fig4, cfg);
  EXPECT_EQ(fig4.columns, (std::vector<std::string>{"q", "F_1", "F_2", "F_3", "F_4", "F_100"}));
  const auto &last = fig4.rows.back();
  EXPECT_EQ(std::get<double>(last[0]), 1.0);
  EXPECT_NEAR(std::get<double>(last[2]), 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(std::get<double>(last[3]), 7.0 / 9.0, 1e-15);
  for (double f : column(fig4, 1)) EXPECT_GE(f, 2.0 / 3.0 - 1e-15);
}

TEST(Output, JsonMatchesCsv) {
  SweepConfig cfg;
  const Table t = figure_table(Figure::Fig4, cfg);
  std::ostringstream csv, json;
  write_csv(t, csv);
  write_json(t, json);
  const auto doc = nlohmann::json::parse(json.str());
  ASSERT_EQ(doc["columns"].size(), t.columns.size());
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "q,F_1,F_2,F_3,F_4,F_100");
  std::size_t r = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (std::size_t c = 0; std::getline(cells, cell, ','); ++c) {
      const double from_json = doc["arrays"][t.columns[c]][r].get<double>();
      EXPECT_EQ(std::strtod(cell.c_str(), nullptr), round_to_printed(from_json)) << "row " << r << " col " << c;
    }
    ++r;
  }
  EXPECT_EQ(r, t.rows.size());
}

TEST(Output, FormatNumber) {
  EXPECT_EQ(format_number(0.8), "0.8");
  EXPECT_EQ(format_number(2.0 / 3.0), "0.666666667");
  EXPECT_EQ(round_to_printed(2.0 / 3.0), 0.666666667);
}

TEST(Verify, DefaultSweepPasses) {
  std::ostringstream diag;
  const auto outcome = verify_table(SweepConfig{}, diag);
  EXPECT_TRUE(outcome.all_passed) << diag.str();
  EXPECT_EQ(outcome.report.columns,
            (std::vector<std::string>{"q", "quantity", "max_abs_error", "tolerance", "status"}));
  for (const auto &row : outcome.report.rows) EXPECT_EQ(std::get<std::string>(row[4]), "pass");
}

TEST(Verify, StarvedTruncationIsNumericalError) {
  SweepConfig cfg;
  cfg.dim = 6;
  std::ostringstream diag;
  try {
    verify_table(cfg, diag);
    FAIL() << "expected a numerical error";
  } catch (const NumericalError &e) {
    EXPECT_NE(std::string(e.what()).find("Fock level 5"), std::string::npos) << e.what();
  }
}

TEST(Distribution, ClassicalHorizontal) {
  SweepConfig cfg;
  std::ostringstream diag;
  const Table t = distribution_table(0.0, {1.0, 0.0}, {0.0, 0.0}, cfg, diag);
  EXPECT_EQ(t.columns[0], "n_H");
  bool seen = false;
  for (const auto &row : t.rows) {
    if (std::get<std::int64_t>(row[0]) == 1 && std::get<std::int64_t>(row[1]) == 0) {
      EXPECT_NEAR(std::get<double>(row[2]), 0.125, 1e-6);
      EXPECT_NEAR(std::get<double>(row[3]), 0.125, 1e-15);
      seen = true;
    }
    EXPECT_LT(std::abs(std::get<double>(row[4])), 1e-6);
  }
  EXPECT_TRUE(seen);
  EXPECT_TRUE(diag.str().empty());
}

TEST(Distribution, SuperpositionFrame) {
  SweepConfig cfg;
  cfg.n_max = 4;
  std::ostringstream diag;
  const double s = std::sqrt(0.5);
  const Table t = distribution_table(0.5, {s, 0.0}, {0.0, s}, cfg, diag);
  EXPECT_EQ(t.columns[0], "n_parallel");
  EXPECT_EQ(t.rows.size(), 25u);
}

TEST(Distribution, Normalization) {
  SweepConfig cfg;
  cfg.n_max = 3;
  std::ostringstream diag;
  distribution_table(0.5, {1.0 + 2e-7, 0.0}, {0.0, 0.0}, cfg, diag);
  EXPECT_NE(diag.str().find("renormalizing"), std::string::npos);
  EXPECT_THROW(distribution_table(0.5, {1.0, 0.0}, {0.1, 0.0}, cfg, diag), UsageError);
}

TEST(EndToEnd, VerifyExitsCleanly) { EXPECT_EQ(run_cli("verify"), kExitOk); }

TEST(EndToEnd, TruncationExitCode) {
  EXPECT_EQ(run_cli("verify --dim 6"), kExitNumerical);
  EXPECT_NE(slurp(scratch("stderr.txt")).find("Fock level 5"), std::string::npos);
}

TEST(EndToEnd, UsageExitCodes) {
  EXPECT_EQ(run_cli("verify --q-end 0.99"), kExitUsage);
  EXPECT_EQ(run_cli("figure fig9"), kExitUsage);
  EXPECT_EQ(run_cli("distribution --ch 1 --cv 1"), kExitUsage);
  EXPECT_EQ(run_cli("bogus"), kExitUsage);
}

TEST(EndToEnd, OutputsAreByteIdentical) {
  for (const std::string fmt : {"csv", "json"}) {
    const auto a = scratch("a." + fmt);
    const auto b = scratch("b." + fmt);
    ASSERT_EQ(run_cli("figure fig4 --format " + fmt + " --output " + a.string()), kExitOk);
    ASSERT_EQ(run_cli("figure fig4 --format " + fmt + " --output " + b.string()), kExitOk);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
  }
  const auto c = scratch("c.csv");
  const auto d = scratch("d.csv");
  ASSERT_EQ(run_cli("distribution --q 0.3 --ch 0.6 --cv 0,0.8 --nmax 4 --output " + c.string()), kExitOk);
  ASSERT_EQ(run_cli("distribution --q 0.3 --ch 0.6 --cv 0,0.8 --nmax 4 --output " + d.string()), kExitOk);
  EXPECT_EQ(slurp(c), slurp(d));
}

}  // namespace
}  // namespace cvtele::cli
