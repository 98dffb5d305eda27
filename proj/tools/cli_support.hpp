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

#pragma once

// Command implementations and output formatting for the cvtele command-line
// tool. Everything here goes through the C API in cvtele/cvtele.h.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cvtele::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitComparisonFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Bad configuration or arguments; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A library call failed during computation; maps to kExitNumerical.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };
enum class Figure { Fig2, Fig3, Fig4 };

struct SweepConfig {
  std::optional<double> q_start;
  std::optional<double> q_end;
  std::optional<std::size_t> q_steps;
  std::optional<std::size_t> n_max;
  std::size_t dim = 40;
  std::optional<std::size_t> radial;
  std::optional<std::size_t> angular;
  std::optional<double> radius_mult;
  double tolerance = 1e-6;
  Format format = Format::Csv;
  std::string output_path;  // empty: standard output

  bool grid_overridden() const { return radial || angular || radius_mult; }
  bool sweep_overridden() const { return q_start || q_end || q_steps; }
};

/// Figure sweeps default to 101 points on [0, 0.99] plus q = 1.
std::vector<double> figure_q_points(const SweepConfig &cfg);

/// Verification defaults to q in {0, 0.3, 0.5, 0.7, 0.9}; rejects q_end > 0.9
/// unless a grid flag is given, and q_end >= 1 always.
std::vector<double> verify_q_points(const SweepConfig &cfg);

/// Uniform points q_start..q_end inclusive. Throws UsageError on bad ranges.
std::vector<double> linspace(double start, double end, std::size_t steps);

/// "re" or "re,im".
struct Complex {
  double re = 0.0;
  double im = 0.0;
};
Complex parse_complex(const std::string &text);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Nine significant digits, "%.9g".
std::string format_number(double value);

/// value rounded to what format_number prints.
double round_to_printed(double value);

void write_csv(const Table &table, std::ostream &out);

/// {"columns": [...], "arrays": {column: [values...]}}, columns in order.
void write_json(const Table &table, std::ostream &out);

void write_table(const Table &table, Format format, std::ostream &out);

Table figure_table(Figure which, const SweepConfig &cfg);

struct VerifyOutcome {
  Table report;
  bool all_passed = true;
};

/// Quadrature against closed forms at every verification q. Diagnostics for
/// failing comparisons go to diag.
VerifyOutcome verify_table(const SweepConfig &cfg, std::ostream &diag);

/// Joint table for one q and qubit, numeric next to closed form. An input qubit
/// off normalization by less than 1e-6 is rescaled with a warning on diag.
Table distribution_table(double q, Complex c_h, Complex c_v, const SweepConfig &cfg, std::ostream &diag);

}  // namespace cvtele::cli
