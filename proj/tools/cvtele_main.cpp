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

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "cvtele/cvtele.h"

namespace {

using cvtele::cli::SweepConfig;

void add_sweep_flags(CLI::App &cmd, SweepConfig &cfg) {
  cmd.add_option_function<double>("--q-start", [&](double v) { cfg.q_start = v; }, "First q of the sweep");
  cmd.add_option_function<double>("--q-end", [&](double v) { cfg.q_end = v; }, "Last q of the sweep (inclusive)");
  cmd.add_option_function<std::size_t>("--q-steps", [&](std::size_t v) { cfg.q_steps = v; }, "Number of q points");
}

void add_numeric_flags(CLI::App &cmd, SweepConfig &cfg) {
  cmd.add_option_function<std::size_t>("--nmax", [&](std::size_t v) { cfg.n_max = v; },
                                       "Largest reported photon number (default 10)");
  cmd.add_option("--dim", cfg.dim, "Fock truncation dimension")->capture_default_str();
  cmd.add_option_function<std::size_t>("--radial", [&](std::size_t v) { cfg.radial = v; },
                                       "Gauss-Legendre radial nodes per plane (default 64)");
  cmd.add_option_function<std::size_t>("--angular", [&](std::size_t v) { cfg.angular = v; },
                                       "Angular nodes per plane, even, >= 4 (default 32)");
  cmd.add_option_function<double>("--radius-mult", [&](double v) { cfg.radius_mult = v; },
                                  "Radial cut R = mult / sqrt(1 - q^2) (default 6)");
}

void add_output_flags(CLI::App &cmd, SweepConfig &cfg) {
  static const std::map<std::string, cvtele::cli::Format> formats{{"csv", cvtele::cli::Format::Csv},
                                                                  {"json", cvtele::cli::Format::Json}};
  cmd.add_option("--format", cfg.format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd.add_option("--output", cfg.output_path, "Output file (default: standard output)");
}

void emit(const cvtele::cli::Table &table, const SweepConfig &cfg) {
  if (cfg.output_path.empty()) {
    cvtele::cli::write_table(table, cfg.format, std::cout);
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw cvtele::cli::UsageError("cannot open output file '" + cfg.output_path + "'");
  cvtele::cli::write_table(table, cfg.format, out);
  out.flush();
  if (!out) throw cvtele::cli::UsageError("failed writing output file '" + cfg.output_path + "'");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Continuous-variable teleportation of single-photon polarization qubits"};
  app.set_version_flag("--version", std::string(cvt_version()));
  app.require_subcommand(1);

  SweepConfig cfg;

  auto *figure = app.add_subcommand("figure", "Emit closed-form figure data (fig2, fig3, fig4)");
  std::string which;
  figure->add_option("which", which, "fig2: F_av, F_1; fig3: P(1..4); fig4: F_1..F_4, F_100")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
  add_sweep_flags(*figure, cfg);
  add_output_flags(*figure, cfg);

  auto *verify = app.add_subcommand("verify", "Compare quadrature against closed forms");
  add_sweep_flags(*verify, cfg);
  add_numeric_flags(*verify, cfg);
  verify->add_option("--tolerance", cfg.tolerance,
                     "Probability tolerance; means and fidelities use 10x this value")
      ->capture_default_str();
  add_output_flags(*verify, cfg);

  auto *distribution = app.add_subcommand("distribution", "Joint output photon table for one qubit");
  double q = 0.5;
  std::string c_h_text = "1";
  std::string c_v_text = "0";
  distribution->add_option("--q", q, "Squeezing parameter, 0 <= q < 1")->capture_default_str();
  distribution->add_option("--ch", c_h_text, "Horizontal amplitude as re[,im]")->capture_default_str();
  distribution->add_option("--cv", c_v_text, "Vertical amplitude as re[,im]")->capture_default_str();
  add_numeric_flags(*distribution, cfg);
  add_output_flags(*distribution, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? cvtele::cli::kExitOk : cvtele::cli::kExitUsage;
  }

  try {
    if (figure->parsed()) {
      const auto kind = which == "fig2"   ? cvtele::cli::Figure::Fig2
                        : which == "fig3" ? cvtele::cli::Figure::Fig3
                                          : cvtele::cli::Figure::Fig4;
      emit(cvtele::cli::figure_table(kind, cfg), cfg);
      return cvtele::cli::kExitOk;
    }
    if (verify->parsed()) {
      const auto outcome = cvtele::cli::verify_table(cfg, std::cerr);
      emit(outcome.report, cfg);
      std::cerr << "verify: " << (outcome.all_passed ? "all comparisons within tolerance" : "comparisons FAILED")
                << '\n';
      return outcome.all_passed ? cvtele::cli::kExitOk : cvtele::cli::kExitComparisonFailed;
    }
    const auto c_h = cvtele::cli::parse_complex(c_h_text);
    const auto c_v = cvtele::cli::parse_complex(c_v_text);
    emit(cvtele::cli::distribution_table(q, c_h, c_v, cfg, std::cerr), cfg);
    return cvtele::cli::kExitOk;
  } catch (const cvtele::cli::UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return cvtele::cli::kExitUsage;
  } catch (const cvtele::cli::NumericalError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return cvtele::cli::kExitNumerical;
  }
}
