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

#include "cli_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <sstream>

#include "cvtele/cvtele.h"
#include "json.hpp"

namespace cvtele::cli {
namespace {

struct ContextDeleter {
  void operator()(cvt_context *p) const { cvt_context_destroy(p); }
};
struct DistributionDeleter {
  void operator()(cvt_distribution *p) const { cvt_distribution_destroy(p); }
};
struct JointDeleter {
  void operator()(cvt_joint *p) const { cvt_joint_destroy(p); }
};
struct FidelitiesDeleter {
  void operator()(cvt_fidelities *p) const { cvt_fidelities_destroy(p); }
};
using ContextPtr = std::unique_ptr<cvt_context, ContextDeleter>;
using DistributionPtr = std::unique_ptr<cvt_distribution, DistributionDeleter>;
using JointPtr = std::unique_ptr<cvt_joint, JointDeleter>;
using FidelitiesPtr = std::unique_ptr<cvt_fidelities, FidelitiesDeleter>;

void check(cvt_status status, const std::string &context) {
  if (status == CVT_OK) return;
  const std::string message = context + ": " + cvt_last_error();
  switch (status) {
    case CVT_ERROR_TRUNCATION:
    case CVT_ERROR_CONVERGENCE:
    case CVT_ERROR_UNDEFINED_FIDELITY:
    case CVT_ERROR_INTERNAL:
      throw NumericalError(message);
    default:
      throw UsageError(message);
  }
}

std::string q_label(double q) { return "q=" + format_number(q); }

double closed(cvt_status (*fn)(double, size_t, double *), double q, size_t n) {
  double v = 0.0;
  check(fn(q, n, &v), q_label(q));
  return v;
}

double closed_joint(double q, size_t a, size_t b) {
  double v = 0.0;
  check(cvt_joint_p(q, a, b, &v), q_label(q));
  return v;
}

ContextPtr make_context(const SweepConfig &cfg) {
  cvt_context *raw = nullptr;
  check(cvt_context_create(cfg.dim, 1e-9, &raw), "context");
  ContextPtr ctx(raw);
  check(cvt_context_set_grid(ctx.get(), cfg.radial.value_or(64), cfg.angular.value_or(32),
                             cfg.radius_mult.value_or(6.0)),
        "grid");
  return ctx;
}

std::size_t default_n_max(const SweepConfig &cfg) {
  if (cfg.n_max) return *cfg.n_max;
  return cfg.dim > 16 ? 10 : (cfg.dim > 6 ? cfg.dim - 6 : 0);
}

// One verification row per (q, quantity).
struct Comparison {
  std::string quantity;
  double max_error = 0.0;
  double tolerance = 0.0;

  void update(double numeric, double exact) { max_error = std::max(max_error, std::abs(numeric - exact)); }
  bool passed() const { return max_error <= tolerance; }
};

}  // namespace

std::vector<double> linspace(double start, double end, std::size_t steps) {
  if (!(start >= 0.0 && end <= 1.0 && start <= end)) {
    throw UsageError("q range must satisfy 0 <= q_start <= q_end <= 1");
  }
  if (steps == 0) throw UsageError("q_steps must be positive");
  if (steps == 1) return {start};
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = start + (end - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  out.back() = end;
  return out;
}

std::vector<double> figure_q_points(const SweepConfig &cfg) {
  if (!cfg.sweep_overridden()) {
    std::vector<double> out = linspace(0.0, 0.99, 101);
    out.push_back(1.0);
    return out;
  }
  return linspace(cfg.q_start.value_or(0.0), cfg.q_end.value_or(0.99), cfg.q_steps.value_or(101));
}

std::vector<double> verify_q_points(const SweepConfig &cfg) {
  std::vector<double> out = cfg.sweep_overridden()
                                ? linspace(cfg.q_start.value_or(0.0), cfg.q_end.value_or(0.9), cfg.q_steps.value_or(5))
                                : std::vector<double>{0.0, 0.3, 0.5, 0.7, 0.9};
  const double top = out.back();
  if (top >= 1.0) throw UsageError("verify needs q_end < 1; q = 1 has no numerical counterpart");
  if (top > 0.9 && !cfg.grid_overridden()) {
    throw UsageError("q_end = " + format_number(top) +
                     " exceeds 0.9; pass --radial/--angular/--radius-mult to choose a denser grid");
  }
  return out;
}

Complex parse_complex(const std::string &text) {
  const auto parse_real = [&](const std::string &s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception &) {
      throw UsageError("cannot parse complex amplitude '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("cannot parse complex amplitude '" + text + "'");
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match table columns");
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

double round_to_printed(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

void write_csv(const Table &table, std::ostream &out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto &row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_number(v);
            } else {
              out << v;
            }
          },
          row[c]);
    }
    out << '\n';
  }
}

void write_json(const Table &table, std::ostream &out) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  nlohmann::ordered_json arrays = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    nlohmann::ordered_json column = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
      std::visit(
          [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              column.push_back(round_to_printed(v));
            } else {
              column.push_back(v);
            }
          },
          row[c]);
    }
    arrays[table.columns[c]] = std::move(column);
  }
  doc["arrays"] = std::move(arrays);
  out << doc.dump(2) << '\n';
}

void write_table(const Table &table, Format format, std::ostream &out) {
  if (format == Format::Json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

Table figure_table(Figure which, const SweepConfig &cfg) {
  const std::vector<double> qs = figure_q_points(cfg);
  Table table;
  switch (which) {
    case Figure::Fig2:
      table.columns = {"q", "F_av", "F_1"};
      for (double q : qs) {
        double f_av = 0.0;
        double f_one = 0.0;
        check(cvt_f_average(q, &f_av), q_label(q));
        check(cvt_f_one(q, &f_one), q_label(q));
        table.add_row({q, f_av, f_one});
      }
      break;
    case Figure::Fig3:
      table.columns = {"q", "P1", "P2", "P3", "P4"};
      for (double q : qs) {
        std::vector<Cell> row{q};
        for (std::size_t n = 1; n <= 4; ++n) row.emplace_back(closed(cvt_total_p, q, n));
        table.add_row(std::move(row));
      }
      break;
    case Figure::Fig4:
      table.columns = {"q", "F_1", "F_2", "F_3", "F_4", "F_100"};
      for (double q : qs) {
        std::vector<Cell> row{q};
        for (std::size_t n : {1, 2, 3, 4, 100}) row.emplace_back(closed(cvt_f_clone, q, n));
        table.add_row(std::move(row));
      }
      break;
  }
  return table;
}

VerifyOutcome verify_table(const SweepConfig &cfg, std::ostream &diag) {
  const std::vector<double> qs = verify_q_points(cfg);
  if (!(cfg.tolerance > 0.0)) throw UsageError("tolerance must be positive");
  const std::size_t n_max = default_n_max(cfg);
  const double prob_tol = cfg.tolerance;
  const double stat_tol = 10.0 * cfg.tolerance;
  ContextPtr ctx = make_context(cfg);

  VerifyOutcome outcome;
  outcome.report.columns = {"q", "quantity", "max_abs_error", "tolerance", "status"};
  for (double q : qs) {
    std::vector<Comparison> rows;

    for (int input : {1, 0}) {
      cvt_distribution *raw = nullptr;
      check(cvt_single_mode_distribution(ctx.get(), q, input, n_max, &raw), q_label(q));
      DistributionPtr dist(raw);
      Comparison cmp{input == 1 ? "p1" : "p0", 0.0, prob_tol};
      for (std::size_t n = 0; n <= n_max; ++n) {
        double p = 0.0;
        check(cvt_distribution_probability(dist.get(), n, &p), q_label(q));
        cmp.update(p, closed(input == 1 ? cvt_p1 : cvt_p0, q, n));
      }
      rows.push_back(cmp);
    }

    if (n_max >= 1) {
      cvt_joint *raw_joint = nullptr;
      check(cvt_joint_distribution(ctx.get(), q, {1.0, 0.0}, {0.0, 0.0}, n_max, &raw_joint), q_label(q));
      JointPtr joint(raw_joint);
      Comparison joint_cmp{"joint", 0.0, prob_tol};
      for (std::size_t a = 0; a <= n_max; ++a) {
        for (std::size_t b = 0; b <= n_max; ++b) {
          double p = 0.0;
          check(cvt_joint_probability(joint.get(), a, b, &p), q_label(q));
          joint_cmp.update(p, closed_joint(q, a, b));
        }
      }
      rows.push_back(joint_cmp);

      cvt_fidelities *raw_fid = nullptr;
      check(cvt_fidelities_from_joint(joint.get(), n_max, &raw_fid), q_label(q));
      FidelitiesPtr fid(raw_fid);
      cvt_fidelity_summary summary{};
      check(cvt_fidelities_summary_get(fid.get(), &summary), q_label(q));

      Comparison total_cmp{"P(N)", 0.0, prob_tol};
      for (std::size_t n = 0; n <= n_max; ++n) {
        double p = 0.0;
        check(cvt_fidelities_total_probability(fid.get(), n, &p), q_label(q));
        total_cmp.update(p, closed(cvt_total_p, q, n));
      }
      rows.push_back(total_cmp);

      double mean_h = 0.0;
      double mean_v = 0.0;
      check(cvt_mean_photon_numbers(q, &mean_h, &mean_v), q_label(q));
      Comparison mean_h_cmp{"mean_nH", 0.0, stat_tol};
      mean_h_cmp.update(summary.mean_parallel, mean_h);
      Comparison mean_v_cmp{"mean_nV", 0.0, stat_tol};
      mean_v_cmp.update(summary.mean_perpendicular, mean_v);
      rows.push_back(mean_h_cmp);
      rows.push_back(mean_v_cmp);

      double f_av = 0.0;
      double f_one = 0.0;
      check(cvt_f_average(q, &f_av), q_label(q));
      check(cvt_f_one(q, &f_one), q_label(q));
      Comparison f_av_cmp{"F_av", 0.0, stat_tol};
      f_av_cmp.update(summary.f_average, f_av);
      Comparison f_one_cmp{"F_1", 0.0, stat_tol};
      f_one_cmp.update(summary.f_one, f_one);
      rows.push_back(f_av_cmp);
      rows.push_back(f_one_cmp);

      if (n_max >= 2) {
        Comparison clone_cmp{"F_N", 0.0, stat_tol};
        for (std::size_t n = 2; n <= n_max; ++n) {
          double f = 0.0;
          check(cvt_fidelities_clone(fid.get(), n, &f), q_label(q));
          clone_cmp.update(f, closed(cvt_f_clone, q, n));
        }
        rows.push_back(clone_cmp);
      }
    }

    for (const Comparison &cmp : rows) {
      const bool ok = cmp.passed();
      if (!ok) {
        outcome.all_passed = false;
        diag << "verify: " << q_label(q) << " " << cmp.quantity << " error " << format_number(cmp.max_error)
             << " exceeds tolerance " << format_number(cmp.tolerance) << '\n';
      }
      outcome.report.add_row({q, cmp.quantity, cmp.max_error, cmp.tolerance, std::string(ok ? "pass" : "FAIL")});
    }
  }
  return outcome;
}

Table distribution_table(double q, Complex c_h, Complex c_v, const SweepConfig &cfg, std::ostream &diag) {
  const double norm = c_h.re * c_h.re + c_h.im * c_h.im + c_v.re * c_v.re + c_v.im * c_v.im;
  const double deviation = std::abs(norm - 1.0);
  if (deviation > 1e-6) {
    throw UsageError("qubit amplitudes have |c_H|^2 + |c_V|^2 = " + format_number(norm) + ", expected 1");
  }
  if (deviation > 1e-12) {
    diag << "distribution: renormalizing qubit (|c_H|^2 + |c_V|^2 = " << format_number(norm) << ")\n";
    const double s = 1.0 / std::sqrt(norm);
    c_h = {c_h.re * s, c_h.im * s};
    c_v = {c_v.re * s, c_v.im * s};
  }
  const std::size_t n_max = default_n_max(cfg);
  ContextPtr ctx = make_context(cfg);

  cvt_joint *raw = nullptr;
  check(cvt_joint_distribution(ctx.get(), q, {c_h.re, c_h.im}, {c_v.re, c_v.im}, n_max, &raw), q_label(q));
  JointPtr joint(raw);
  cvt_joint_summary summary{};
  check(cvt_joint_summary_get(joint.get(), &summary), q_label(q));

  Table table;
  if (summary.frame == CVT_FRAME_HORIZONTAL_VERTICAL) {
    table.columns = {"n_H", "n_V", "numeric", "closed_form", "difference"};
  } else {
    table.columns = {"n_parallel", "n_perpendicular", "numeric", "closed_form", "difference"};
  }
  for (std::size_t a = 0; a <= n_max; ++a) {
    for (std::size_t b = 0; b <= n_max; ++b) {
      double numeric = 0.0;
      check(cvt_joint_probability(joint.get(), a, b, &numeric), q_label(q));
      const double exact = summary.parallel_axis == 0 ? closed_joint(q, a, b) : closed_joint(q, b, a);
      table.add_row({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), numeric, exact, numeric - exact});
    }
  }
  return table;
}

}  // namespace cvtele::cli
