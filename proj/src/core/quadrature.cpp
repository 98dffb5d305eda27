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

#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>

#include "core/error.hpp"

namespace cvtele::quadrature {
namespace {

using fock::Amplitude;
using fock::FockVector;

std::string format_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void check_n_max(std::size_t n_max, const TruncationConfig &cfg) {
  if (n_max + 5 >= cfg.dim) {
    fail(ErrorCode::InvalidArgument, "n_max = " + std::to_string(n_max) + " must be below dim - 5 = " +
                                         std::to_string(cfg.dim) + " - 5");
  }
}

// Integrated |<k|T_q(beta)|m>|^2 for every represented level k.
std::vector<double> integrate_levels(Squeezing q, std::size_t input_photons, const GridSpec &grid_spec,
                                     const TruncationConfig &cfg) {
  const QuadratureGrid grid = QuadratureGrid::build(grid_spec, q);
  const std::size_t angles = grid_spec.use_angular_symmetry ? 1 : grid.angular_count();
  const double angular_weight = grid_spec.use_angular_symmetry ? 2.0 * std::numbers::pi : grid.angular_weight();

  std::vector<double> levels(cfg.dim, 0.0);
  std::vector<double> ring(cfg.dim);
  for (const RadialNode &node : grid.radial_nodes()) {
    std::fill(ring.begin(), ring.end(), 0.0);
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid.angular_count());
      const FockVector column = teleport::transfer_column(q, std::polar(node.radius, theta), input_photons, cfg);
      for (std::size_t k = 0; k < cfg.dim; ++k) ring[k] += std::norm(column[k]);
    }
    for (std::size_t k = 0; k < cfg.dim; ++k) levels[k] += node.weight * angular_weight * ring[k];
  }
  return levels;
}

void check_tail(double tail_mass, const TruncationConfig &cfg, const std::string &context) {
  if (tail_mass > cfg.tail_tolerance) {
    fail(ErrorCode::TruncationOverflow, context + ": probability " + format_g(tail_mass) + " on Fock level " +
                                            std::to_string(cfg.dim - 1) + " exceeds tail tolerance " +
                                            format_g(cfg.tail_tolerance) + "; increase dim");
  }
}

}  // namespace

void GridSpec::validate() const {
  if (radial_nodes < 1) fail(ErrorCode::InvalidArgument, "grid needs at least one radial node");
  if (angular_nodes < 4 || angular_nodes % 2 != 0) {
    fail(ErrorCode::InvalidArgument, "angular node count must be even and at least 4, got " +
                                         std::to_string(angular_nodes));
  }
  if (!(radius_multiplier > 0.0) || !std::isfinite(radius_multiplier)) {
    fail(ErrorCode::InvalidArgument, "radius multiplier must be positive");
  }
}

GridSpec GridSpec::refined() const {
  GridSpec g = *this;
  g.radial_nodes *= 2;
  return g;
}

QuadratureGrid::QuadratureGrid(std::vector<RadialNode> radial, std::size_t angular_count, double radius_cut)
    : radial_(std::move(radial)), angular_count_(angular_count), radius_cut_(radius_cut) {}

double QuadratureGrid::angular_weight() const noexcept {
  return 2.0 * std::numbers::pi / static_cast<double>(angular_count_);
}

QuadratureGrid QuadratureGrid::build(const GridSpec &grid_spec, Squeezing q) {
  grid_spec.validate();
  q.require_numeric();
  const double qv = q.value();
  const double radius_cut = grid_spec.radius_multiplier / std::sqrt(1.0 - qv * qv);
  const GaussLegendreRule rule = gauss_legendre(grid_spec.radial_nodes);
  std::vector<RadialNode> radial;
  radial.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = 0.5 * radius_cut * (rule.nodes[i] + 1.0);
    radial.push_back({r, 0.5 * radius_cut * rule.weights[i] * r});
  }
  return QuadratureGrid(std::move(radial), grid_spec.angular_nodes, radius_cut);
}

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "Gauss-Legendre rule needs n >= 1");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p_prev = 1.0;
      double p = x;
      for (std::size_t j = 2; j <= n; ++j) {
        const double jd = static_cast<double>(j);
        const double p_next = ((2.0 * jd - 1.0) * x * p - (jd - 1.0) * p_prev) / jd;
        p_prev = p;
        p = p_next;
      }
      derivative = nd * (x * p - p_prev) / (x * x - 1.0);
      const double step = p / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    // Ascending order: -x first.
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

PhotonDistribution numeric_single_mode_distribution(Squeezing q, std::size_t input_photons, std::size_t n_max,
                                                    const GridSpec &grid, const TruncationConfig &cfg) {
  q.require_numeric();
  cfg.validate();
  grid.validate();
  if (input_photons > 1) fail(ErrorCode::InvalidArgument, "input must be |0> or |1>");
  check_n_max(n_max, cfg);

  const GridSpec fine_grid = grid.refined();
  const std::vector<double> coarse = integrate_levels(q, input_photons, grid, cfg);
  const std::vector<double> fine = integrate_levels(q, input_photons, fine_grid, cfg);

  const std::string context = "q=" + format_g(q.value()) + " input |" + std::to_string(input_photons) + ">";

  PhotonDistribution out;
  std::size_t worst_level = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double shift = std::abs(fine[n] - coarse[n]);
    if (shift > out.grid_estimate_error) {
      out.grid_estimate_error = shift;
      worst_level = n;
    }
  }
  if (out.grid_estimate_error > kConvergenceLimit) {
    fail(ErrorCode::Convergence,
         context + ": radial nodes " + std::to_string(grid.radial_nodes) + " -> " +
             std::to_string(fine_grid.radial_nodes) + " moved p[" + std::to_string(worst_level) + "] from " +
             format_g(coarse[worst_level]) + " to " + format_g(fine[worst_level]) + " (shift " +
             format_g(out.grid_estimate_error) + ", limit " + format_g(kConvergenceLimit) + ")");
  }
  check_tail(fine[cfg.dim - 1], cfg, context);

  out.probabilities.assign(fine.begin(), fine.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  double captured = 0.0;
  for (double p : out.probabilities) captured += p;
  out.residual_mass = std::max(0.0, 1.0 - captured);
  for (std::size_t k = 0; k < cfg.dim; ++k) out.mean_photons += static_cast<double>(k) * fine[k];
  return out;
}

JointDistribution numeric_joint_distribution(Squeezing q, const PolarizationQubit &qubit, std::size_t n_max,
                                             const GridSpec &grid, const TruncationConfig &cfg) {
  const PhotonDistribution parallel = numeric_single_mode_distribution(q, 1, n_max, grid, cfg);
  const PhotonDistribution perpendicular = numeric_single_mode_distribution(q, 0, n_max, grid, cfg);

  JointDistribution out;
  out.n_max = n_max;
  if (qubit.is_vertical()) {
    out.frame = JointFrame::HorizontalVertical;
    out.parallel_axis = 1;
  } else {
    out.frame = qubit.is_horizontal() ? JointFrame::HorizontalVertical : JointFrame::ParallelPerpendicular;
    out.parallel_axis = 0;
  }

  const std::size_t side = n_max + 1;
  out.table.assign(side * side, 0.0);
  double captured = 0.0;
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      const std::size_t n_par = out.parallel_axis == 0 ? a : b;
      const std::size_t n_perp = out.parallel_axis == 0 ? b : a;
      const double p = parallel.probabilities[n_par] * perpendicular.probabilities[n_perp];
      out.table[a * side + b] = p;
      captured += p;
    }
  }
  out.mean_parallel = parallel.mean_photons;
  out.mean_perpendicular = perpendicular.mean_photons;
  out.residual_mass = std::max(0.0, 1.0 - captured);
  out.grid_estimate_error = parallel.grid_estimate_error + perpendicular.grid_estimate_error;
  return out;
}

FidelityReport numeric_fidelities(const JointDistribution &joint, std::size_t n_max) {
  if (n_max < 1 || n_max > joint.n_max) {
    fail(ErrorCode::InvalidArgument, "fidelity range n_max = " + std::to_string(n_max) + " must lie in [1, " +
                                         std::to_string(joint.n_max) + "]");
  }
  FidelityReport out;
  out.n_max = n_max;
  out.total_probability.assign(n_max + 1, 0.0);
  out.clone_fidelity.assign(n_max, 0.0);
  for (std::size_t total = 0; total <= n_max; ++total) {
    double sector = 0.0;
    double parallel_weight = 0.0;
    for (std::size_t a = 0; a <= total; ++a) {
      const double p = joint.at(a, total - a);
      const std::size_t n_par = joint.parallel_axis == 0 ? a : total - a;
      sector += p;
      parallel_weight += static_cast<double>(n_par) * p;
    }
    out.total_probability[total] = sector;
    if (total == 0) continue;
    if (sector < kMinSectorProbability) {
      fail(ErrorCode::UndefinedFidelity, "P(" + std::to_string(total) + ") = " + format_g(sector) +
                                             " is too small to condition on");
    }
    out.clone_fidelity[total - 1] = parallel_weight / (static_cast<double>(total) * sector);
  }
  out.f_one = out.clone_fidelity[0];
  out.mean_parallel = joint.mean_parallel;
  out.mean_perpendicular = joint.mean_perpendicular;
  out.f_average = joint.mean_parallel / (joint.mean_parallel + joint.mean_perpendicular);
  return out;
}

QubitStatistics numeric_qubit_statistics_4d(Squeezing q, const PolarizationQubit &qubit, std::size_t n_max,
                                            const GridSpec &grid_spec, const TruncationConfig &cfg) {
  q.require_numeric();
  cfg.validate();
  grid_spec.validate();
  check_n_max(n_max, cfg);
  if (n_max < 1) fail(ErrorCode::InvalidArgument, "n_max must be at least 1");

  struct PlaneNode {
    double weight;
    FockVector one;
    FockVector vacuum;
  };
  const QuadratureGrid grid = QuadratureGrid::build(grid_spec, q);
  std::vector<PlaneNode> plane;
  for (const RadialNode &node : grid.radial_nodes()) {
    for (std::size_t j = 0; j < grid.angular_count(); ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid.angular_count());
      const Amplitude beta = std::polar(node.radius, theta);
      plane.push_back({node.weight * grid.angular_weight(), teleport::transfer_column(q, beta, 1, cfg),
                       teleport::transfer_column(q, beta, 0, cfg)});
    }
  }

  const std::size_t d = cfg.dim;
  const Amplitude c_h = qubit.c_h();
  const Amplitude c_v = qubit.c_v();
  const double w_h = std::norm(c_h);
  const double w_v = std::norm(c_v);
  const Amplitude coherence = c_h * std::conj(c_v);

  // Per photon-number sector N: probability and <n_parallel>.
  std::vector<double> sector(d * 2, 0.0);
  std::vector<double> sector_parallel(d * 2, 0.0);
  double tail = 0.0;
  std::vector<Amplitude> psi(d * d);
  for (const PlaneNode &h : plane) {
    for (const PlaneNode &v : plane) {
      const double w = h.weight * v.weight;
      for (std::size_t a = 0; a < d; ++a) {
        const Amplitude first = c_h * h.one[a];
        const Amplitude second = c_v * h.vacuum[a];
        for (std::size_t b = 0; b < d; ++b) psi[a * d + b] = first * v.vacuum[b] + second * v.one[b];
      }
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          const Amplitude amp = psi[a * d + b];
          const double p = std::norm(amp);
          // <a_H^dag a_V> contribution: conj(psi(a+1, b-1)) sqrt((a+1) b) psi(a, b)
          Amplitude hop{0.0, 0.0};
          if (b >= 1 && a + 1 < d) {
            hop = std::conj(psi[(a + 1) * d + (b - 1)]) *
                  std::sqrt(static_cast<double>(a + 1) * static_cast<double>(b)) * amp;
          }
          const double n_par = w_h * static_cast<double>(a) * p + w_v * static_cast<double>(b) * p +
                               2.0 * std::real(coherence * hop);
          sector[a + b] += w * p;
          sector_parallel[a + b] += w * n_par;
        }
        tail += w * std::norm(psi[a * d + (d - 1)]) + w * std::norm(psi[(d - 1) * d + a]);
      }
    }
  }
  check_tail(tail, cfg, "q=" + format_g(q.value()) + " two-mode quadrature");

  QubitStatistics out;
  FidelityReport &report = out.report;
  report.n_max = n_max;
  report.total_probability.assign(sector.begin(), sector.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  report.clone_fidelity.assign(n_max, 0.0);
  for (std::size_t total = 1; total <= n_max; ++total) {
    if (sector[total] < kMinSectorProbability) {
      fail(ErrorCode::UndefinedFidelity, "P(" + std::to_string(total) + ") = " + format_g(sector[total]) +
                                             " is too small to condition on");
    }
    report.clone_fidelity[total - 1] = sector_parallel[total] / (static_cast<double>(total) * sector[total]);
  }
  report.f_one = report.clone_fidelity[0];
  double mean_total = 0.0;
  for (std::size_t total = 0; total < sector.size(); ++total) {
    out.normalization += sector[total];
    mean_total += static_cast<double>(total) * sector[total];
    report.mean_parallel += sector_parallel[total];
  }
  report.mean_perpendicular = mean_total - report.mean_parallel;
  report.f_average = report.mean_parallel / mean_total;
  return out;
}

}  // namespace cvtele::quadrature
