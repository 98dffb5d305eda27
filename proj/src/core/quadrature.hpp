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

// Phase-space quadrature of teleportation output statistics. Integrates the
// conditional output over all measurement outcomes beta and yields numerical
// photon-number distributions and fidelities, independent of the analytic
// expressions in closed_forms.hpp.

#include <cstddef>
#include <span>
#include <vector>

#include "core/teleport.hpp"

namespace cvtele::quadrature {

using teleport::PolarizationQubit;
using teleport::Squeezing;
using fock::TruncationConfig;

/// Largest shift of any reported probability tolerated when the radial node
/// count is doubled.
inline constexpr double kConvergenceLimit = 1e-6;

/// Fidelities are undefined for photon-number sectors lighter than this.
inline constexpr double kMinSectorProbability = 1e-14;

/// Polar product rule per beta-plane: Gauss-Legendre in |beta| on [0, R] with
/// R = radius_multiplier / sqrt(1 - q^2), uniform trapezoid in arg(beta).
struct GridSpec {
  std::size_t radial_nodes = 64;
  std::size_t angular_nodes = 32;
  double radius_multiplier = 6.0;
  /// Evaluate a single angle and weight it by 2 pi. Only valid for Fock
  /// inputs, whose integrands are rotation invariant.
  bool use_angular_symmetry = false;

  void validate() const;
  GridSpec refined() const;
};

struct RadialNode {
  double radius;
  /// Gauss-Legendre weight times the polar Jacobian r.
  double weight;
};

class QuadratureGrid {
 public:
  static QuadratureGrid build(const GridSpec &grid_spec, Squeezing q);

  std::span<const RadialNode> radial_nodes() const noexcept { return radial_; }
  std::size_t angular_count() const noexcept { return angular_count_; }
  double radius_cut() const noexcept { return radius_cut_; }
  double angular_weight() const noexcept;

 private:
  QuadratureGrid(std::vector<RadialNode> radial, std::size_t angular_count, double radius_cut);

  std::vector<RadialNode> radial_;
  std::size_t angular_count_;
  double radius_cut_;
};

struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
GaussLegendreRule gauss_legendre(std::size_t n);

/// Numerical single-mode photon distribution.
struct PhotonDistribution {
  std::vector<double> probabilities;  // n = 0..n_max
  double mean_photons = 0.0;          // over every represented level
  double residual_mass = 0.0;         // 1 - sum(probabilities), clamped at 0
  double grid_estimate_error = 0.0;   // max shift under radial refinement
};

enum class JointFrame {
  HorizontalVertical,
  ParallelPerpendicular,
};

/// Numerical joint photon distribution of the two output modes.
struct JointDistribution {
  std::size_t n_max = 0;
  JointFrame frame = JointFrame::HorizontalVertical;
  /// Which table index counts photons polarized like the input (0 or 1).
  std::size_t parallel_axis = 0;
  std::vector<double> table;  // (n_max + 1)^2, row-major in the first index
  double mean_parallel = 0.0;
  double mean_perpendicular = 0.0;
  double residual_mass = 0.0;
  double grid_estimate_error = 0.0;

  double at(std::size_t first, std::size_t second) const { return table[first * (n_max + 1) + second]; }
};

struct FidelityReport {
  std::size_t n_max = 0;
  double f_average = 0.0;
  double f_one = 0.0;
  std::vector<double> total_probability;  // N = 0..n_max
  std::vector<double> clone_fidelity;     // N = 1..n_max at index N - 1
  double mean_parallel = 0.0;
  double mean_perpendicular = 0.0;

  double clone(std::size_t total) const { return clone_fidelity.at(total - 1); }
};

/// probabilities[n] = integral d^2beta |<n|T_q(beta)|input>|^2, input 0 or 1.
/// Throws Convergence if doubling the radial nodes moves a reported
/// probability by more than kConvergenceLimit, TruncationOverflow if level
/// dim-1 carries more than cfg.tail_tolerance.
PhotonDistribution numeric_single_mode_distribution(Squeezing q, std::size_t input_photons, std::size_t n_max,
                                                    const GridSpec &grid, const TruncationConfig &cfg);

/// Joint distribution for a polarization qubit. Basis qubits are reported in
/// the (n_H, n_V) frame; any other qubit in its own (parallel, perpendicular)
/// frame, which the teleportation channel treats identically to the H input.
JointDistribution numeric_joint_distribution(Squeezing q, const PolarizationQubit &qubit, std::size_t n_max,
                                             const GridSpec &grid, const TruncationConfig &cfg);

FidelityReport numeric_fidelities(const JointDistribution &joint, std::size_t n_max);

struct QubitStatistics {
  FidelityReport report;
  double normalization = 0.0;  // integral of the full two-mode density
};

/// Direct four-dimensional quadrature over (beta_H, beta_V) of the two-mode
/// conditional output, with photon statistics taken relative to the qubit's
/// own polarization. Makes no use of polarization covariance, so it checks
/// the frame rotation in numeric_joint_distribution independently.
QubitStatistics numeric_qubit_statistics_4d(Squeezing q, const PolarizationQubit &qubit, std::size_t n_max,
                                            const GridSpec &grid, const TruncationConfig &cfg);

}  // namespace cvtele::quadrature
