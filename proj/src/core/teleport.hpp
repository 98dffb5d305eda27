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

// Continuous-variable teleportation transfer operators for one mode and for
// the two-mode (H, V) polarization channel.

#include <cstddef>

#include "core/fock.hpp"

namespace cvtele::teleport {

using fock::Amplitude;
using fock::DenseOperator;
using fock::FockVector;
using fock::TruncationConfig;
using fock::TwoModeState;

/// Entanglement of the two-mode squeezed resource, q in [0, 1]. Numerical
/// routines additionally require q < 1 (see require_numeric()).
class Squeezing {
 public:
  explicit Squeezing(double q);

  double value() const noexcept { return q_; }
  bool is_unit() const noexcept { return q_ == 1.0; }

  /// Throws Domain when q == 1.
  void require_numeric() const;

 private:
  double q_;
};

/// Complex homodyne outcomes for the two polarization channels.
struct MeasurementOutcome {
  Amplitude beta_h;
  Amplitude beta_v;
};

/// Single-photon input c_H|1;0> + c_V|0;1>.
class PolarizationQubit {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws InvalidArgument unless |c_H|^2 + |c_V|^2 = 1 within kNormTolerance.
  PolarizationQubit(Amplitude c_h, Amplitude c_v);

  static PolarizationQubit horizontal() { return {1.0, 0.0}; }
  static PolarizationQubit vertical() { return {0.0, 1.0}; }

  Amplitude c_h() const noexcept { return c_h_; }
  Amplitude c_v() const noexcept { return c_v_; }

  bool is_horizontal() const noexcept;
  bool is_vertical() const noexcept;

 private:
  Amplitude c_h_;
  Amplitude c_v_;
};

/// T_q(beta) = sqrt((1 - q^2)/pi) sum_n q^n D(beta)|n><n|D(-beta), summed over
/// the truncated space. The square-root prefactor makes the outcome densities
/// integrate to one under d^2beta = d(Re beta) d(Im beta). Subject to the
/// displacement bound of the truncation.
DenseOperator single_mode_transfer(Squeezing q, Amplitude beta, const TruncationConfig &cfg);

/// T_q(beta)|m> on levels 0..dim-1, from the normal-ordered form
///
///   T_q(beta) = sqrt((1 - q^2)/pi) e^{-(1-q)|beta|^2} e^{g a^dag} q^{n} e^{g^* a},
///   g = (1 - q) beta,
///
/// which gives every level as a finite sum of same-phase terms. Exact for each
/// represented level and valid for any |beta|, unlike the dense sum form.
FockVector transfer_column(Squeezing q, Amplitude beta, std::size_t input_photons, const TruncationConfig &cfg);

/// Unnormalized T_{H,q}(beta_H) (x) T_{V,q}(beta_V) (c_H|1;0> + c_V|0;1>).
TwoModeState conditional_output(Squeezing q, const MeasurementOutcome &outcome, const PolarizationQubit &qubit,
                                 const TruncationConfig &cfg);

/// Probability density of the outcome pair under d^2beta_H d^2beta_V.
double measurement_density(Squeezing q, const MeasurementOutcome &outcome, const PolarizationQubit &qubit,
                           const TruncationConfig &cfg);

/// ||T_q(beta)|m>||^2, the single-channel outcome density.
double single_mode_density(Squeezing q, Amplitude beta, std::size_t input_photons, const TruncationConfig &cfg);

}  // namespace cvtele::teleport
