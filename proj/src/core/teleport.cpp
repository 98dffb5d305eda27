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

#include "core/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "core/error.hpp"

namespace cvtele::teleport {
namespace {

void check_beta(Amplitude beta) {
  if (!fock::is_finite(beta)) fail(ErrorCode::Domain, "non-finite measurement outcome");
}

void check_input(std::size_t input_photons, const TruncationConfig &cfg) {
  if (input_photons >= cfg.dim) {
    fail(ErrorCode::InvalidArgument, "input Fock level " + std::to_string(input_photons) +
                                         " outside dimension " + std::to_string(cfg.dim));
  }
}

// log(x^e) with the convention 0^0 = 1.
double log_power(double log_x, std::size_t e) {
  return e == 0 ? 0.0 : static_cast<double>(e) * log_x;
}

}  // namespace

Squeezing::Squeezing(double q) : q_(q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    fail(ErrorCode::Domain, "squeezing parameter q must lie in [0, 1], got " + std::to_string(q));
  }
}

void Squeezing::require_numeric() const {
  if (q_ >= 1.0) fail(ErrorCode::Domain, "numerical evaluation requires q < 1");
}

PolarizationQubit::PolarizationQubit(Amplitude c_h, Amplitude c_v) : c_h_(c_h), c_v_(c_v) {
  if (!fock::is_finite(c_h) || !fock::is_finite(c_v)) {
    fail(ErrorCode::InvalidArgument, "non-finite qubit amplitude");
  }
  const double norm = std::norm(c_h) + std::norm(c_v);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    fail(ErrorCode::InvalidArgument, "qubit amplitudes must satisfy |c_H|^2 + |c_V|^2 = 1, got " +
                                         std::to_string(norm));
  }
}

bool PolarizationQubit::is_horizontal() const noexcept { return std::norm(c_v_) <= kNormTolerance; }

bool PolarizationQubit::is_vertical() const noexcept { return std::norm(c_h_) <= kNormTolerance; }

DenseOperator single_mode_transfer(Squeezing q, Amplitude beta, const TruncationConfig &cfg) {
  q.require_numeric();
  check_beta(beta);
  const DenseOperator forward = fock::displacement_operator(beta, cfg);
  const DenseOperator backward = fock::displacement_operator(-beta, cfg);

  const double qv = q.value();
  const double prefactor = std::sqrt((1.0 - qv * qv) / std::numbers::pi);
  DenseOperator weighted(cfg.dim);
  double weight = prefactor;
  for (std::size_t n = 0; n < cfg.dim; ++n) {
    for (std::size_t c = 0; c < cfg.dim; ++c) weighted(n, c) = weight * backward(n, c);
    weight *= qv;
  }
  return fock::multiply(forward, weighted);
}

FockVector transfer_column(Squeezing q, Amplitude beta, std::size_t input_photons, const TruncationConfig &cfg) {
  q.require_numeric();
  cfg.validate();
  check_beta(beta);
  check_input(input_photons, cfg);

  const double qv = q.value();
  const Amplitude gamma = (1.0 - qv) * beta;
  const double log_q = qv > 0.0 ? std::log(qv) : -std::numeric_limits<double>::infinity();
  const double abs_gamma = std::abs(gamma);
  const double log_gamma = abs_gamma > 0.0 ? std::log(abs_gamma) : -std::numeric_limits<double>::infinity();
  const double theta = std::arg(gamma);
  const double log_prefactor = 0.5 * std::log((1.0 - qv * qv) / std::numbers::pi) - (1.0 - qv) * std::norm(beta);

  const std::size_t m = input_photons;
  FockVector out(cfg.dim);
  for (std::size_t k = 0; k < cfg.dim; ++k) {
    // <k| e^{g a^dag} q^n e^{g* a} |m> = sum_l q^l g^{k-l} (g*)^{m-l} sqrt(k! m!) / (l! (k-l)! (m-l)!)
    // Every term carries the phase e^{i(k-m)theta}; magnitudes add.
    double magnitude = 0.0;
    const double log_norm = 0.5 * (fock::log_factorial(k) + fock::log_factorial(m));
    for (std::size_t l = 0; l <= std::min(k, m); ++l) {
      if (l > 0 && qv == 0.0) break;
      const std::size_t gamma_power = k + m - 2 * l;
      if (gamma_power > 0 && abs_gamma == 0.0) continue;
      const double log_term = log_power(log_q, l) + log_power(log_gamma, gamma_power) + log_norm -
                              fock::log_factorial(l) - fock::log_factorial(k - l) - fock::log_factorial(m - l);
      magnitude += std::exp(log_term + log_prefactor);
    }
    const double phase = (static_cast<double>(k) - static_cast<double>(m)) * theta;
    out[k] = std::polar(magnitude, phase);
  }
  return out;
}

TwoModeState conditional_output(Squeezing q, const MeasurementOutcome &outcome, const PolarizationQubit &qubit,
                                 const TruncationConfig &cfg) {
  const FockVector h1 = transfer_column(q, outcome.beta_h, 1, cfg);
  const FockVector h0 = transfer_column(q, outcome.beta_h, 0, cfg);
  const FockVector v1 = transfer_column(q, outcome.beta_v, 1, cfg);
  const FockVector v0 = transfer_column(q, outcome.beta_v, 0, cfg);

  TwoModeState out(cfg.dim);
  for (std::size_t a = 0; a < cfg.dim; ++a) {
    for (std::size_t b = 0; b < cfg.dim; ++b) {
      out(a, b) = qubit.c_h() * h1[a] * v0[b] + qubit.c_v() * h0[a] * v1[b];
    }
  }
  return out;
}

double measurement_density(Squeezing q, const MeasurementOutcome &outcome, const PolarizationQubit &qubit,
                           const TruncationConfig &cfg) {
  return conditional_output(q, outcome, qubit, cfg).norm_squared();
}

double single_mode_density(Squeezing q, Amplitude beta, std::size_t input_photons, const TruncationConfig &cfg) {
  return transfer_column(q, beta, input_photons, cfg).norm_squared();
}

}  // namespace cvtele::teleport
