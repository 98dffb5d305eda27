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

// Analytic photon statistics and fidelities of single-photon polarization
// teleportation. Every function accepts q in [0, 1]; q = 1 is evaluated via
// its limit instead of through r = (1 + q)/(1 - q).

#include <cstddef>
#include <utility>

#include "core/teleport.hpp"

namespace cvtele::closed_form {

using teleport::Squeezing;

/// Value of a fidelity curve at one q.
struct FidelityCurvePoint {
  double q;
  double value;
};

/// Output photon distribution of one mode fed with a single photon.
double p1(Squeezing q, std::size_t n);

/// Output photon distribution of one mode fed with vacuum (thermal).
double p0(Squeezing q, std::size_t n);

/// Joint (n_H, n_V) distribution for a horizontally polarized input photon.
double joint_p(Squeezing q, std::size_t n_h, std::size_t n_v);

/// Probability of N output photons in total.
double total_p(Squeezing q, std::size_t total);

FidelityCurvePoint f_average(Squeezing q);

/// Polarization fidelity post-selected on a single output photon.
FidelityCurvePoint f_one(Squeezing q);

/// Cloning fidelity of an N-photon output, N >= 1.
FidelityCurvePoint f_clone(Squeezing q, std::size_t total);

/// (2/3, (2N + 1)/(3N)): classical limit and optimal 1 -> N cloning fidelity.
std::pair<double, double> f_clone_bounds(std::size_t total);

/// (<n_H>, <n_V>) for a horizontally polarized input.
std::pair<double, double> mean_photon_numbers(Squeezing q);

}  // namespace cvtele::closed_form
