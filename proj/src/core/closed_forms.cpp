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

#include "core/closed_forms.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace cvtele::closed_form {
namespace {

// ((1 + q)/(1 - q))^2; callers handle q == 1 beforehand.
double ratio_squared(double q) {
  const double r = (1.0 + q) / (1.0 - q);
  return r * r;
}

}  // namespace

double p1(Squeezing q, std::size_t n) {
  if (q.is_unit()) return n == 1 ? 1.0 : 0.0;
  const double qv = q.value();
  const double nd = static_cast<double>(n);
  return (1.0 + qv) / 2.0 * std::pow((1.0 - qv) / 2.0, nd + 1.0) * (1.0 + nd * ratio_squared(qv));
}

double p0(Squeezing q, std::size_t n) {
  if (q.is_unit()) return n == 0 ? 1.0 : 0.0;
  const double qv = q.value();
  return (1.0 + qv) / 2.0 * std::pow((1.0 - qv) / 2.0, static_cast<double>(n));
}

double joint_p(Squeezing q, std::size_t n_h, std::size_t n_v) {
  if (q.is_unit()) return (n_h == 1 && n_v == 0) ? 1.0 : 0.0;
  const double qv = q.value();
  const double half_sum = (1.0 + qv) / 2.0;
  const double total = static_cast<double>(n_h + n_v);
  return half_sum * half_sum * std::pow((1.0 - qv) / 2.0, total + 1.0) *
         (1.0 + static_cast<double>(n_h) * ratio_squared(qv));
}

double total_p(Squeezing q, std::size_t total) {
  if (q.is_unit()) return total == 1 ? 1.0 : 0.0;
  const double qv = q.value();
  const double half_sum = (1.0 + qv) / 2.0;
  const double nd = static_cast<double>(total);
  return (nd + 1.0) * half_sum * half_sum * std::pow((1.0 - qv) / 2.0, nd + 1.0) *
         (1.0 + nd / 2.0 * ratio_squared(qv));
}

FidelityCurvePoint f_average(Squeezing q) { return {q.value(), 2.0 / (3.0 - q.value())}; }

FidelityCurvePoint f_one(Squeezing q) {
  const double qv = q.value();
  const double a = 2.0 * (1.0 + qv * qv);
  const double b = (1.0 - qv) * (1.0 - qv);
  return {qv, a / (a + b)};
}

FidelityCurvePoint f_clone(Squeezing q, std::size_t total) {
  if (total == 0) fail(ErrorCode::Domain, "cloning fidelity needs at least one output photon");
  const double nd = static_cast<double>(total);
  if (q.is_unit()) return {1.0, (2.0 * nd + 1.0) / (3.0 * nd)};
  const double r2 = ratio_squared(q.value());
  return {q.value(), 2.0 / 3.0 + (r2 - 1.0) / (3.0 * nd * r2 + 6.0)};
}

std::pair<double, double> f_clone_bounds(std::size_t total) {
  if (total == 0) fail(ErrorCode::Domain, "cloning bound needs at least one output photon");
  const double nd = static_cast<double>(total);
  return {2.0 / 3.0, (2.0 * nd + 1.0) / (3.0 * nd)};
}

std::pair<double, double> mean_photon_numbers(Squeezing q) {
  const double qv = q.value();
  return {2.0 / (1.0 + qv), (1.0 - qv) / (1.0 + qv)};
}

}  // namespace cvtele::closed_form
