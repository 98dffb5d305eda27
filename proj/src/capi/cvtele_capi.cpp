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

#include "cvtele/cvtele.h"

#include <exception>
#include <new>
#include <tuple>
#include <string>
#include <utility>

#include "core/closed_forms.hpp"
#include "core/error.hpp"
#include "core/fock.hpp"
#include "core/quadrature.hpp"
#include "core/teleport.hpp"

using cvtele::Error;
using cvtele::ErrorCode;
using cvtele::fock::Amplitude;
using cvtele::teleport::PolarizationQubit;
using cvtele::teleport::Squeezing;

struct cvt_context {
  cvtele::fock::TruncationConfig truncation;
  cvtele::quadrature::GridSpec grid;
};

struct cvt_operator {
  cvtele::fock::DenseOperator op;
};

struct cvt_distribution {
  cvtele::quadrature::PhotonDistribution dist;
};

struct cvt_joint {
  cvtele::quadrature::JointDistribution joint;
};

struct cvt_fidelities {
  cvtele::quadrature::FidelityReport report;
  double normalization;
};

namespace {

thread_local std::string g_last_error;

cvt_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return CVT_ERROR_INVALID_ARGUMENT;
    case ErrorCode::Domain:
      return CVT_ERROR_DOMAIN;
    case ErrorCode::DimensionMismatch:
      return CVT_ERROR_DIMENSION_MISMATCH;
    case ErrorCode::TruncationOverflow:
      return CVT_ERROR_TRUNCATION;
    case ErrorCode::Convergence:
      return CVT_ERROR_CONVERGENCE;
    case ErrorCode::UndefinedFidelity:
      return CVT_ERROR_UNDEFINED_FIDELITY;
  }
  return CVT_ERROR_INTERNAL;
}

cvt_status report(cvt_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
cvt_status guarded(Body &&body) noexcept {
  try {
    body();
    return CVT_OK;
  } catch (const Error &e) {
    return report(to_status(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return report(CVT_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return report(CVT_ERROR_INTERNAL, e.what());
  } catch (...) {
    return report(CVT_ERROR_INTERNAL, "unknown exception");
  }
}

#define CVT_REQUIRE(ptr)                                                     \
  do {                                                                       \
    if ((ptr) == nullptr) return report(CVT_ERROR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

Amplitude amp(cvt_complex z) { return {z.re, z.im}; }
cvt_complex to_c(Amplitude z) { return {z.real(), z.imag()}; }

}  // namespace

extern "C" {

const char *cvt_version(void) { return "0.1.0"; }

const char *cvt_status_name(cvt_status status) {
  switch (status) {
    case CVT_OK:
      return "ok";
    case CVT_ERROR_NULL_ARGUMENT:
      return "null argument";
    case CVT_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case CVT_ERROR_DOMAIN:
      return "domain error";
    case CVT_ERROR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case CVT_ERROR_TRUNCATION:
      return "truncation overflow";
    case CVT_ERROR_CONVERGENCE:
      return "convergence failure";
    case CVT_ERROR_UNDEFINED_FIDELITY:
      return "undefined fidelity";
    case CVT_ERROR_OUT_OF_RANGE:
      return "index out of range";
    case CVT_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char *cvt_last_error(void) { return g_last_error.c_str(); }

// ---- context ----

cvt_status cvt_context_create(size_t dim, double tail_tolerance, cvt_context **out) {
  CVT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    cvtele::fock::TruncationConfig cfg{dim, tail_tolerance};
    cfg.validate();
    *out = new cvt_context{cfg, {}};
  });
}

void cvt_context_destroy(cvt_context *ctx) { delete ctx; }

cvt_status cvt_context_set_grid(cvt_context *ctx, size_t radial_nodes, size_t angular_nodes,
                                double radius_multiplier) {
  CVT_REQUIRE(ctx);
  return guarded([&] {
    cvtele::quadrature::GridSpec grid = ctx->grid;
    grid.radial_nodes = radial_nodes;
    grid.angular_nodes = angular_nodes;
    grid.radius_multiplier = radius_multiplier;
    grid.validate();
    ctx->grid = grid;
  });
}

cvt_status cvt_context_set_angular_symmetry(cvt_context *ctx, int enabled) {
  CVT_REQUIRE(ctx);
  ctx->grid.use_angular_symmetry = enabled != 0;
  return CVT_OK;
}

cvt_status cvt_context_dim(const cvt_context *ctx, size_t *out) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(out);
  *out = ctx->truncation.dim;
  return CVT_OK;
}

// ---- closed forms ----

cvt_status cvt_p1(double q, size_t n, double *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = cvtele::closed_form::p1(Squeezing(q), n); });
}

cvt_status cvt_p0(double q, size_t n, double *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = cvtele::closed_form::p0(Squeezing(q), n); });
}

cvt_status cvt_joint_p(double q, size_t n_h, size_t n_v, double *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = cvtele::closed_form::joint_p(Squeezing(q), n_h, n_v); });
}

cvt_status cvt_total_p(double q, size_t total, double *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = cvtele::closed_form::total_p(Squeezing(q), total); });
}

cvt_status cvt_f_average(double q, double *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = cvtele::closed_form::f_average(Squeezing(q)).value; });
}

cvt_status cvt_f_one(double q, double *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = cvtele::closed_form::f_one(Squeezing(q)).value; });
}

cvt_status cvt_f_clone(double q, size_t total, double *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = cvtele::closed_form::f_clone(Squeezing(q), total).value; });
}

cvt_status cvt_f_clone_bounds(size_t total, double *lower, double *upper) {
  CVT_REQUIRE(lower);
  CVT_REQUIRE(upper);
  return guarded([&] { std::tie(*lower, *upper) = cvtele::closed_form::f_clone_bounds(total); });
}

cvt_status cvt_mean_photon_numbers(double q, double *mean_h, double *mean_v) {
  CVT_REQUIRE(mean_h);
  CVT_REQUIRE(mean_v);
  return guarded([&] { std::tie(*mean_h, *mean_v) = cvtele::closed_form::mean_photon_numbers(Squeezing(q)); });
}

// ---- Fock space ----

cvt_status cvt_displaced_fock_amplitude(cvt_complex alpha, long m, long n, cvt_complex *out) {
  CVT_REQUIRE(out);
  return guarded([&] { *out = to_c(cvtele::fock::displaced_fock_amplitude(amp(alpha), m, n)); });
}

cvt_status cvt_displacement_operator(const cvt_context *ctx, cvt_complex alpha, cvt_operator **out) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cvt_operator{cvtele::fock::displacement_operator(amp(alpha), ctx->truncation)}; });
}

cvt_status cvt_operator_dim(const cvt_operator *op, size_t *out) {
  CVT_REQUIRE(op);
  CVT_REQUIRE(out);
  *out = op->op.dim();
  return CVT_OK;
}

cvt_status cvt_operator_entry(const cvt_operator *op, size_t row, size_t col, cvt_complex *out) {
  CVT_REQUIRE(op);
  CVT_REQUIRE(out);
  if (row >= op->op.dim() || col >= op->op.dim()) {
    return report(CVT_ERROR_OUT_OF_RANGE, "operator entry outside dimension " + std::to_string(op->op.dim()));
  }
  *out = to_c(op->op(row, col));
  return CVT_OK;
}

void cvt_operator_destroy(cvt_operator *op) { delete op; }

// ---- teleportation ----

cvt_status cvt_single_mode_transfer(const cvt_context *ctx, double q, cvt_complex beta, cvt_operator **out) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new cvt_operator{cvtele::teleport::single_mode_transfer(Squeezing(q), amp(beta), ctx->truncation)};
  });
}

cvt_status cvt_conditional_output(const cvt_context *ctx, double q, cvt_complex beta_h, cvt_complex beta_v,
                                  cvt_complex c_h, cvt_complex c_v, cvt_complex *buffer, size_t buffer_len) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(buffer);
  const size_t d = ctx->truncation.dim;
  if (buffer_len < d * d) {
    return report(CVT_ERROR_DIMENSION_MISMATCH,
                  "buffer holds " + std::to_string(buffer_len) + " entries, need " + std::to_string(d * d));
  }
  return guarded([&] {
    const auto state = cvtele::teleport::conditional_output(
        Squeezing(q), {amp(beta_h), amp(beta_v)}, PolarizationQubit(amp(c_h), amp(c_v)), ctx->truncation);
    const auto amplitudes = state.amplitudes();
    for (size_t i = 0; i < amplitudes.size(); ++i) buffer[i] = to_c(amplitudes[i]);
  });
}

cvt_status cvt_measurement_density(const cvt_context *ctx, double q, cvt_complex beta_h, cvt_complex beta_v,
                                   cvt_complex c_h, cvt_complex c_v, double *out) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(out);
  return guarded([&] {
    *out = cvtele::teleport::measurement_density(Squeezing(q), {amp(beta_h), amp(beta_v)},
                                                 PolarizationQubit(amp(c_h), amp(c_v)), ctx->truncation);
  });
}

// ---- quadrature ----

cvt_status cvt_single_mode_distribution(const cvt_context *ctx, double q, int input_photons, size_t n_max,
                                        cvt_distribution **out) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(out);
  *out = nullptr;
  if (input_photons != 0 && input_photons != 1) {
    return report(CVT_ERROR_INVALID_ARGUMENT, "input_photons must be 0 or 1");
  }
  return guarded([&] {
    *out = new cvt_distribution{cvtele::quadrature::numeric_single_mode_distribution(
        Squeezing(q), static_cast<size_t>(input_photons), n_max, ctx->grid, ctx->truncation)};
  });
}

cvt_status cvt_distribution_probability(const cvt_distribution *dist, size_t n, double *out) {
  CVT_REQUIRE(dist);
  CVT_REQUIRE(out);
  if (n >= dist->dist.probabilities.size()) {
    return report(CVT_ERROR_OUT_OF_RANGE, "photon number " + std::to_string(n) + " beyond n_max");
  }
  *out = dist->dist.probabilities[n];
  return CVT_OK;
}

cvt_status cvt_distribution_summary_get(const cvt_distribution *dist, cvt_distribution_summary *out) {
  CVT_REQUIRE(dist);
  CVT_REQUIRE(out);
  const auto &d = dist->dist;
  *out = {d.probabilities.size() - 1, d.mean_photons, d.residual_mass, d.grid_estimate_error};
  return CVT_OK;
}

void cvt_distribution_destroy(cvt_distribution *dist) { delete dist; }

cvt_status cvt_joint_distribution(const cvt_context *ctx, double q, cvt_complex c_h, cvt_complex c_v, size_t n_max,
                                  cvt_joint **out) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new cvt_joint{cvtele::quadrature::numeric_joint_distribution(
        Squeezing(q), PolarizationQubit(amp(c_h), amp(c_v)), n_max, ctx->grid, ctx->truncation)};
  });
}

cvt_status cvt_joint_probability(const cvt_joint *joint, size_t first, size_t second, double *out) {
  CVT_REQUIRE(joint);
  CVT_REQUIRE(out);
  if (first > joint->joint.n_max || second > joint->joint.n_max) {
    return report(CVT_ERROR_OUT_OF_RANGE, "joint index beyond n_max");
  }
  *out = joint->joint.at(first, second);
  return CVT_OK;
}

cvt_status cvt_joint_summary_get(const cvt_joint *joint, cvt_joint_summary *out) {
  CVT_REQUIRE(joint);
  CVT_REQUIRE(out);
  const auto &j = joint->joint;
  const cvt_frame frame = j.frame == cvtele::quadrature::JointFrame::HorizontalVertical
                              ? CVT_FRAME_HORIZONTAL_VERTICAL
                              : CVT_FRAME_PARALLEL_PERPENDICULAR;
  *out = {j.n_max, frame, j.parallel_axis, j.mean_parallel, j.mean_perpendicular, j.residual_mass,
          j.grid_estimate_error};
  return CVT_OK;
}

void cvt_joint_destroy(cvt_joint *joint) { delete joint; }

cvt_status cvt_fidelities_from_joint(const cvt_joint *joint, size_t n_max, cvt_fidelities **out) {
  CVT_REQUIRE(joint);
  CVT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new cvt_fidelities{cvtele::quadrature::numeric_fidelities(joint->joint, n_max),
                              1.0 - joint->joint.residual_mass};
  });
}

cvt_status cvt_fidelities_4d(const cvt_context *ctx, double q, cvt_complex c_h, cvt_complex c_v, size_t n_max,
                             size_t radial_nodes, size_t angular_nodes, cvt_fidelities **out) {
  CVT_REQUIRE(ctx);
  CVT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    cvtele::quadrature::GridSpec grid = ctx->grid;
    grid.radial_nodes = radial_nodes;
    grid.angular_nodes = angular_nodes;
    auto stats = cvtele::quadrature::numeric_qubit_statistics_4d(
        Squeezing(q), PolarizationQubit(amp(c_h), amp(c_v)), n_max, grid, ctx->truncation);
    *out = new cvt_fidelities{std::move(stats.report), stats.normalization};
  });
}

cvt_status cvt_fidelities_total_probability(const cvt_fidelities *fid, size_t total, double *out) {
  CVT_REQUIRE(fid);
  CVT_REQUIRE(out);
  if (total > fid->report.n_max) return report(CVT_ERROR_OUT_OF_RANGE, "photon number beyond n_max");
  *out = fid->report.total_probability[total];
  return CVT_OK;
}

cvt_status cvt_fidelities_clone(const cvt_fidelities *fid, size_t total, double *out) {
  CVT_REQUIRE(fid);
  CVT_REQUIRE(out);
  if (total < 1 || total > fid->report.n_max) {
    return report(CVT_ERROR_OUT_OF_RANGE, "cloning fidelity defined for 1 <= N <= n_max");
  }
  *out = fid->report.clone(total);
  return CVT_OK;
}

cvt_status cvt_fidelities_summary_get(const cvt_fidelities *fid, cvt_fidelity_summary *out) {
  CVT_REQUIRE(fid);
  CVT_REQUIRE(out);
  const auto &r = fid->report;
  *out = {r.n_max, r.f_average, r.f_one, r.mean_parallel, r.mean_perpendicular, fid->normalization};
  return CVT_OK;
}

void cvt_fidelities_destroy(cvt_fidelities *fid) { delete fid; }

}  // extern "C"
