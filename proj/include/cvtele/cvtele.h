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

/*
 * cvtele: continuous-variable teleportation of single-photon polarization
 * qubits in truncated Fock space.
 *
 * Plain C interface. Objects are opaque handles created by cvt_*_create or by
 * a computing function and released with the matching cvt_*_destroy. Every
 * fallible call returns a cvt_status; on failure cvt_last_error() describes
 * the problem for the calling thread until its next failing call.
 */
#ifndef CVTELE_CVTELE_H
#define CVTELE_CVTELE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CVTELE_BUILDING_LIBRARY)
#    define CVTELE_API __declspec(dllexport)
#  else
#    define CVTELE_API __declspec(dllimport)
#  endif
#else
#  define CVTELE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvt_status {
  CVT_OK = 0,
  CVT_ERROR_NULL_ARGUMENT = 1,
  CVT_ERROR_INVALID_ARGUMENT = 2,
  CVT_ERROR_DOMAIN = 3,
  CVT_ERROR_DIMENSION_MISMATCH = 4,
  CVT_ERROR_TRUNCATION = 5,
  CVT_ERROR_CONVERGENCE = 6,
  CVT_ERROR_UNDEFINED_FIDELITY = 7,
  CVT_ERROR_OUT_OF_RANGE = 8,
  CVT_ERROR_INTERNAL = 99
} cvt_status;

typedef enum cvt_frame {
  CVT_FRAME_HORIZONTAL_VERTICAL = 0,
  CVT_FRAME_PARALLEL_PERPENDICULAR = 1
} cvt_frame;

typedef struct cvt_complex {
  double re;
  double im;
} cvt_complex;

/* Truncation dimension, tail tolerance and quadrature grid. */
typedef struct cvt_context cvt_context;
/* Dense D x D operator in the Fock basis. */
typedef struct cvt_operator cvt_operator;
/* Numerical single-mode photon distribution. */
typedef struct cvt_distribution cvt_distribution;
/* Numerical two-mode photon distribution. */
typedef struct cvt_joint cvt_joint;
/* Photon-number probabilities, fidelities and means derived from a joint. */
typedef struct cvt_fidelities cvt_fidelities;

typedef struct cvt_distribution_summary {
  size_t n_max;
  double mean_photons;
  double residual_mass;
  double grid_estimate_error;
} cvt_distribution_summary;

typedef struct cvt_joint_summary {
  size_t n_max;
  cvt_frame frame;
  size_t parallel_axis; /* table index counting photons parallel to the input */
  double mean_parallel;
  double mean_perpendicular;
  double residual_mass;
  double grid_estimate_error;
} cvt_joint_summary;

typedef struct cvt_fidelity_summary {
  size_t n_max;
  double f_average;
  double f_one;
  double mean_parallel;
  double mean_perpendicular;
  double normalization; /* 4D runs only; 1 minus residual mass otherwise */
} cvt_fidelity_summary;

CVTELE_API const char *cvt_version(void);
CVTELE_API const char *cvt_status_name(cvt_status status);
CVTELE_API const char *cvt_last_error(void);

/* ---- context ---------------------------------------------------------- */

/* Defaults: 64 radial nodes, 32 angular nodes, radius multiplier 6. */
CVTELE_API cvt_status cvt_context_create(size_t dim, double tail_tolerance, cvt_context **out);
CVTELE_API void cvt_context_destroy(cvt_context *ctx);
CVTELE_API cvt_status cvt_context_set_grid(cvt_context *ctx, size_t radial_nodes, size_t angular_nodes,
                                           double radius_multiplier);
CVTELE_API cvt_status cvt_context_set_angular_symmetry(cvt_context *ctx, int enabled);
CVTELE_API cvt_status cvt_context_dim(const cvt_context *ctx, size_t *out);

/* ---- closed forms (q in [0, 1]) -------------------------------------- */

CVTELE_API cvt_status cvt_p1(double q, size_t n, double *out);
CVTELE_API cvt_status cvt_p0(double q, size_t n, double *out);
CVTELE_API cvt_status cvt_joint_p(double q, size_t n_h, size_t n_v, double *out);
CVTELE_API cvt_status cvt_total_p(double q, size_t total, double *out);
CVTELE_API cvt_status cvt_f_average(double q, double *out);
CVTELE_API cvt_status cvt_f_one(double q, double *out);
CVTELE_API cvt_status cvt_f_clone(double q, size_t total, double *out);
CVTELE_API cvt_status cvt_f_clone_bounds(size_t total, double *lower, double *upper);
CVTELE_API cvt_status cvt_mean_photon_numbers(double q, double *mean_h, double *mean_v);

/* ---- Fock space ------------------------------------------------------- */

CVTELE_API cvt_status cvt_displaced_fock_amplitude(cvt_complex alpha, long m, long n, cvt_complex *out);
CVTELE_API cvt_status cvt_displacement_operator(const cvt_context *ctx, cvt_complex alpha, cvt_operator **out);
CVTELE_API cvt_status cvt_operator_dim(const cvt_operator *op, size_t *out);
CVTELE_API cvt_status cvt_operator_entry(const cvt_operator *op, size_t row, size_t col, cvt_complex *out);
CVTELE_API void cvt_operator_destroy(cvt_operator *op);

/* ---- teleportation (q < 1) -------------------------------------------- */

CVTELE_API cvt_status cvt_single_mode_transfer(const cvt_context *ctx, double q, cvt_complex beta,
                                               cvt_operator **out);
/* Writes the unnormalized two-mode output, dim * dim entries row-major in n_H. */
CVTELE_API cvt_status cvt_conditional_output(const cvt_context *ctx, double q, cvt_complex beta_h,
                                             cvt_complex beta_v, cvt_complex c_h, cvt_complex c_v,
                                             cvt_complex *buffer, size_t buffer_len);
CVTELE_API cvt_status cvt_measurement_density(const cvt_context *ctx, double q, cvt_complex beta_h,
                                              cvt_complex beta_v, cvt_complex c_h, cvt_complex c_v, double *out);

/* ---- quadrature ------------------------------------------------------- */

CVTELE_API cvt_status cvt_single_mode_distribution(const cvt_context *ctx, double q, int input_photons,
                                                   size_t n_max, cvt_distribution **out);
CVTELE_API cvt_status cvt_distribution_probability(const cvt_distribution *dist, size_t n, double *out);
CVTELE_API cvt_status cvt_distribution_summary_get(const cvt_distribution *dist, cvt_distribution_summary *out);
CVTELE_API void cvt_distribution_destroy(cvt_distribution *dist);

CVTELE_API cvt_status cvt_joint_distribution(const cvt_context *ctx, double q, cvt_complex c_h, cvt_complex c_v,
                                             size_t n_max, cvt_joint **out);
CVTELE_API cvt_status cvt_joint_probability(const cvt_joint *joint, size_t first, size_t second, double *out);
CVTELE_API cvt_status cvt_joint_summary_get(const cvt_joint *joint, cvt_joint_summary *out);
CVTELE_API void cvt_joint_destroy(cvt_joint *joint);

CVTELE_API cvt_status cvt_fidelities_from_joint(const cvt_joint *joint, size_t n_max, cvt_fidelities **out);
/* Direct 4D quadrature over (beta_H, beta_V) with its own per-plane grid. */
CVTELE_API cvt_status cvt_fidelities_4d(const cvt_context *ctx, double q, cvt_complex c_h, cvt_complex c_v,
                                        size_t n_max, size_t radial_nodes, size_t angular_nodes,
                                        cvt_fidelities **out);
CVTELE_API cvt_status cvt_fidelities_total_probability(const cvt_fidelities *fid, size_t total, double *out);
CVTELE_API cvt_status cvt_fidelities_clone(const cvt_fidelities *fid, size_t total, double *out);
CVTELE_API cvt_status cvt_fidelities_summary_get(const cvt_fidelities *fid, cvt_fidelity_summary *out);
CVTELE_API void cvt_fidelities_destroy(cvt_fidelities *fid);

#ifdef __cplusplus
}
#endif

#endif /* CVTELE_CVTELE_H */
