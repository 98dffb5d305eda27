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

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "cvtele/cvtele.h"
#include "gtest/gtest.h"

namespace {

struct ContextDeleter {
  void operator()(cvt_context *ctx) const { cvt_context_destroy(ctx); }
};
using ContextPtr = std::unique_ptr<cvt_context, ContextDeleter>;

ContextPtr make_context(size_t dim = 40) {
  cvt_context *ctx = nullptr;
  EXPECT_EQ(cvt_context_create(dim, 1e-9, &ctx), CVT_OK);
  return ContextPtr(ctx);
}

constexpr cvt_complex kOne{1.0, 0.0};
constexpr cvt_complex kZero{0.0, 0.0};

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(cvt_version(), "0.1.0");
  EXPECT_STREQ(cvt_status_name(CVT_OK), "ok");
  EXPECT_STRNE(cvt_status_name(CVT_ERROR_TRUNCATION), cvt_status_name(CVT_ERROR_CONVERGENCE));
  EXPECT_NE(cvt_status_name(static_cast<cvt_status>(1234)), nullptr);
}

TEST(CApi, ClosedForms) {
  double value = 0.0;
  ASSERT_EQ(cvt_p1(0.0, 2, &value), CVT_OK);
  EXPECT_NEAR(value, 0.1875, 1e-15);
  ASSERT_EQ(cvt_f_average(0.5, &value), CVT_OK);
  EXPECT_NEAR(value, 0.8, 1e-15);
  ASSERT_EQ(cvt_f_one(0.5, &value), CVT_OK);
  EXPECT_NEAR(value, 10.0 / 11.0, 1e-15);
  ASSERT_EQ(cvt_f_clone(1.0, 2, &value), CVT_OK);
  EXPECT_NEAR(value, 5.0 / 6.0, 1e-15);
  double lower = 0.0, upper = 0.0;
  ASSERT_EQ(cvt_f_clone_bounds(3, &lower, &upper), CVT_OK);
  EXPECT_NEAR(lower, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(upper, 7.0 / 9.0, 1e-15);
  double mean_h = 0.0, mean_v = 0.0;
  ASSERT_EQ(cvt_mean_photon_numbers(0.0, &mean_h, &mean_v), CVT_OK);
  EXPECT_NEAR(mean_h, 2.0, 1e-15);
  EXPECT_NEAR(mean_v, 1.0, 1e-15);
}

TEST(CApi, ErrorsAreReported) {
  double value = 0.0;
  EXPECT_EQ(cvt_p1(1.5, 0, &value), CVT_ERROR_DOMAIN);
  EXPECT_NE(std::string(cvt_last_error()).size(), 0u);
  EXPECT_EQ(cvt_f_clone(0.5, 0, &value), CVT_ERROR_DOMAIN);
  EXPECT_EQ(cvt_p1(0.5, 0, nullptr), CVT_ERROR_NULL_ARGUMENT);
  EXPECT_EQ(cvt_context_create(0, 1e-9, nullptr), CVT_ERROR_NULL_ARGUMENT);
  cvt_context *ctx = nullptr;
  EXPECT_EQ(cvt_context_create(0, 1e-9, &ctx), CVT_ERROR_INVALID_ARGUMENT);
  EXPECT_EQ(ctx, nullptr);
  cvt_complex amp{};
  EXPECT_EQ(cvt_displaced_fock_amplitude(kOne, -1, 0, &amp), CVT_ERROR_DOMAIN);
}

TEST(CApi, LastErrorIsPerThread) {
  double value = 0.0;
  ASSERT_EQ(cvt_p1(2.0, 0, &value), CVT_ERROR_DOMAIN);
  const std::string here = cvt_last_error();
  std::string there;
  std::thread worker([&] {
    cvt_f_clone(0.5, 0, &value);
    there = cvt_last_error();
  });
  worker.join();
  EXPECT_EQ(std::string(cvt_last_error()), here);
  EXPECT_NE(here, there);
}

TEST(CApi, DisplacementOperator) {
  auto ctx = make_context(30);
  cvt_operator *op = nullptr;
  ASSERT_EQ(cvt_displacement_operator(ctx.get(), cvt_complex{0.3, -0.2}, &op), CVT_OK);
  size_t dim = 0;
  ASSERT_EQ(cvt_operator_dim(op, &dim), CVT_OK);
  EXPECT_EQ(dim, 30u);
  cvt_complex entry{}, direct{};
  ASSERT_EQ(cvt_operator_entry(op, 2, 1, &entry), CVT_OK);
  ASSERT_EQ(cvt_displaced_fock_amplitude(cvt_complex{0.3, -0.2}, 2, 1, &direct), CVT_OK);
  EXPECT_EQ(entry.re, direct.re);
  EXPECT_EQ(entry.im, direct.im);
  EXPECT_EQ(cvt_operator_entry(op, 30, 0, &entry), CVT_ERROR_OUT_OF_RANGE);
  cvt_operator_destroy(op);
  cvt_operator_destroy(nullptr);

  cvt_operator *big = nullptr;
  EXPECT_EQ(cvt_displacement_operator(ctx.get(), cvt_complex{20.0, 0.0}, &big), CVT_ERROR_TRUNCATION);
  EXPECT_EQ(big, nullptr);
}

TEST(CApi, TransferAndConditionalOutput) {
  auto ctx = make_context(12);
  cvt_operator *t = nullptr;
  ASSERT_EQ(cvt_single_mode_transfer(ctx.get(), 0.0, kZero, &t), CVT_OK);
  cvt_complex entry{};
  ASSERT_EQ(cvt_operator_entry(t, 0, 0, &entry), CVT_OK);
  EXPECT_NEAR(entry.re, 1.0 / std::sqrt(M_PI), 1e-15);
  cvt_operator_destroy(t);

  std::vector<cvt_complex> buffer(12 * 12);
  ASSERT_EQ(cvt_conditional_output(ctx.get(), 0.5, kZero, kZero, kOne, kZero, buffer.data(), buffer.size()),
            CVT_OK);
  EXPECT_NEAR(buffer[1 * 12 + 0].re, 0.75 / M_PI * 0.5, 1e-15);
  EXPECT_EQ(cvt_conditional_output(ctx.get(), 0.5, kZero, kZero, kOne, kZero, buffer.data(), 10),
            CVT_ERROR_DIMENSION_MISMATCH);
  EXPECT_EQ(cvt_conditional_output(ctx.get(), 0.5, kZero, kZero, kOne, kOne, buffer.data(), buffer.size()),
            CVT_ERROR_INVALID_ARGUMENT);

  double density = 0.0;
  ASSERT_EQ(cvt_measurement_density(ctx.get(), 0.5, kZero, kZero, kOne, kZero, &density), CVT_OK);
  EXPECT_NEAR(density, std::pow(0.75 / M_PI * 0.5, 2), 1e-15);
  // Without entanglement the origin projects the photon onto vacuum.
  ASSERT_EQ(cvt_measurement_density(ctx.get(), 0.0, kZero, kZero, kOne, kZero, &density), CVT_OK);
  EXPECT_EQ(density, 0.0);
}

TEST(CApi, SingleModeDistribution) {
  auto ctx = make_context();
  cvt_distribution *dist = nullptr;
  ASSERT_EQ(cvt_single_mode_distribution(ctx.get(), 0.0, 1, 10, &dist), CVT_OK);
  double p = 0.0;
  ASSERT_EQ(cvt_distribution_probability(dist, 2, &p), CVT_OK);
  EXPECT_NEAR(p, 0.1875, 1e-6);
  EXPECT_EQ(cvt_distribution_probability(dist, 11, &p), CVT_ERROR_OUT_OF_RANGE);
  cvt_distribution_summary summary{};
  ASSERT_EQ(cvt_distribution_summary_get(dist, &summary), CVT_OK);
  EXPECT_EQ(summary.n_max, 10u);
  EXPECT_NEAR(summary.mean_photons, 2.0, 1e-5);
  cvt_distribution_destroy(dist);

  EXPECT_EQ(cvt_single_mode_distribution(ctx.get(), 0.5, 3, 10, &dist), CVT_ERROR_INVALID_ARGUMENT);
  EXPECT_EQ(cvt_single_mode_distribution(ctx.get(), 1.0, 1, 10, &dist), CVT_ERROR_DOMAIN);
}

TEST(CApi, GridSettings) {
  auto ctx = make_context();
  EXPECT_EQ(cvt_context_set_grid(ctx.get(), 64, 7, 6.0), CVT_ERROR_INVALID_ARGUMENT);
  ASSERT_EQ(cvt_context_set_grid(ctx.get(), 2, 32, 6.0), CVT_OK);
  cvt_distribution *dist = nullptr;
  EXPECT_EQ(cvt_single_mode_distribution(ctx.get(), 0.5, 1, 10, &dist), CVT_ERROR_CONVERGENCE);
  EXPECT_NE(std::string(cvt_last_error()).size(), 0u);
  ASSERT_EQ(cvt_context_set_grid(ctx.get(), 64, 32, 6.0), CVT_OK);
  ASSERT_EQ(cvt_context_set_angular_symmetry(ctx.get(), 1), CVT_OK);
  ASSERT_EQ(cvt_single_mode_distribution(ctx.get(), 0.5, 1, 10, &dist), CVT_OK);
  cvt_distribution_destroy(dist);
  size_t dim = 0;
  ASSERT_EQ(cvt_context_dim(ctx.get(), &dim), CVT_OK);
  EXPECT_EQ(dim, 40u);
}

TEST(CApi, TruncationDiagnostic) {
  auto ctx = make_context(6);
  cvt_distribution *dist = nullptr;
  EXPECT_EQ(cvt_single_mode_distribution(ctx.get(), 0.9, 1, 0, &dist), CVT_ERROR_TRUNCATION);
  EXPECT_NE(std::string(cvt_last_error()).find("Fock level 5"), std::string::npos);
}

TEST(CApi, JointAndFidelities) {
  auto ctx = make_context();
  cvt_joint *joint = nullptr;
  ASSERT_EQ(cvt_joint_distribution(ctx.get(), 0.5, kOne, kZero, 10, &joint), CVT_OK);
  cvt_joint_summary js{};
  ASSERT_EQ(cvt_joint_summary_get(joint, &js), CVT_OK);
  EXPECT_EQ(js.frame, CVT_FRAME_HORIZONTAL_VERTICAL);
  EXPECT_EQ(js.parallel_axis, 0u);
  double p = 0.0, exact = 0.0;
  ASSERT_EQ(cvt_joint_probability(joint, 1, 0, &p), CVT_OK);
  ASSERT_EQ(cvt_joint_p(0.5, 1, 0, &exact), CVT_OK);
  EXPECT_NEAR(p, exact, 1e-6);
  EXPECT_EQ(cvt_joint_probability(joint, 11, 0, &p), CVT_ERROR_OUT_OF_RANGE);

  cvt_fidelities *fid = nullptr;
  ASSERT_EQ(cvt_fidelities_from_joint(joint, 10, &fid), CVT_OK);
  cvt_fidelity_summary fs{};
  ASSERT_EQ(cvt_fidelities_summary_get(fid, &fs), CVT_OK);
  EXPECT_NEAR(fs.f_average, 0.8, 1e-5);
  EXPECT_NEAR(fs.f_one, 10.0 / 11.0, 1e-5);
  double f2 = 0.0;
  ASSERT_EQ(cvt_fidelities_clone(fid, 2, &f2), CVT_OK);
  EXPECT_NEAR(f2, 0.8, 1e-5);
  EXPECT_EQ(cvt_fidelities_clone(fid, 0, &f2), CVT_ERROR_OUT_OF_RANGE);
  double total = 0.0;
  ASSERT_EQ(cvt_fidelities_total_probability(fid, 1, &total), CVT_OK);
  ASSERT_EQ(cvt_total_p(0.5, 1, &exact), CVT_OK);
  EXPECT_NEAR(total, exact, 1e-6);
  cvt_fidelities_destroy(fid);
  EXPECT_EQ(cvt_fidelities_from_joint(joint, 11, &fid), CVT_ERROR_INVALID_ARGUMENT);
  cvt_joint_destroy(joint);

  const double s = 1.0 / std::sqrt(2.0);
  ASSERT_EQ(cvt_joint_distribution(ctx.get(), 0.5, cvt_complex{s, 0.0}, cvt_complex{0.0, s}, 6, &joint), CVT_OK);
  ASSERT_EQ(cvt_joint_summary_get(joint, &js), CVT_OK);
  EXPECT_EQ(js.frame, CVT_FRAME_PARALLEL_PERPENDICULAR);
  cvt_joint_destroy(joint);
}

TEST(CApi, FourDimensionalFidelities) {
  auto ctx = make_context();
  const double s = 1.0 / std::sqrt(2.0);
  cvt_fidelities *fid = nullptr;
  ASSERT_EQ(cvt_fidelities_4d(ctx.get(), 0.5, cvt_complex{s, 0.0}, cvt_complex{s, 0.0}, 6, 16, 8, &fid), CVT_OK);
  cvt_fidelity_summary fs{};
  ASSERT_EQ(cvt_fidelities_summary_get(fid, &fs), CVT_OK);
  EXPECT_NEAR(fs.normalization, 1.0, 1e-6);
  EXPECT_NEAR(fs.f_one, 10.0 / 11.0, 1e-6);
  cvt_fidelities_destroy(fid);
}

}  // namespace
