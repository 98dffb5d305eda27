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

// Truncated single- and two-mode Fock space: state vectors, dense operators
// and displacement-operator matrix elements.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cvtele::fock {

using Amplitude = std::complex<double>;

bool is_finite(Amplitude a) noexcept;

/// Fock levels 0..dim-1 are represented. tail_tolerance bounds the
/// probability mass any downstream result may leave on level dim-1.
struct TruncationConfig {
  std::size_t dim = 40;
  double tail_tolerance = 1e-9;

  /// Throws InvalidArgument unless dim >= 2 and tail_tolerance in [0, 1).
  void validate() const;

  /// Largest |alpha| accepted when building dense displacement matrices.
  double max_displacement() const;
};

class FockVector {
 public:
  explicit FockVector(std::size_t dim);
  explicit FockVector(std::vector<Amplitude> amplitudes);

  static FockVector basis(std::size_t dim, std::size_t n);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  Amplitude operator[](std::size_t n) const { return amplitudes_[n]; }
  Amplitude &operator[](std::size_t n) { return amplitudes_[n]; }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  double norm_squared() const noexcept;

 private:
  std::vector<Amplitude> amplitudes_;
};

/// Two-mode (H, V) amplitudes, indexed (n_H, n_V), row-major in n_H.
class TwoModeState {
 public:
  explicit TwoModeState(std::size_t dim);

  /// |h> (x) |v>
  static TwoModeState product(const FockVector &h, const FockVector &v);

  std::size_t dim() const noexcept { return dim_; }
  Amplitude operator()(std::size_t n_h, std::size_t n_v) const { return amplitudes_[n_h * dim_ + n_v]; }
  Amplitude &operator()(std::size_t n_h, std::size_t n_v) { return amplitudes_[n_h * dim_ + n_v]; }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  double norm_squared() const noexcept;

  TwoModeState &operator+=(const TwoModeState &other);
  TwoModeState &operator*=(Amplitude factor) noexcept;

 private:
  std::size_t dim_;
  std::vector<Amplitude> amplitudes_;
};

/// D x D complex matrix in the Fock basis, row-major.
class DenseOperator {
 public:
  explicit DenseOperator(std::size_t dim);

  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Amplitude operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Amplitude &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const Amplitude> entries() const noexcept { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Amplitude> entries_;
};

/// ln(n!) from a cumulative table; exact sums of logs for small n.
double log_factorial(std::size_t n);

/// <m| D(alpha) |n> for arbitrary nonnegative m, n. Factorial ratios and the
/// associated Laguerre polynomial are carried in log/rescaled form, so
/// indices in the hundreds neither overflow nor underflow.
Amplitude displaced_fock_amplitude(Amplitude alpha, std::int64_t m, std::int64_t n);

/// Dense D(alpha) on the truncated space. Rejects |alpha| > 2 sqrt(dim) with
/// TruncationOverflow.
DenseOperator displacement_operator(Amplitude alpha, const TruncationConfig &cfg);

/// Conjugate-linear in the first argument.
Amplitude inner_product(const FockVector &a, const FockVector &b);
Amplitude inner_product(const TwoModeState &a, const TwoModeState &b);

FockVector apply_operator(const DenseOperator &op, const FockVector &v);
DenseOperator multiply(const DenseOperator &lhs, const DenseOperator &rhs);

}  // namespace cvtele::fock
