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

#include "core/fock.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace cvtele::fock {
namespace {

constexpr std::size_t kLogFactorialTableSize = 1024;

const std::array<double, kLogFactorialTableSize> &log_factorial_table() {
  static const auto table = [] {
    std::array<double, kLogFactorialTableSize> t{};
    t[0] = 0.0;
    for (std::size_t k = 1; k < t.size(); ++k) {
      t[k] = t[k - 1] + std::log(static_cast<double>(k));
    }
    return t;
  }();
  return table;
}

// L_n^{(k)}(x) as mantissa * exp(log_scale). The three-term recurrence is
// rescaled whenever the running value grows past 1e150.
struct ScaledValue {
  double mantissa;
  double log_scale;
};

ScaledValue generalized_laguerre(std::size_t n, std::size_t k, double x) {
  constexpr double kRescale = 1e150;
  const double kd = static_cast<double>(k);
  double prev = 1.0;
  if (n == 0) return {prev, 0.0};
  double curr = 1.0 + kd - x;
  double log_scale = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double next = ((2.0 * jd + 1.0 + kd - x) * curr - (jd + kd) * prev) / (jd + 1.0);
    prev = curr;
    curr = next;
    if (std::abs(curr) > kRescale) {
      prev /= kRescale;
      curr /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
  return {curr, log_scale};
}

void check_same_dim(std::size_t a, std::size_t b, const char *what) {
  if (a != b) {
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

Amplitude integer_power(Amplitude z, std::size_t k) {
  Amplitude result{1.0, 0.0};
  while (k > 0) {
    if (k & 1u) result *= z;
    z *= z;
    k >>= 1u;
  }
  return result;
}

}  // namespace

bool is_finite(Amplitude a) noexcept { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

void TruncationConfig::validate() const {
  if (dim < 2) {
    fail(ErrorCode::InvalidArgument, "truncation dim must be at least 2, got " + std::to_string(dim));
  }
  if (!(tail_tolerance >= 0.0 && tail_tolerance < 1.0)) {
    fail(ErrorCode::InvalidArgument, "tail_tolerance must lie in [0, 1)");
  }
}

double TruncationConfig::max_displacement() const { return 2.0 * std::sqrt(static_cast<double>(dim)); }

FockVector::FockVector(std::size_t dim) : amplitudes_(dim) {}

FockVector::FockVector(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
  for (const auto &a : amplitudes_) {
    if (!is_finite(a)) fail(ErrorCode::Domain, "non-finite amplitude in FockVector");
  }
}

FockVector FockVector::basis(std::size_t dim, std::size_t n) {
  if (n >= dim) {
    fail(ErrorCode::InvalidArgument,
         "basis level " + std::to_string(n) + " outside dimension " + std::to_string(dim));
  }
  FockVector v(dim);
  v[n] = 1.0;
  return v;
}

double FockVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto &a : amplitudes_) s += std::norm(a);
  return s;
}

TwoModeState::TwoModeState(std::size_t dim) : dim_(dim), amplitudes_(dim * dim) {}

TwoModeState TwoModeState::product(const FockVector &h, const FockVector &v) {
  check_same_dim(h.dim(), v.dim(), "TwoModeState::product");
  TwoModeState s(h.dim());
  for (std::size_t a = 0; a < h.dim(); ++a) {
    for (std::size_t b = 0; b < v.dim(); ++b) s(a, b) = h[a] * v[b];
  }
  return s;
}

double TwoModeState::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto &a : amplitudes_) s += std::norm(a);
  return s;
}

TwoModeState &TwoModeState::operator+=(const TwoModeState &other) {
  check_same_dim(dim_, other.dim_, "TwoModeState::operator+=");
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += other.amplitudes_[i];
  return *this;
}

TwoModeState &TwoModeState::operator*=(Amplitude factor) noexcept {
  for (auto &a : amplitudes_) a *= factor;
  return *this;
}

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator op(dim);
  for (std::size_t i = 0; i < dim; ++i) op(i, i) = 1.0;
  return op;
}

double log_factorial(std::size_t n) {
  if (n < kLogFactorialTableSize) return log_factorial_table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

Amplitude displaced_fock_amplitude(Amplitude alpha, std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) {
    fail(ErrorCode::Domain, "negative Fock index (" + std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  if (!is_finite(alpha)) fail(ErrorCode::Domain, "non-finite displacement amplitude");

  const auto big = static_cast<std::size_t>(std::max(m, n));
  const auto small = static_cast<std::size_t>(std::min(m, n));
  const std::size_t k = big - small;
  const double x = std::norm(alpha);

  if (x == 0.0) return k == 0 ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};

  // Magnitude sqrt(small!/big!) |alpha|^k e^{-x/2} L_small^{(k)}(x), shared by
  // both orderings.
  const ScaledValue lag = generalized_laguerre(small, k, x);
  if (lag.mantissa == 0.0) return {0.0, 0.0};
  const double log_mag = 0.5 * (log_factorial(small) - log_factorial(big)) +
                         static_cast<double>(k) * 0.5 * std::log(x) - 0.5 * x + lag.log_scale +
                         std::log(std::abs(lag.mantissa));
  const double magnitude = std::copysign(std::exp(log_mag), lag.mantissa);

  // Phase: u^k for m >= n, (-u*)^k for m < n, u = alpha/|alpha|. Built by
  // repeated multiplication, which commutes exactly with negation and
  // conjugation, unlike std::polar with a rounded angle.
  const Amplitude u = alpha / std::abs(alpha);
  const Amplitude base = m >= n ? u : -std::conj(u);
  return magnitude * integer_power(base, k);
}

DenseOperator displacement_operator(Amplitude alpha, const TruncationConfig &cfg) {
  cfg.validate();
  if (!is_finite(alpha)) fail(ErrorCode::Domain, "non-finite displacement amplitude");
  if (std::abs(alpha) > cfg.max_displacement()) {
    fail(ErrorCode::TruncationOverflow,
         "|alpha| = " + std::to_string(std::abs(alpha)) + " exceeds 2*sqrt(dim) = " +
             std::to_string(cfg.max_displacement()) + "; displaced states leave the truncated space");
  }
  DenseOperator op(cfg.dim);
  const auto d = static_cast<std::int64_t>(cfg.dim);
  for (std::int64_t m = 0; m < d; ++m) {
    for (std::int64_t n = 0; n < d; ++n) {
      op(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) = displaced_fock_amplitude(alpha, m, n);
    }
  }
  return op;
}

Amplitude inner_product(const FockVector &a, const FockVector &b) {
  check_same_dim(a.dim(), b.dim(), "inner_product");
  Amplitude s{0.0, 0.0};
  for (std::size_t n = 0; n < a.dim(); ++n) s += std::conj(a[n]) * b[n];
  return s;
}

Amplitude inner_product(const TwoModeState &a, const TwoModeState &b) {
  check_same_dim(a.dim(), b.dim(), "inner_product");
  Amplitude s{0.0, 0.0};
  const auto lhs = a.amplitudes();
  const auto rhs = b.amplitudes();
  for (std::size_t i = 0; i < lhs.size(); ++i) s += std::conj(lhs[i]) * rhs[i];
  return s;
}

FockVector apply_operator(const DenseOperator &op, const FockVector &v) {
  check_same_dim(op.dim(), v.dim(), "apply_operator");
  FockVector out(v.dim());
  for (std::size_t r = 0; r < op.dim(); ++r) {
    Amplitude s{0.0, 0.0};
    for (std::size_t c = 0; c < op.dim(); ++c) s += op(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

DenseOperator multiply(const DenseOperator &lhs, const DenseOperator &rhs) {
  check_same_dim(lhs.dim(), rhs.dim(), "multiply");
  const std::size_t d = lhs.dim();
  DenseOperator out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const Amplitude a = lhs(r, k);
      if (a == Amplitude{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

}  // namespace cvtele::fock
