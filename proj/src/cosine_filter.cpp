// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/cosine_filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radial/error.hpp"

namespace radial {

namespace {
constexpr double kPi = std::numbers::pi;
}

CosineFilter::CosineFilter(std::vector<Complex> g) : g_(std::move(g)) {
  if (g_.empty()) throw DomainError("CosineFilter: at least g_0 is required");
  for (const auto& v : g_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("CosineFilter: non-finite coefficient");
  }
}

Complex CosineFilter::tap(int k) const noexcept {
  if (k == 0) return 2.0 * g_[0];
  return g(std::abs(k));
}

Complex CosineFilter::operator()(double lambda) const {
  // Clenshaw recurrence for sum g_n cos(n theta).
  const double theta = kPi * lambda;
  const double two_c = 2.0 * std::cos(theta);
  Complex b1 = 0.0;
  Complex b2 = 0.0;
  for (int n = order(); n >= 1; --n) {
    const Complex b0 = g_[n] + two_c * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return std::sqrt(2.0) * (g_[0] + b1 * std::cos(theta) - b2);
}

Complex CosineFilter::from_taps(double lambda) const {
  Complex sum = 0.0;
  for (int k = -order(); k <= order(); ++k) sum += tap(k) * std::polar(1.0, k * kPi * lambda);
  return sum / std::sqrt(2.0);
}

Complex CosineFilter::sum() const {
  Complex s = 0.0;
  for (const auto& v : g_) s += v;
  return std::sqrt(2.0) * s;
}

Complex CosineFilter::alternating_sum() const {
  Complex s = 0.0;
  for (int n = 0; n <= order(); ++n) s += (n % 2 == 0 ? 1.0 : -1.0) * g_[n];
  return std::sqrt(2.0) * s;
}

double CosineFilter::identity_residual(int grid_pts) const {
  double worst = 0.0;
  for (int i = 0; i < grid_pts; ++i) {
    const double lambda = (i + 0.5) / grid_pts;
    const double v = std::norm((*this)(lambda)) + std::norm((*this)(lambda + 1.0)) - 1.0;
    worst = std::max(worst, std::fabs(v));
  }
  return worst;
}

}  // namespace radial
