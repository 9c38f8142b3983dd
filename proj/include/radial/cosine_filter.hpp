// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <complex>
#include <vector>

namespace radial {

using Complex = std::complex<double>;

/// Truncated cosine expansion G(lambda) = sqrt(2) sum_{n=0}^{N} g_n cos(n pi lambda)
/// of a filter function, with two-sided taps h_k = g_|k| for 1 <= |k| <= N and
/// h_0 = 2 g_0, so that G(lambda) = (1/sqrt 2) sum_{k=-N}^{N} h_k e^{i k pi lambda}.
class CosineFilter {
 public:
  explicit CosineFilter(std::vector<Complex> g);

  /// Highest stored index N.
  int order() const noexcept { return static_cast<int>(g_.size()) - 1; }
  const std::vector<Complex>& coefficients() const noexcept { return g_; }

  /// g_n, read as 0 outside [0, N].
  Complex g(int n) const noexcept {
    return n >= 0 && n < static_cast<int>(g_.size()) ? g_[n] : Complex(0.0);
  }

  /// h_k for |k| <= N, 0 beyond.
  Complex tap(int k) const noexcept;

  /// Cosine-series evaluation.
  Complex operator()(double lambda) const;

  /// Evaluation through the taps; equal to operator() up to rounding.
  Complex from_taps(double lambda) const;

  /// sqrt(2) sum g_n = G(0) and sqrt(2) sum (-1)^n g_n = G(1).
  Complex sum() const;
  Complex alternating_sum() const;

  /// sup | |G(l)|^2 + |G(l+1)|^2 - 1 | over grid_pts midpoints of [0, 1].
  double identity_residual(int grid_pts = 4096) const;

 private:
  std::vector<Complex> g_;
};

}  // namespace radial
