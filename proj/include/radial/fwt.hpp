// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <utility>
#include <vector>

#include "radial/cosine_filter.hpp"
#include "radial/mra.hpp"

namespace radial {

/// c_k = <f, phi_{j,k}>, k = 1..K, computed on the spectral side.
/// f_hat is the Hankel transform of f. phi must be orthonormal.
std::vector<Complex> project(const EvenFunction& f_hat, const ScalingFunction& phi, int j, int K);

/// Decomposition coefficients q_l^(k) = <phi_{1,k}, phi_{0,l}> and
/// r_l^(k) = <phi_{1,k}, psi_{0,l}> read off the cosine coefficients of G:
///   q: conj(g_|2l-k| - g_{2l+k}), or conj(2 g_0 - g_{4l}) when 2l = k;
///   r: (-1)^(k-1) (g_|2l-1-k| - g_{2l-1+k}), or 2 g_0 - g_{4l-2} when 2l - 1 = k.
/// Indices must be >= 1 (DomainError).
std::pair<Complex, Complex> qr_coefficients(const CosineFilter& g, int ell, int k);

/// Per-level coefficients of f = sum c^(m) phi_{m,.} + sum_m sum d^(m) psi_{m,.}.
struct CoefficientPyramid {
  int j_top = 0;
  /// Input length at each analysed level: lengths[0] = K at j_top, lengths[i]
  /// at j_top - i. One entry per level plus the coarsest.
  std::vector<int> lengths;
  /// details[i] holds d^(j_top - 1 - i).
  std::vector<std::vector<Complex>> details;
  /// c^(j_top - depth).
  std::vector<Complex> coarse;

  int depth() const noexcept { return static_cast<int>(details.size()); }
};

/// Output length ceil((K + N) / 2) of one decomposition step.
int decomposed_length(int K, int N);

/// depth levels of
///   c_l' = sum_k c_k q_l^(k),  d_l = sum_k c_k r_l^(k),
/// with k beyond the input treated as 0. Throws ToleranceError when the filter
/// identity fails beyond identity_tol.
CoefficientPyramid decompose(const std::vector<Complex>& c_top, const CosineFilter& g, int depth, int j_top = 0,
                             double identity_tol = 1e-5);

/// Inverse step c_k = sum_l c_l' conj(q_l^(k)) + sum_l d_l conj(r_l^(k)),
/// applied level by level down to the recorded top length.
std::vector<Complex> reconstruct(const CoefficientPyramid& pyramid, const CosineFilter& g);

/// For 2l > N + 1: checks exactly
///   q_l^(2l + k) = conj(h_k),  r_l^(2l - 1 + k) = (-1)^k h_k,  |k| <= N,
/// and that both vanish for N < |k| <= N + 2 (band edges). DomainError when
/// 2l <= N + 1.
bool classical_tail_check(const CosineFilter& g, int ell);

}  // namespace radial
