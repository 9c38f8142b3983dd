// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <optional>

#include "radial/mra.hpp"

namespace radial {

/// Basic radial wavelet psi, held through its spectrum.
struct Wavelet {
  EvenFunction spectrum;
  std::optional<EvenFunction> radial;
};

/// psi_hat(mu) = conj(G(mu/2 + 1)) phi_hat(mu/2). phi must be flagged
/// orthonormal (DomainError) and G must satisfy |G(l)|^2 + |G(l+1)|^2 = 1
/// within tol on 4096 points (ToleranceError).
Wavelet build_wavelet(const ScalingFunction& phi, const FilterSymbol& G, double tol = 1e-6);
Wavelet build_wavelet(const ScalingFunction& phi, const CosineFilter& g, double tol = 1e-6);

/// Spectrum of psi_{j,k} = D_{2^-j} psi_k with
///   psi_k^(lambda) = (M_{2k-1} / 2) j(lambda (2k - 1) pi / 2) psi_hat(lambda).
EvenFunction wavelet_spectrum(const Wavelet& psi, int j, int k);

/// psi_{j,k} sampled on a radial grid by inverse transform of its spectrum.
SampledProfile wavelet_family(const Wavelet& psi, int j, int k, const RadialGrid& grid);

/// Shannon closed form
///   psi_{0,k}(x) = (2 pi)^(-1/4) x^-1 (p(x - (2k-1) pi/2) - p(x + (2k-1) pi/2)),
/// p(x) = (sin 2x - sin x) / x.
double shannon_wavelet_translate(int k, double x);

/// Spectrum of f_alpha in W_{-1}:
///   (2 pi)^(1/4) (alpha(lambda) / lambda) conj(G(lambda + 1)) phi_hat(lambda).
/// alpha must lie in S0 (odd-index coefficients only), else DomainError.
EvenFunction w_space_lift(const SineSeries& alpha, const ScalingFunction& phi, const FilterSymbol& G);

}  // namespace radial
