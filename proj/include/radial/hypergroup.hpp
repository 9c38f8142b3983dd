// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include "radial/profile.hpp"
#include "radial/special.hpp"

namespace radial {

/// Generalized translation for alpha = 1/2,
///   T_r f(s) = (1 / (2 r s)) int_{|r-s|}^{r+s} f(t) t dt,
/// sampled on the grid of f. The integral is exact for the interpolant of f.
/// T_0 f = f. Reads beyond r_max count as 0 and mark the result truncated.
SampledProfile translate_half(const SampledProfile& f, double r);

/// Generalized translation of index alpha > -1/2,
///   T_r f(s) = C_alpha int_0^pi f(sqrt(r^2 + s^2 - 2 r s cos t)) sin^(2 alpha) t dt,
/// with C_alpha = Gamma(alpha+1) / (Gamma(alpha+1/2) Gamma(1/2)), by an
/// n_nodes-point Gauss-Legendre rule in t. alpha = -1/2 is rejected.
SampledProfile translate_general(const HypergroupIndex& alpha, const SampledProfile& f, double r,
                                 int n_nodes = 64);

/// (delta_r * delta_s)(f) = T_r f(s) for a callable test function; f(r) when s = 0.
Complex convolve_points(const HypergroupIndex& alpha, double r, double s, const EvenFunction& f,
                        int n_nodes = 64);

/// T_r of a callable as a callable, using convolve_points pointwise.
EvenFunction translate(const HypergroupIndex& alpha, const EvenFunction& f, double r, int n_nodes = 64);

/// D_a f(r) = a^-(alpha+1) f(r / a). For samples this is exact: the grid is
/// stretched by a and the values scaled.
SampledProfile dilate(const HypergroupIndex& alpha, const SampledProfile& f, double a);
EvenFunction dilate(const HypergroupIndex& alpha, const EvenFunction& f, double a);

}  // namespace radial
