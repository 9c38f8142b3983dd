// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include "radial/profile.hpp"
#include "radial/quadrature.hpp"
#include "radial/special.hpp"

namespace radial {

/// <f, g> = int f conj(g) d omega_alpha by the midpoint rule on the shared grid.
/// Throws GridMismatchError when the grids differ.
Complex inner_product(const SampledProfile& f, const SampledProfile& g, const HypergroupIndex& alpha);

/// Closed forms sampled on `grid` first.
Complex inner_product(const EvenFunction& f, const EvenFunction& g, const RadialGrid& grid,
                      const HypergroupIndex& alpha);

double norm(const SampledProfile& f, const HypergroupIndex& alpha);

/// int_0^limit f conj(g) d omega_alpha by composite Gauss-Legendre, split at
/// the breakpoints of both functions. limit defaults to the smaller support.
Complex weighted_integral(const EvenFunction& f, const EvenFunction& g, const HypergroupIndex& alpha,
                          double limit = 0.0, double panel_width = 1.0 / 32.0, int order = 16);

/// Spectral grid paired with a radial midpoint grid: lambda_m = (m + 1/2) pi / R,
/// m < N. On this pair the alpha = 1/2 transform is an orthogonal DST-IV.
RadialGrid dual_grid(const RadialGrid& grid);

/// Three-dimensional fast path,
///   lambda F(lambda) = sqrt(2/pi) sum_i sin(lambda r_i) r_i f_i h,
/// with F(0) = sqrt(2/pi) sum_i r_i^2 f_i h. The input may be on either side;
/// the output is on the other.
SampledProfile hankel_half(const SampledProfile& f, const RadialGrid& grid_out);

/// Midpoint evaluation of int j_alpha(lambda r) f(r) d omega_alpha(r).
SampledProfile hankel_general(const HypergroupIndex& alpha, const SampledProfile& f,
                              const RadialGrid& grid_out);

/// The transform is its own inverse; this maps spectral samples back to the
/// radial side (fast path at alpha = 1/2).
SampledProfile inverse_hankel(const HypergroupIndex& alpha, const SampledProfile& F,
                              const RadialGrid& grid_out);

/// Transform of a callable, by composite Gauss-Legendre on [0, limit].
/// limit defaults to f.extent(64). The result lives on the opposite side of
/// `from`.
SampledProfile hankel_of(const HypergroupIndex& alpha, const EvenFunction& f, const RadialGrid& grid_out,
                         Domain from, double limit = 0.0);

/// Single value of the transform of a callable at x.
Complex hankel_at(const HypergroupIndex& alpha, const EvenFunction& f, double x, double limit = 0.0);

}  // namespace radial
