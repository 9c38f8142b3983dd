// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radial/error.hpp"
#include "radial/parallel.hpp"

namespace radial {

namespace {

constexpr double kPi = std::numbers::pi;

Domain other(Domain d) { return d == Domain::radial ? Domain::spectral : Domain::radial; }

// Quadrature nodes for int_0^limit K(x r) f(r) dr where x may reach x_max;
// panels resolve one oscillation of the kernel at x_max.
QuadratureNodes transform_nodes(const EvenFunction& f, double limit, double x_max) {
  double width = std::min(limit / 8.0, 1.0 / 16.0);
  if (x_max > 0.0) width = std::min(width, kPi / x_max);
  return composite_nodes(0.0, limit, width, 16, f.breakpoints());
}

}  // namespace

Complex inner_product(const SampledProfile& f, const SampledProfile& g, const HypergroupIndex& alpha) {
  if (!(f.grid() == g.grid())) throw GridMismatchError("inner_product: grids differ");
  const auto& grid = f.grid();
  Complex sum = 0.0;
  for (int i = 0; i < grid.n_points(); ++i) sum += f[i] * std::conj(g[i]) * alpha.weight(grid[i]);
  return sum * grid.spacing();
}

Complex inner_product(const EvenFunction& f, const EvenFunction& g, const RadialGrid& grid,
                      const HypergroupIndex& alpha) {
  return inner_product(sample(f, grid, Domain::radial), sample(g, grid, Domain::radial), alpha);
}

double norm(const SampledProfile& f, const HypergroupIndex& alpha) {
  return std::sqrt(std::max(0.0, inner_product(f, f, alpha).real()));
}

Complex weighted_integral(const EvenFunction& f, const EvenFunction& g, const HypergroupIndex& alpha,
                          double limit, double panel_width, int order) {
  if (limit <= 0.0) limit = std::min(f.support(), g.support());
  if (!std::isfinite(limit)) throw DomainError("weighted_integral: both supports unbounded, give a limit");
  std::vector<double> breaks = f.breakpoints();
  breaks.insert(breaks.end(), g.breakpoints().begin(), g.breakpoints().end());
  const auto q = composite_nodes(0.0, limit, panel_width, order, breaks);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    sum += q.w[i] * alpha.weight(q.x[i]) * f(q.x[i]) * std::conj(g(q.x[i]));
  }
  return sum;
}

RadialGrid dual_grid(const RadialGrid& grid) {
  return RadialGrid(grid.n_points() * kPi / grid.r_max(), grid.n_points());
}

SampledProfile hankel_half(const SampledProfile& f, const RadialGrid& grid_out) {
  const auto& in = f.grid();
  const double h = in.spacing();
  const double c = std::sqrt(2.0 / kPi);
  std::vector<Complex> out(grid_out.n_points());
  parallel_for(out.size(), [&](std::size_t m) {
    const double lambda = grid_out[static_cast<int>(m)];
    Complex sum = 0.0;
    if (lambda == 0.0) {
      for (int i = 0; i < in.n_points(); ++i) sum += in[i] * in[i] * f[i];
      out[m] = c * h * sum;
      return;
    }
    for (int i = 0; i < in.n_points(); ++i) {
      const double r = in[i];
      sum += std::sin(lambda * r) * r * f[i];
    }
    out[m] = c * h * sum / lambda;
  });
  return SampledProfile(grid_out, std::move(out), other(f.domain()));
}

SampledProfile hankel_general(const HypergroupIndex& alpha, const SampledProfile& f,
                              const RadialGrid& grid_out) {
  const auto& in = f.grid();
  const double h = in.spacing();
  std::vector<double> w(in.n_points());
  for (int i = 0; i < in.n_points(); ++i) w[i] = alpha.weight(in[i]) * h;
  std::vector<Complex> out(grid_out.n_points());
  parallel_for(out.size(), [&](std::size_t m) {
    const double lambda = grid_out[static_cast<int>(m)];
    Complex sum = 0.0;
    for (int i = 0; i < in.n_points(); ++i) sum += bessel_j(alpha, lambda * in[i]) * w[i] * f[i];
    out[m] = sum;
  });
  return SampledProfile(grid_out, std::move(out), other(f.domain()));
}

SampledProfile inverse_hankel(const HypergroupIndex& alpha, const SampledProfile& F,
                              const RadialGrid& grid_out) {
  if (alpha.value() == 0.5) return hankel_half(F, grid_out);
  return hankel_general(alpha, F, grid_out);
}

SampledProfile hankel_of(const HypergroupIndex& alpha, const EvenFunction& f, const RadialGrid& grid_out,
                         Domain from, double limit) {
  if (limit <= 0.0) limit = f.extent(64.0);
  const auto q = transform_nodes(f, limit, grid_out.r_max());
  std::vector<Complex> fw(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) fw[i] = q.w[i] * alpha.weight(q.x[i]) * f(q.x[i]);
  std::vector<Complex> out(grid_out.n_points());
  parallel_for(out.size(), [&](std::size_t m) {
    const double x = grid_out[static_cast<int>(m)];
    Complex sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) sum += bessel_j(alpha, x * q.x[i]) * fw[i];
    out[m] = sum;
  });
  return SampledProfile(grid_out, std::move(out), other(from));
}

Complex hankel_at(const HypergroupIndex& alpha, const EvenFunction& f, double x, double limit) {
  if (limit <= 0.0) limit = f.extent(64.0);
  const auto q = transform_nodes(f, limit, std::fabs(x));
  Complex sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    sum += q.w[i] * alpha.weight(q.x[i]) * bessel_j(alpha, x * q.x[i]) * f(q.x[i]);
  }
  return sum;
}

}  // namespace radial
