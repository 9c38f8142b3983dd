// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace radial {

using Complex = std::complex<double>;

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Shared cached rule; thread-safe.
  static const GaussLegendre& get(int n);

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Abscissae and weights of a composite rule, ready to be reused for many
/// integrands on the same interval.
struct QuadratureNodes {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const noexcept { return x.size(); }
};

/// Composite Gauss-Legendre nodes on [a, b]: the interval is first cut at
/// every breakpoint strictly inside (a, b), and each piece is split into
/// panels no wider than max_panel_width.
QuadratureNodes composite_nodes(double a, double b, double max_panel_width, int order = 16,
                                std::span<const double> breakpoints = {});

double integrate(const std::function<double(double)>& f, const QuadratureNodes& q);
Complex integrate(const std::function<Complex(double)>& f, const QuadratureNodes& q);

}  // namespace radial
