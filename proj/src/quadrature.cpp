// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "radial/error.hpp"

namespace radial {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1) throw DomainError("GaussLegendre: order must be >= 1");
  nodes_.resize(n);
  weights_.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    long double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    long double dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0L;
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    // recompute derivative at the converged node
    long double p0 = 1.0L;
    long double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0L);
    const double w = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
    nodes_[i] = -static_cast<double>(x);
    nodes_[n - 1 - i] = static_cast<double>(x);
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

const GaussLegendre& GaussLegendre::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendre>(n);
  return *slot;
}

QuadratureNodes composite_nodes(double a, double b, double max_panel_width, int order,
                                std::span<const double> breakpoints) {
  QuadratureNodes q;
  if (!(b > a)) return q;
  if (!(max_panel_width > 0.0)) throw DomainError("composite_nodes: panel width must be positive");
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto& rule = GaussLegendre::get(order);
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double lo = cuts[s];
    const double hi = cuts[s + 1];
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_panel_width)));
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double left = lo + p * width;
      const double mid = left + 0.5 * width;
      for (int i = 0; i < rule.size(); ++i) {
        q.x.push_back(mid + 0.5 * width * rule.nodes()[i]);
        q.w.push_back(0.5 * width * rule.weights()[i]);
      }
    }
  }
  return q;
}

double integrate(const std::function<double(double)>& f, const QuadratureNodes& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) sum += q.w[i] * f(q.x[i]);
  return sum;
}

Complex integrate(const std::function<Complex(double)>& f, const QuadratureNodes& q) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) sum += q.w[i] * f(q.x[i]);
  return sum;
}

}  // namespace radial
