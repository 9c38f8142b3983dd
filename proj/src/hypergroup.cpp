// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radial/error.hpp"
#include "radial/parallel.hpp"
#include "radial/quadrature.hpp"

namespace radial {

namespace {

constexpr double kPi = std::numbers::pi;

// Antiderivative C(t) = int_0^t f(u) u du of the interpolant of f. Pieces of
// the interpolant are bounded by 0, r_0, ..., r_{N-1}, r_max; on each piece
// f(u) u is a polynomial of degree 6, so 4-point Gauss-Legendre is exact.
class MomentIntegral {
 public:
  explicit MomentIntegral(const SampledProfile& f) : f_(f), rule_(GaussLegendre::get(4)) {
    const auto& g = f.grid();
    edges_.push_back(0.0);
    for (int i = 0; i < g.n_points(); ++i) edges_.push_back(g[i]);
    edges_.push_back(g.r_max());
    cum_.assign(edges_.size(), 0.0);
    for (std::size_t p = 0; p + 1 < edges_.size(); ++p) cum_[p + 1] = cum_[p] + piece(edges_[p], edges_[p + 1]);
  }

  Complex operator()(double t) const {
    if (t >= edges_.back()) return cum_.back();
    const auto it = std::upper_bound(edges_.begin(), edges_.end(), t);
    const auto p = static_cast<std::size_t>(it - edges_.begin()) - 1;
    return cum_[p] + piece(edges_[p], t);
  }

 private:
  Complex piece(double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Complex sum = 0.0;
    for (int i = 0; i < rule_.size(); ++i) {
      const double u = mid + half * rule_.nodes()[i];
      sum += rule_.weights()[i] * u * f_(u);
    }
    return half * sum;
  }

  const SampledProfile& f_;
  const GaussLegendre& rule_;
  std::vector<double> edges_;
  std::vector<Complex> cum_;
};

double translation_constant(const HypergroupIndex& alpha) {
  const double a = alpha.value();
  if (a <= -0.5) throw DomainError("translate_general: alpha = -1/2 is degenerate and not supported");
  return std::exp(std::lgamma(a + 1.0) - std::lgamma(a + 0.5) - std::lgamma(0.5));
}

// Nodes t_i on [0, pi] and weights C_alpha w_i sin^(2 alpha) t_i.
struct AngularRule {
  std::vector<double> half_sin_sq;  // sin^2(t/2)
  std::vector<double> weight;
};

AngularRule angular_rule(const HypergroupIndex& alpha, int n_nodes) {
  const double c = translation_constant(alpha);
  const auto& gl = GaussLegendre::get(n_nodes);
  AngularRule rule;
  for (int i = 0; i < gl.size(); ++i) {
    const double t = 0.5 * kPi * (gl.nodes()[i] + 1.0);
    const double st = std::sin(0.5 * t);
    rule.half_sin_sq.push_back(st * st);
    rule.weight.push_back(c * 0.5 * kPi * gl.weights()[i] * std::pow(std::sin(t), 2.0 * alpha.value()));
  }
  return rule;
}

// |x - y| for x = r e_1, y at angle t from e_1 and distance s; cancellation-free.
double chord(double r, double s, double half_sin_sq) {
  const double d = r - s;
  return std::sqrt(d * d + 4.0 * r * s * half_sin_sq);
}

}  // namespace

SampledProfile translate_half(const SampledProfile& f, double r) {
  if (!(r >= 0.0)) throw DomainError("translate_half: r must be >= 0");
  if (r == 0.0) return f;
  const auto& grid = f.grid();
  const MomentIntegral moment(f);
  std::vector<Complex> out(grid.n_points());
  parallel_for(out.size(), [&](std::size_t i) {
    const double s = grid[static_cast<int>(i)];
    out[i] = (moment(r + s) - moment(std::fabs(r - s))) / (2.0 * r * s);
  });
  SampledProfile result(grid, std::move(out), f.domain());
  result.set_truncated(f.truncated() || r + grid[grid.n_points() - 1] > grid.r_max());
  return result;
}

SampledProfile translate_general(const HypergroupIndex& alpha, const SampledProfile& f, double r,
                                 int n_nodes) {
  if (!(r >= 0.0)) throw DomainError("translate_general: r must be >= 0");
  const auto rule = angular_rule(alpha, n_nodes);
  if (r == 0.0) return f;
  const auto& grid = f.grid();
  std::vector<Complex> out(grid.n_points());
  parallel_for(out.size(), [&](std::size_t i) {
    const double s = grid[static_cast<int>(i)];
    Complex sum = 0.0;
    for (std::size_t k = 0; k < rule.weight.size(); ++k) sum += rule.weight[k] * f(chord(r, s, rule.half_sin_sq[k]));
    out[i] = sum;
  });
  SampledProfile result(grid, std::move(out), f.domain());
  result.set_truncated(f.truncated() || r + grid[grid.n_points() - 1] > grid.r_max());
  return result;
}

Complex convolve_points(const HypergroupIndex& alpha, double r, double s, const EvenFunction& f,
                        int n_nodes) {
  if (!(r >= 0.0) || !(s >= 0.0)) throw DomainError("convolve_points: r and s must be >= 0");
  const auto rule = angular_rule(alpha, n_nodes);
  if (r == 0.0) return f(s);
  if (s == 0.0) return f(r);
  Complex sum = 0.0;
  for (std::size_t k = 0; k < rule.weight.size(); ++k) sum += rule.weight[k] * f(chord(r, s, rule.half_sin_sq[k]));
  return sum;
}

EvenFunction translate(const HypergroupIndex& alpha, const EvenFunction& f, double r, int n_nodes) {
  translation_constant(alpha);
  if (alpha.value() == 0.5) {
    // Radial form, split at the breakpoints of f so indicators integrate exactly.
    return EvenFunction(
        [f, r](double s) -> Complex {
          if (r == 0.0) return f(s);
          if (s == 0.0) return f(r);
          const auto q = composite_nodes(std::fabs(r - s), r + s, 0.125, 16, f.breakpoints());
          Complex sum = 0.0;
          for (std::size_t i = 0; i < q.size(); ++i) sum += q.w[i] * q.x[i] * f(q.x[i]);
          return sum / (2.0 * r * s);
        },
        f.support() + r);
  }
  return EvenFunction([alpha, f, r, n_nodes](double s) { return convolve_points(alpha, r, s, f, n_nodes); },
                      f.support() + r);
}

SampledProfile dilate(const HypergroupIndex& alpha, const SampledProfile& f, double a) {
  if (!(a > 0.0)) throw DomainError("dilate: a must be positive");
  const double scale = std::pow(a, -(alpha.value() + 1.0));
  std::vector<Complex> v = f.values();
  for (auto& x : v) x *= scale;
  SampledProfile out(RadialGrid(f.grid().r_max() * a, f.grid().n_points()), std::move(v), f.domain());
  out.set_truncated(f.truncated());
  return out;
}

EvenFunction dilate(const HypergroupIndex& alpha, const EvenFunction& f, double a) {
  if (!(a > 0.0)) throw DomainError("dilate: a must be positive");
  const double scale = std::pow(a, -(alpha.value() + 1.0));
  std::vector<double> breaks = f.breakpoints();
  for (auto& b : breaks) b *= a;
  return EvenFunction([f, a, scale](double x) { return scale * f(x / a); }, f.support() * a, std::move(breaks));
}

}  // namespace radial
