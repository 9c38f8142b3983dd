// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radial/error.hpp"

namespace radial {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kStencil = 6;

// sqrt(2/pi)(sin x - x cos x)/x^3; Taylor series below x = 1e-2.
double shannon_kernel(double x) {
  x = std::fabs(x);
  const double c = std::sqrt(2.0 / kPi);
  if (x < 1e-2) {
    const double x2 = x * x;
    return c * (1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0);
  }
  return c * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

}  // namespace

RadialGrid::RadialGrid(double r_max, int n_points) : r_max_(r_max), n_points_(n_points) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("RadialGrid: r_max must be positive");
  if (n_points < 2) throw DomainError("RadialGrid: n_points must be >= 2");
}

std::vector<double> RadialGrid::abscissae() const {
  std::vector<double> r(n_points_);
  for (int i = 0; i < n_points_; ++i) r[i] = (*this)[i];
  return r;
}

const char* to_string(Domain d) { return d == Domain::radial ? "radial" : "spectral"; }

SampledProfile::SampledProfile(RadialGrid grid, std::vector<Complex> values, Domain domain)
    : grid_(grid), values_(std::move(values)), domain_(domain) {
  if (static_cast<int>(values_.size()) != grid_.n_points()) {
    throw GridMismatchError("SampledProfile: sample count differs from grid n_points");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("SampledProfile: non-finite sample");
    }
  }
}

Complex SampledProfile::operator()(double x) const {
  x = std::fabs(x);
  if (x > grid_.r_max()) return 0.0;
  const int n = grid_.n_points();
  const double h = grid_.spacing();
  // Index of the sample at or left of x; -1 means x < r_0.
  const double u = x / h - 0.5;
  const int left = static_cast<int>(std::floor(u));
  int first = left - kStencil / 2 + 1;
  // Negative indices reflect: sample -1 - i sits at -r_i. Only the upper end
  // needs clamping.
  first = std::min(first, n - kStencil);
  Complex sum = 0.0;
  for (int a = 0; a < kStencil; ++a) {
    const int ia = first + a;
    const double xa = (ia + 0.5) * h;
    double w = 1.0;
    for (int b = 0; b < kStencil; ++b) {
      if (b == a) continue;
      const double xb = (first + b + 0.5) * h;
      w *= (x - xb) / (xa - xb);
    }
    const Complex v = ia >= 0 ? values_[ia] : values_[-1 - ia];
    sum += w * v;
  }
  return sum;
}

EvenFunction::EvenFunction(Callable f, double support, std::vector<double> breakpoints)
    : f_(std::move(f)), support_(support), breakpoints_(std::move(breakpoints)) {
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

EvenFunction as_function(const SampledProfile& p) {
  return EvenFunction([p](double x) { return p(x); }, p.grid().r_max());
}

SampledProfile sample(const EvenFunction& f, const RadialGrid& grid, Domain domain) {
  std::vector<Complex> v(grid.n_points());
  for (int i = 0; i < grid.n_points(); ++i) v[i] = f(grid[i]);
  return SampledProfile(grid, std::move(v), domain);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"gaussian",  "shannon-scaling", "shannon-wavelet",
                                              "indicator", "meyer-scaling",   "hat-spline"};
  return names;
}

double shannon_scaling_radial(double x) { return shannon_kernel(x); }

double shannon_wavelet_radial(double x) {
  // chi_[1,2) has transform 8 phi(2x) - phi(x) where phi = shannon_kernel.
  return 8.0 * shannon_kernel(2.0 * x) - shannon_kernel(x);
}

double meyer_transition(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

EvenFunction builtin(const std::string& name, Domain domain) {
  const bool radial = domain == Domain::radial;
  if (name == "gaussian") {
    return EvenFunction([](double x) { return Complex(std::exp(-0.5 * x * x)); });
  }
  if (name == "indicator") {
    return EvenFunction([](double x) { return Complex(x < 1.0 ? 1.0 : 0.0); }, 1.0, {1.0});
  }
  if (name == "shannon-scaling") {
    if (radial) return EvenFunction([](double x) { return Complex(shannon_kernel(x)); });
    return builtin("indicator", Domain::spectral);
  }
  if (name == "shannon-wavelet") {
    if (radial) return EvenFunction([](double x) { return Complex(shannon_wavelet_radial(x)); });
    return EvenFunction([](double x) { return Complex(x >= 1.0 && x < 2.0 ? 1.0 : 0.0); }, 2.0,
                        {1.0, 2.0});
  }
  if (!radial && name == "meyer-scaling") {
    return EvenFunction(
        [](double x) {
          if (x <= 2.0 / 3.0) return Complex(1.0);
          if (x >= 4.0 / 3.0) return Complex(0.0);
          return Complex(std::cos(0.5 * kPi * meyer_transition(1.5 * x - 1.0)));
        },
        4.0 / 3.0, {2.0 / 3.0, 4.0 / 3.0});
  }
  if (!radial && name == "hat-spline") {
    return EvenFunction([](double x) {
      const double t = 0.5 * kPi * x;
      if (t < 1e-4) return Complex(1.0 - t * t / 3.0);
      const double s = std::sin(t) / t;
      return Complex(s * s);
    });
  }
  throw DomainError("builtin: no " + std::string(to_string(domain)) + " closed form for '" + name + "'");
}

}  // namespace radial
