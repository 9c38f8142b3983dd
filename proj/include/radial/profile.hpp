// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace radial {

using Complex = std::complex<double>;

/// Uniform midpoint grid on [0, r_max]: r_i = (i + 1/2) * spacing.
class RadialGrid {
 public:
  RadialGrid(double r_max, int n_points);

  double r_max() const noexcept { return r_max_; }
  int n_points() const noexcept { return n_points_; }
  double spacing() const noexcept { return r_max_ / n_points_; }
  double operator[](int i) const noexcept { return (i + 0.5) * spacing(); }
  std::vector<double> abscissae() const;

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

 private:
  double r_max_;
  int n_points_;
};

/// Which side of the Hankel transform a profile lives on. The independent
/// variable is r for radial profiles and lambda for spectral ones.
enum class Domain { radial, spectral };

const char* to_string(Domain d);

/// Complex samples of an even function on a RadialGrid.
///
/// Evaluation between samples uses 6-point Lagrange interpolation on the
/// even extension; the profile is taken to vanish beyond r_max.
class SampledProfile {
 public:
  SampledProfile(RadialGrid grid, std::vector<Complex> values, Domain domain = Domain::radial);

  const RadialGrid& grid() const noexcept { return grid_; }
  Domain domain() const noexcept { return domain_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  std::vector<Complex>& values() noexcept { return values_; }
  int size() const noexcept { return grid_.n_points(); }
  Complex operator[](int i) const { return values_[i]; }

  /// Interpolated value at x; even in x, zero for |x| > r_max.
  Complex operator()(double x) const;

  /// Set when an operation had to read the profile beyond r_max.
  bool truncated() const noexcept { return truncated_; }
  void set_truncated(bool t = true) noexcept { truncated_ = t; }

 private:
  RadialGrid grid_;
  std::vector<Complex> values_;
  Domain domain_;
  bool truncated_ = false;
};

/// An even function on R given by a callable evaluated at |x|.
///
/// support is the smallest S with f = 0 on (S, inf) (infinity when not
/// compact). breakpoints lists points in [0, support] where f or a low
/// derivative is discontinuous; quadrature splits its panels there.
class EvenFunction {
 public:
  using Callable = std::function<Complex(double)>;

  EvenFunction() = default;
  explicit EvenFunction(Callable f, double support = std::numeric_limits<double>::infinity(),
                        std::vector<double> breakpoints = {});

  Complex operator()(double x) const { return f_(x < 0.0 ? -x : x); }
  explicit operator bool() const noexcept { return static_cast<bool>(f_); }

  double support() const noexcept { return support_; }
  bool compact() const noexcept { return support_ < std::numeric_limits<double>::infinity(); }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

  /// Integration limit: support when compact, otherwise the fallback.
  double extent(double fallback) const noexcept { return compact() ? support_ : fallback; }

 private:
  Callable f_;
  double support_ = std::numeric_limits<double>::infinity();
  std::vector<double> breakpoints_;
};

/// An EvenFunction backed by a sampled profile.
EvenFunction as_function(const SampledProfile& p);

/// Samples of f at the grid abscissae. Throws DomainError on non-finite values.
SampledProfile sample(const EvenFunction& f, const RadialGrid& grid, Domain domain);

/// Names of the closed-form builtins.
///
///   gaussian          exp(-x^2/2) on either side (fixed by every Hankel transform)
///   shannon-scaling   radial sqrt(2/pi)(sin x - x cos x)/x^3, spectrum chi_[0,1)
///   shannon-wavelet   radial analogue with spectrum chi_[1,2)
///   indicator         chi_[0,1) (radial or spectral)
///   meyer-scaling     spectrum only
///   hat-spline        spectrum sinc^2(pi lambda / 2) only
///
/// The radial closed forms of shannon-scaling and shannon-wavelet are for
/// alpha = 1/2.
const std::vector<std::string>& builtin_names();

/// Closed form of builtin `name` on the requested side. Throws DomainError
/// when no closed form exists for that side.
EvenFunction builtin(const std::string& name, Domain domain);

/// Shannon closed forms, exposed for oracles and the classical bridge.
double shannon_scaling_radial(double x);
double shannon_wavelet_radial(double x);

/// Classical Meyer transition polynomial nu(x) = x^4 (35 - 84x + 70x^2 - 20x^3),
/// clamped to [0, 1].
double meyer_transition(double x);

}  // namespace radial
