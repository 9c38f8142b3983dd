// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/wavelet.hpp"

#include <cmath>
#include <numbers>

#include "radial/error.hpp"
#include "radial/hankel.hpp"

namespace radial {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double z) {
  if (std::fabs(z) < 1e-4) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

// p(x) = (sin 2x - sin x) / x, with p(0) = 1.
double shannon_p(double x) {
  if (std::fabs(x) < 1e-4) return 1.0 - 7.0 * x * x / 6.0;
  return (std::sin(2.0 * x) - std::sin(x)) / x;
}

Wavelet make_wavelet(const ScalingFunction& phi, std::function<Complex(double)> G,
                     const std::vector<double>& g_breaks) {
  const EvenFunction s = phi.spectrum();
  const double support = 2.0 * s.support();
  // Breaks of phi_hat(mu/2), and mu with mu/2 + 1 = +-c (mod 2) for breaks c of G.
  std::vector<double> breaks;
  for (double b : s.breakpoints()) breaks.push_back(2.0 * b);
  const double upper = std::isfinite(support) ? support : 128.0;
  for (double c : g_breaks) {
    for (int m = -1; 2.0 * (2 * m - 1 - c) <= upper; ++m) {
      for (double mu : {2.0 * (c + 2 * m - 1), 2.0 * (-c + 2 * m - 1)}) {
        if (mu > 0.0 && mu < upper) breaks.push_back(mu);
      }
    }
  }
  EvenFunction spectrum(
      [s, G](double mu) { return std::conj(G(0.5 * mu + 1.0)) * s(0.5 * mu); }, support, std::move(breaks));
  return Wavelet{std::move(spectrum), std::nullopt};
}

}  // namespace

Wavelet build_wavelet(const ScalingFunction& phi, const FilterSymbol& G, double tol) {
  if (!phi.orthonormal()) throw DomainError("build_wavelet: scaling function is not orthonormal");
  const double residual = G.identity_residual();
  if (residual > tol) throw ToleranceError("build_wavelet: filter identity violated by " + std::to_string(residual));
  Wavelet psi = make_wavelet(phi, [G](double l) { return G(l); }, G.breakpoints());
  if (phi.recipe().kind == "shannon") psi.radial = builtin("shannon-wavelet", Domain::radial);
  return psi;
}

Wavelet build_wavelet(const ScalingFunction& phi, const CosineFilter& g, double tol) {
  if (!phi.orthonormal()) throw DomainError("build_wavelet: scaling function is not orthonormal");
  const double residual = g.identity_residual();
  if (residual > tol) throw ToleranceError("build_wavelet: filter identity violated by " + std::to_string(residual));
  return make_wavelet(phi, [g](double l) { return g(l); }, {});
}

EvenFunction wavelet_spectrum(const Wavelet& psi, int j, int k) {
  if (k < 1) throw DomainError("wavelet_spectrum: k must be >= 1");
  const double s = std::ldexp(1.0, -j);
  const double amp = std::pow(2.0, -1.5 * j);
  const double m = 2.0 * k - 1.0;
  const double half_norm = 0.5 * radial_norm(m);
  std::vector<double> breaks = psi.spectrum.breakpoints();
  for (auto& b : breaks) b /= s;
  const EvenFunction base = psi.spectrum;
  return EvenFunction(
      [base, s, amp, m, half_norm](double lambda) {
        const double l = s * lambda;
        return amp * half_norm * sinc(0.5 * l * m * kPi) * base(l);
      },
      base.support() / s, std::move(breaks));
}

SampledProfile wavelet_family(const Wavelet& psi, int j, int k, const RadialGrid& grid) {
  const auto spectrum = wavelet_spectrum(psi, j, k);
  return hankel_of(kRadial3D, spectrum, grid, Domain::spectral);
}

double shannon_wavelet_translate(int k, double x) {
  const double shift = (2.0 * k - 1.0) * kPi / 2.0;
  const double pre = std::pow(2.0 * kPi, -0.25);
  if (std::fabs(x) < 1e-6) {
    // Limit: -2 p'(shift) / 1 with p' by central difference.
    const double h = 1e-5;
    return -pre * (shannon_p(shift + h) - shannon_p(shift - h)) / h;
  }
  return pre * (shannon_p(x - shift) - shannon_p(x + shift)) / x;
}

EvenFunction w_space_lift(const SineSeries& alpha, const ScalingFunction& phi, const FilterSymbol& G) {
  for (int k = 2; k <= alpha.size(); k += 2) {
    if (alpha.coefficient(k) != 0.0) throw DomainError("w_space_lift: alpha is not in S0");
  }
  Complex slope = 0.0;  // alpha(lambda) / lambda at 0
  for (int k = 1; k <= alpha.size(); ++k) slope += alpha.coefficient(k) * (k * kPi);
  slope *= std::sqrt(2.0);
  const double pre = std::pow(2.0 * kPi, 0.25);
  const EvenFunction s = phi.spectrum();
  std::vector<double> breaks = s.breakpoints();
  for (double c : G.breakpoints()) {
    for (int m = 0; m <= 2; ++m) {
      for (double b : {c + 2 * m - 1, -c + 2 * m - 1}) {
        if (b > 0.0) breaks.push_back(b);
      }
    }
  }
  return EvenFunction(
      [alpha, s, G, slope, pre](double lambda) {
        const Complex ratio = lambda < 1e-12 ? slope : alpha(lambda) / lambda;
        return pre * ratio * std::conj(G(lambda + 1.0)) * s(lambda);
      },
      s.support(), std::move(breaks));
}

}  // namespace radial
