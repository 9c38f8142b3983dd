// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <vector>

namespace radial {

/// Index alpha >= -1/2 of the Bessel-Kingman hypergroup H_alpha.
///
/// Carries the Haar measure
///   d omega_alpha(r) = r^(2 alpha + 1) dr / (2^alpha Gamma(alpha + 1)),
/// which every weighted integral in the library is taken against. alpha = 1/2
/// is the radial analysis of R^3.
class HypergroupIndex {
 public:
  explicit HypergroupIndex(double alpha);

  double value() const noexcept { return alpha_; }

  /// Density of omega_alpha with respect to Lebesgue measure at r >= 0.
  double weight(double r) const noexcept;

  /// Gamma(alpha + 1).
  double gamma_alpha1() const noexcept { return gamma_alpha1_; }

  friend bool operator==(const HypergroupIndex& a, const HypergroupIndex& b) {
    return a.alpha_ == b.alpha_;
  }

 private:
  double alpha_;
  double gamma_alpha1_;
  double measure_norm_;
};

/// The three-dimensional radial case.
inline const HypergroupIndex kRadial3D{0.5};

/// Normalized Bessel function j_alpha(z) = Gamma(alpha+1) (z/2)^(-alpha) J_alpha(z).
/// Even in z, j_alpha(0) = 1.
double bessel_j(const HypergroupIndex& alpha, double z);

/// Ordinary Bessel function of the first kind J_alpha(z), z >= 0.
double bessel_J(const HypergroupIndex& alpha, double z);

/// n-th positive zero of j_alpha (n >= 1). Throws ConvergenceError if the
/// Newton refinement does not settle within 50 iterations.
double bessel_zero(const HypergroupIndex& alpha, int n);

/// Normalizer M_n^alpha of the Fourier-Bessel function rho_n^alpha.
double fourier_bessel_norm(const HypergroupIndex& alpha, int n);

/// rho_n^alpha(r) = M_n^alpha j_alpha(nu_{alpha,n} r); orthonormal on [0, 1]
/// with respect to omega_alpha.
double fourier_bessel(const HypergroupIndex& alpha, int n, double r);

/// Precomputed zeros and normalizers for rho_1 .. rho_{n_max}.
class FourierBesselBasis {
 public:
  FourierBesselBasis(const HypergroupIndex& alpha, int n_max);

  int size() const noexcept { return static_cast<int>(zeros_.size()); }
  const HypergroupIndex& index() const noexcept { return alpha_; }
  double zero(int n) const { return zeros_.at(n - 1); }
  double norm(int n) const { return norms_.at(n - 1); }
  double operator()(int n, double r) const;

 private:
  HypergroupIndex alpha_;
  std::vector<double> zeros_;
  std::vector<double> norms_;
};

/// s_k(r) = sqrt(2) sin(k pi r); odd and 2-periodic, orthonormal on [0, 1].
double sine_basis(int k, double r);

/// Chebyshev polynomial of the second kind normalized to U_k(1) = 1, i.e.
/// sin((k+1) t) / ((k+1) sin t) with x = cos t. Requires |x| <= 1.
double chebyshev_u(int k, double x);

}  // namespace radial
