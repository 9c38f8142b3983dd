// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <vector>

#include "radial/profile.hpp"
#include "radial/special.hpp"

namespace radial {

struct AdmissibilityResult {
  /// C_g = int_0^inf |g_hat(lambda)|^2 dlambda / lambda over the resolved range.
  double constant = 0.0;
  /// Set when int_{1e-12}^{1e-6} |g_hat|^2 dlambda / lambda is not negligible,
  /// i.e. the integral diverges logarithmically at 0.
  bool divergent = false;
};

AdmissibilityResult admissibility_check(const EvenFunction& g_hat);

/// C_g; throws ToleranceError when g is not admissible.
double admissibility(const EvenFunction& g_hat);

/// Sample points of the scale-space measure
///   d omega~(r, a) = a^-(2 alpha + 3) da d omega_alpha(r).
struct CwtGrid {
  std::vector<double> r;
  std::vector<double> r_weight;
  std::vector<double> a;
  std::vector<double> a_weight;

  /// Midpoints in r on [0, r_max] and in log a on [a_min, a_max].
  static CwtGrid log_uniform(const HypergroupIndex& alpha, double r_max, int n_r, double a_min, double a_max,
                             int n_a);
};

/// Psi_g f(r, a) = int f_hat conj(j_alpha(lambda r) a^(alpha+1) g_hat(a lambda)) d omega_alpha,
/// row-major with one row per scale: out[m * r.size() + i] at (r_i, a_m).
std::vector<Complex> cwt(const HypergroupIndex& alpha, const EvenFunction& f_hat, const EvenFunction& g_hat,
                         const CwtGrid& grid);

/// sum |Psi|^2 against the grid weights.
double cwt_energy(const std::vector<Complex>& psi, const CwtGrid& grid);

/// Cross term sum Psi_1 conj(Psi_2) against the grid weights.
Complex cwt_cross(const std::vector<Complex>& psi1, const std::vector<Complex>& psi2, const CwtGrid& grid);

struct FrameSpec {
  HypergroupIndex alpha{0.5};
  /// Band limit: supp g_hat within [0, l].
  double l = 1.0;
  std::vector<double> Q;
  int n_max = 1;
};

/// Bessel frame g_{n,q} = M_n^alpha T_{r_n q} D_q g, r_n = nu_{alpha,n} / l.
class Frame {
 public:
  /// Throws ToleranceError when g_hat does not vanish beyond l.
  Frame(EvenFunction g_hat, FrameSpec spec);

  const FrameSpec& spec() const noexcept { return spec_; }

  /// <g_{n,q}, f> = int rho_n(q lambda / l) q^(alpha+1) g_hat(q lambda) conj(f_hat) d omega_alpha.
  Complex coefficient(int n, double q, const EvenFunction& f_hat) const;

  /// All n <= n_max at once, as Fourier-Bessel coefficients on [0, 1] of
  /// D_{1/l}(g_hat) D_{q/l}(conj f_hat).
  std::vector<Complex> coefficients(double q, const EvenFunction& f_hat) const;

  /// sum_q sum_{n <= n_max} |<g_{n,q}, f>|^2.
  double energy(const EvenFunction& f_hat) const;

  /// l^(2 alpha + 2) int |f_hat|^2 sum_q |g_hat(q lambda)|^2 d omega_alpha, the n_max -> inf limit.
  double limit_energy(const EvenFunction& f_hat) const;

  /// min and max of sum_q |g_hat(q lambda)|^2 over grid_pts log-spaced points of
  /// [lo, hi], scaled by l^(2 alpha + 2): estimates of the frame bounds.
  std::pair<double, double> bound_estimates(double lo, double hi, int grid_pts = 4096) const;

 private:
  EvenFunction g_hat_;
  FrameSpec spec_;
  FourierBesselBasis basis_;
  std::vector<double> mu_;
  std::vector<double> w_;
  std::vector<double> rho_;  // rho_[(n-1) * mu_.size() + i]
};

/// Quantities of the standard-lattice criterion for Q = {a^k}.
struct LatticeBounds {
  double sigma = 0.0;  // best ess inf of |g_hat| over some [a^n, a^(n+1)]
  double tau = 0.0;    // sup |g_hat|
  int M = 0;           // max number of dilates a^-k supp g_hat covering a point
  double sum_min = 0.0;
  double sum_max = 0.0;  // range of sum_k |g_hat(a^k lambda)|^2

  bool holds() const noexcept { return sigma * sigma <= sum_min && sum_max <= M * tau * tau; }
};

/// Evaluated on grid_pts log-spaced midpoints of one period [1, a). g_hat
/// must have compact support away from 0 (DomainError).
LatticeBounds lattice_bounds(const EvenFunction& g_hat, double a, int grid_pts = 4096);

}  // namespace radial
