// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radial/cosine_filter.hpp"
#include "radial/profile.hpp"

namespace radial {

/// Normalizer M_k = 2^(1/4) pi^(5/4) k of the radial Fourier-Bessel functions
/// on [0, 1]; half-integer k is allowed.
double radial_norm(double k);

/// rho_k(lambda) = M_k j(k pi lambda) with j(z) = sin z / z.
double rho(double k, double lambda);

/// Even classical scaling function phi_R on the real line, with derivative.
struct ClassicalOrigin {
  std::string name;
  std::function<double(double)> phi;
  std::function<double(double)> dphi;
};

/// How a scaling function was produced; enough to rebuild it from a file.
struct ScalingRecipe {
  /// shannon, meyer, hat-spline, or tabulated (classical spectrum samples).
  std::string kind;
  /// Samples of the classical transform F(phi_R)(xi) for kind == tabulated.
  std::optional<SampledProfile> classical_spectrum;
  bool orthogonalized = false;
  int n_max = 0;
};

/// A radial scaling function phi, held through its Hankel transform phi_hat
/// (even extension implied).
class ScalingFunction {
 public:
  ScalingFunction(EvenFunction spectrum, bool orthonormal, ScalingRecipe recipe);

  const EvenFunction& spectrum() const noexcept { return spectrum_; }
  Complex hat(double lambda) const { return spectrum_(lambda); }
  bool orthonormal() const noexcept { return orthonormal_; }
  bool band_limited() const noexcept { return spectrum_.compact(); }
  const ScalingRecipe& recipe() const noexcept { return recipe_; }

  /// Finite integration limit for spectral quadrature: the support when
  /// compact, else 64 (where the builtin non-band-limited spectra have decayed
  /// below 1e-8).
  double extent() const noexcept { return spectrum_.extent(64.0); }

  /// Lattice-sum cutoff: exact for band-limited spectra, 64 otherwise.
  int default_n_max() const noexcept;

  std::optional<EvenFunction> radial;
  std::optional<ClassicalOrigin> classical;

 private:
  EvenFunction spectrum_;
  bool orthonormal_;
  ScalingRecipe recipe_;
};

/// Coefficients alpha_1..alpha_K of beta(lambda) = sum alpha_k sqrt(2) sin(k pi lambda),
/// an odd 2-periodic function. The S0 subspace admits odd k only.
class SineSeries {
 public:
  enum class Space { S, S0 };

  SineSeries(std::vector<Complex> coefficients, Space space = Space::S);

  Space space() const noexcept { return space_; }
  int size() const noexcept { return static_cast<int>(alpha_.size()); }
  /// alpha_k for k >= 1, 0 beyond the stored range.
  Complex coefficient(int k) const noexcept {
    return k >= 1 && k <= size() ? alpha_[k - 1] : Complex(0.0);
  }
  const std::vector<Complex>& coefficients() const noexcept { return alpha_; }

  Complex operator()(double lambda) const;
  /// L2[0, 1] norm, equal to the l2 norm of the coefficients.
  double norm() const;

  /// gamma(lambda) = G(lambda) sin(2 pi lambda) expanded exactly from the
  /// cosine coefficients of G.
  static SineSeries from_filter(const CosineFilter& g);

 private:
  std::vector<Complex> alpha_;
  Space space_;
};

/// Lattice sum P_phi(lambda) = sum_{|n| <= n_max} |phi_hat(lambda + 2n)|^2,
/// evaluated at lambda reduced into [0, 1] so the result is even and
/// 2-periodic by construction.
double periodization_at(const ScalingFunction& phi, double lambda, int n_max);

/// Samples of P_phi on grid_pts midpoints of [0, 1].
struct PeriodizationProfile {
  std::vector<double> lambda;
  std::vector<double> values;
  int n_max = 0;

  /// sup |P - 1|.
  double deviation_from_one() const;
};

/// n_max <= 0 selects phi.default_n_max().
PeriodizationProfile periodize(const ScalingFunction& phi, int grid_pts = 4096, int n_max = 0);

struct RieszBounds {
  double A = 0.0;
  double B = 0.0;
  /// Condition (RB): 0 < A and B < infinity.
  bool satisfied() const noexcept;
};

RieszBounds riesz_bounds(const PeriodizationProfile& p);

/// phi_hat* = phi_hat / sqrt(P_phi). Throws ToleranceError when the lower
/// Riesz bound vanishes.
ScalingFunction orthogonalize(const ScalingFunction& phi, int n_max = 0, int grid_pts = 4096);

/// Radial scaling function with phi_hat(lambda) = sqrt(2 pi) F(xi = pi lambda),
/// F the (unitary) Fourier transform of an even classical scaling function.
/// Rejects a non-even F (DomainError), a zero F or a weighted norm that does
/// not settle on the truncated range (ToleranceError). The orthonormal flag
/// is set iff P_phi = 1 within orthonormal_tol.
ScalingFunction from_classical(const std::function<Complex(double)>& F, double support_xi,
                               std::vector<double> breakpoints_xi, ScalingRecipe recipe,
                               double orthonormal_tol = 1e-8);

/// Tabulated classical spectrum, treated as even.
ScalingFunction from_classical(const SampledProfile& F);

ScalingFunction shannon_scaling();
ScalingFunction meyer_scaling();
/// Bridge of the linear B-spline max(0, 1 - |x|); not orthonormal.
ScalingFunction hat_spline();
/// Builtin by name: shannon, meyer or hat-spline.
ScalingFunction scaling_builtin(const std::string& kind);

/// Spectrum of phi_{j,k} = D_{2^-j}(M_k T^(k) phi):
///   2^(-3j/2) rho_k(2^-j lambda) phi_hat(2^-j lambda).
EvenFunction basis_spectrum(const ScalingFunction& phi, int j, int k);

enum class BasisPath { spectral, classical };

/// phi_{j,k} sampled on the radial grid. The spectral path inverts the
/// spectrum by quadrature; the classical path evaluates
///   phi_{0,k}(x) = (2 pi)^(-1/4) x^-1 (phi_R(x/pi - k) - phi_R(x/pi + k))
/// dilated to level j, and throws DomainError without a classical origin.
SampledProfile translate_basis(const ScalingFunction& phi, int j, int k, const RadialGrid& grid,
                               BasisPath path = BasisPath::spectral);

/// Gram matrix <u_a, u_b> of spectra in L2(H) by composite Gauss-Legendre on
/// [0, limit] (limit <= 0: the largest support, or 64 if unbounded).
std::vector<std::vector<Complex>> gram_matrix(const std::vector<EvenFunction>& spectra, double limit = 0.0);

/// max |G - I| over all entries.
double identity_deviation(const std::vector<std::vector<Complex>>& gram);

/// The filter G on [0, 1] evaluated exactly from phi_hat(2 lambda) / phi_hat(lambda),
/// extended to R as an even 2-periodic function.
class FilterSymbol {
 public:
  FilterSymbol(std::function<Complex(double)> base, std::vector<double> breakpoints);

  Complex operator()(double lambda) const;
  /// Points of [0, 1] where G may be discontinuous.
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  /// sup | |G(l)|^2 + |G(l+1)|^2 - 1 | over grid_pts midpoints of [0, 1].
  double identity_residual(int grid_pts = 4096) const;

 private:
  std::function<Complex(double)> base_;
  std::vector<double> breakpoints_;
};

struct ExtractedFilter {
  FilterSymbol symbol;
  CosineFilter filter;
  double epsilon = 0.0;
  /// Sample points (out of grid_pts) where the ratio was indeterminate and
  /// the completion identity supplied |G|, and where G was set to 0.
  int completed = 0;
  int masked = 0;
};

/// Filter of the two-scale relation phi_hat(2 lambda) = G(lambda) phi_hat(lambda).
/// The ratio is used where |phi_hat| > 1e-8 max|phi_hat|; elsewhere, for
/// orthonormal phi, |G(l)| = sqrt(1 - |G(1 - l)|^2); otherwise 0. g_n come from
/// cosine projection over grid_pts Gauss-Legendre panels.
ExtractedFilter extract_filter(const ScalingFunction& phi, int grid_pts = 4096, int n_coeffs = 64);

/// gamma(lambda) = G(lambda) sin(2 pi lambda).
std::function<Complex(double)> gamma_from(const FilterSymbol& G);

/// sup over grid_pts midpoints of (0, extent] of
///   | sin(2 k pi l) phi_hat(2 l) - k gamma(l) U_{k-1}(cos 2 pi l) phi_hat(l) |,
/// with U normalized to U(1) = 1. k = 1 is the two-scale relation itself.
double two_scale_residual(const ScalingFunction& phi, const std::function<Complex(double)>& gamma, int k = 1,
                          int grid_pts = 4096);
double two_scale_check(const ScalingFunction& phi, const SineSeries& gamma, int grid_pts = 4096);

struct MraReport {
  RieszBounds riesz;
  double two_scale_residual = 0.0;
  double phi_hat_at_zero = 0.0;
  /// Gram deviation of {M_k T^(k) phi}_{k<=8}; empty unless phi is flagged orthonormal.
  std::optional<double> gram_deviation;
  /// phi_hat(0) != 0.
  bool generates_mra = false;
  /// |phi_hat(0)| = 1 within 1e-6, expected for orthonormal scaling functions.
  bool unit_at_zero = false;
};

MraReport validate_mra(const ScalingFunction& phi);

/// Relative distance from T^(1) phi_{0,1} to span{phi_{0,k}}_{k<=K} for an
/// orthonormal phi. Zero exactly when that translate stays in V_0.
double shift_residual(const ScalingFunction& phi, int K);

/// Shannon cosine coefficients g_0 = 1/(2 sqrt 2), g_n = sqrt2 sin(n pi/2)/(n pi).
CosineFilter shannon_filter(int n_coeffs);

/// Bound on |sqrt2 sum_{n>N} g_n| and its alternating analogue for Shannon.
double shannon_tail_bound(int n_coeffs);

}  // namespace radial
