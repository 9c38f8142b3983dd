// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "radial/error.hpp"

namespace radial {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this argument the power series is summed in extended precision.
// Above it, J is taken from the Hankel expansion at the fractional base order
// and carried to alpha by upward recurrence, which is stable for z > alpha.
double series_limit(double alpha) { return std::max(16.0, alpha); }

// sum_n (-z^2/4)^n / (n! (alpha+1)_n)
double normalized_series(double alpha, double z) {
  const long double x = -0.25L * static_cast<long double>(z) * z;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int n = 1; n < 500; ++n) {
    term *= x / (static_cast<long double>(n) * (static_cast<long double>(alpha) + n));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) && n > z) break;
  }
  return static_cast<double>(sum);
}

// Hankel expansion J_alpha(z) ~ sqrt(2/(pi z)) (P cos chi - Q sin chi),
// chi = z - (alpha/2 + 1/4) pi. Returns J_alpha(z).
double hankel_asymptotic(double alpha, double z) {
  const double mu = 4.0 * alpha * alpha;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = INFINITY;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * z);
    if (term == 0.0) break;
    if (std::fabs(term) > last) break;  // expansion started to diverge
    last = std::fabs(term);
    // terms alternate between Q (odd k) and P (even k) with sign (-1)^floor(k/2)
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 1) {
      q += sign * term;
    } else {
      p += sign * term;
    }
    if (std::fabs(term) < 1e-17) break;
  }
  const double phase = (0.5 * alpha + 0.25) * kPi;
  const double cz = std::cos(z);
  const double sz = std::sin(z);
  const double cp = std::cos(phase);
  const double sp = std::sin(phase);
  const double cos_chi = cz * cp + sz * sp;
  const double sin_chi = sz * cp - cz * sp;
  return std::sqrt(2.0 / (kPi * z)) * (p * cos_chi - q * sin_chi);
}

void require_index(double alpha) {
  if (!(alpha >= -0.5)) {
    throw DomainError("hypergroup index must satisfy alpha >= -1/2, got " + std::to_string(alpha));
  }
}

// J_alpha(z) for z > series_limit(alpha).
double large_argument_J(double alpha, double z) {
  if (alpha < 1.0) return hankel_asymptotic(alpha, z);
  const double base = alpha - std::floor(alpha);
  const int steps = static_cast<int>(std::floor(alpha));
  double lower = hankel_asymptotic(base, z);
  double upper = hankel_asymptotic(base + 1.0, z);
  // J_{nu+1} = (2 nu / z) J_nu - J_{nu-1}
  for (int m = 1; m < steps; ++m) {
    const double nu = base + m;
    const double next = 2.0 * nu / z * upper - lower;
    lower = upper;
    upper = next;
  }
  return upper;
}

}  // namespace

HypergroupIndex::HypergroupIndex(double alpha) : alpha_(alpha) {
  require_index(alpha);
  gamma_alpha1_ = std::tgamma(alpha + 1.0);
  measure_norm_ = 1.0 / (std::pow(2.0, alpha) * gamma_alpha1_);
}

double HypergroupIndex::weight(double r) const noexcept {
  return measure_norm_ * std::pow(r, 2.0 * alpha_ + 1.0);
}

double bessel_j(const HypergroupIndex& index, double z) {
  const double alpha = index.value();
  z = std::fabs(z);
  if (z <= series_limit(alpha)) return normalized_series(alpha, z);
  const double scale = std::exp(std::lgamma(alpha + 1.0) + alpha * std::log(2.0 / z));
  return scale * large_argument_J(alpha, z);
}

double bessel_J(const HypergroupIndex& index, double z) {
  const double alpha = index.value();
  if (z < 0.0) throw DomainError("bessel_J: negative argument");
  if (z == 0.0) return alpha == 0.0 ? 1.0 : 0.0;
  if (z > series_limit(alpha)) return large_argument_J(alpha, z);
  const double scale = std::exp(alpha * std::log(0.5 * z) - std::lgamma(alpha + 1.0));
  return scale * normalized_series(alpha, z);
}

double bessel_zero(const HypergroupIndex& index, int n) {
  if (n < 1) throw DomainError("bessel_zero: n must be >= 1");
  const double alpha = index.value();
  const HypergroupIndex next(alpha + 1.0);

  // McMahon
  const double beta = (n + 0.5 * alpha - 0.25) * kPi;
  const double mu = 4.0 * alpha * alpha;
  const double b8 = 8.0 * beta;
  double z = beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);

  // d/dz j_alpha(z) = -z / (2 (alpha + 1)) j_{alpha+1}(z)
  double last = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 50; ++it) {
    const double f = bessel_j(index, z);
    const double df = -z / (2.0 * (alpha + 1.0)) * bessel_j(next, z);
    const double step = f / df;
    // Past convergence the step stalls at rounding level instead of shrinking.
    if (std::fabs(step) <= 4e-16 * z || (std::fabs(step) >= last && std::fabs(step) <= 1e-12 * z)) return z - step;
    z -= step;
    last = std::fabs(step);
  }
  throw ConvergenceError("bessel_zero: Newton iteration did not converge for alpha=" +
                         std::to_string(alpha) + ", n=" + std::to_string(n));
}

double fourier_bessel_norm(const HypergroupIndex& index, int n) {
  const double alpha = index.value();
  const double nu = bessel_zero(index, n);
  const double j_next = bessel_J(HypergroupIndex(alpha + 1.0), nu);
  return std::pow(2.0, 0.5 * (1.0 - alpha)) * std::pow(nu, alpha) /
         (std::sqrt(index.gamma_alpha1()) * std::fabs(j_next));
}

double fourier_bessel(const HypergroupIndex& index, int n, double r) {
  if (r < 0.0) throw DomainError("fourier_bessel: r must be >= 0");
  return fourier_bessel_norm(index, n) * bessel_j(index, bessel_zero(index, n) * r);
}

FourierBesselBasis::FourierBesselBasis(const HypergroupIndex& alpha, int n_max) : alpha_(alpha) {
  if (n_max < 1) throw DomainError("FourierBesselBasis: n_max must be >= 1");
  zeros_.reserve(n_max);
  norms_.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    zeros_.push_back(bessel_zero(alpha, n));
    norms_.push_back(fourier_bessel_norm(alpha, n));
  }
}

double FourierBesselBasis::operator()(int n, double r) const {
  return norm(n) * bessel_j(alpha_, zero(n) * r);
}

double sine_basis(int k, double r) { return std::numbers::sqrt2 * std::sin(k * kPi * r); }

double chebyshev_u(int k, double x) {
  if (k < 0) throw DomainError("chebyshev_u: degree must be >= 0");
  if (!(std::fabs(x) <= 1.0)) throw DomainError("chebyshev_u: |x| must be <= 1");
  // standard recurrence U_{n+1} = 2x U_n - U_{n-1}, then normalize by U_k(1) = k + 1
  double prev = 1.0;
  double cur = 2.0 * x;
  if (k == 0) return 1.0;
  for (int n = 1; n < k; ++n) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur / (k + 1);
}

}  // namespace radial
