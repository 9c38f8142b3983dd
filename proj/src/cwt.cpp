// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/cwt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "radial/error.hpp"
#include "radial/hankel.hpp"
#include "radial/parallel.hpp"
#include "radial/quadrature.hpp"

namespace radial {

namespace {

// int_a^b |g(e^u)|^2 du with u = log lambda.
double log_integral(const EvenFunction& g, double lo, double hi) {
  std::vector<double> breaks;
  for (double b : g.breakpoints()) {
    if (b > 0.0) breaks.push_back(std::log(b));
  }
  const auto q = composite_nodes(std::log(lo), std::log(hi), 1.0 / 16.0, 16, breaks);
  double s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) s += q.w[i] * std::norm(g(std::exp(q.x[i])));
  return s;
}

}  // namespace

AdmissibilityResult admissibility_check(const EvenFunction& g_hat) {
  const double upper = g_hat.extent(1e3);
  AdmissibilityResult res;
  const double near_zero = log_integral(g_hat, 1e-12, 1e-6);
  res.constant = near_zero + log_integral(g_hat, 1e-6, upper);
  res.divergent = near_zero > 1e-8 * std::max(1.0, res.constant);
  return res;
}

double admissibility(const EvenFunction& g_hat) {
  const auto res = admissibility_check(g_hat);
  if (res.divergent) throw ToleranceError("admissibility: int |g_hat|^2 dlambda/lambda diverges at 0");
  return res.constant;
}

CwtGrid CwtGrid::log_uniform(const HypergroupIndex& alpha, double r_max, int n_r, double a_min, double a_max,
                             int n_a) {
  if (!(a_min > 0.0) || !(a_max > a_min) || n_a < 1) throw DomainError("CwtGrid: bad scale range");
  const RadialGrid rg(r_max, n_r);
  CwtGrid g;
  for (int i = 0; i < n_r; ++i) {
    g.r.push_back(rg[i]);
    g.r_weight.push_back(alpha.weight(rg[i]) * rg.spacing());
  }
  const double step = std::log(a_max / a_min) / n_a;
  for (int m = 0; m < n_a; ++m) {
    const double a = a_min * std::exp((m + 0.5) * step);
    g.a.push_back(a);
    // da = a dlog a.
    g.a_weight.push_back(std::pow(a, -(2.0 * alpha.value() + 3.0)) * a * step);
  }
  return g;
}

std::vector<Complex> cwt(const HypergroupIndex& alpha, const EvenFunction& f_hat, const EvenFunction& g_hat,
                         const CwtGrid& grid) {
  const std::size_t nr = grid.r.size();
  const double r_top = nr ? *std::max_element(grid.r.begin(), grid.r.end()) : 0.0;
  std::vector<Complex> out(nr * grid.a.size());
  for (std::size_t m = 0; m < grid.a.size(); ++m) {
    const double a = grid.a[m];
    const double upper = std::min(g_hat.extent(64.0) / a, f_hat.extent(64.0));
    std::vector<double> breaks = f_hat.breakpoints();
    for (double b : g_hat.breakpoints()) breaks.push_back(b / a);
    double width = upper / 8.0;
    if (r_top > 0.0) width = std::min(width, std::numbers::pi / r_top);
    const auto q = composite_nodes(0.0, upper, width, 16, breaks);
    const double amp = std::pow(a, alpha.value() + 1.0);
    std::vector<double> x;
    std::vector<Complex> fw;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Complex v = q.w[i] * alpha.weight(q.x[i]) * f_hat(q.x[i]) * std::conj(amp * g_hat(a * q.x[i]));
      if (v != 0.0) {
        x.push_back(q.x[i]);
        fw.push_back(v);
      }
    }
    parallel_for(nr, [&](std::size_t i) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < x.size(); ++t) sum += bessel_j(alpha, x[t] * grid.r[i]) * fw[t];
      out[m * nr + i] = sum;
    });
  }
  return out;
}

Complex cwt_cross(const std::vector<Complex>& psi1, const std::vector<Complex>& psi2, const CwtGrid& grid) {
  const std::size_t nr = grid.r.size();
  if (psi1.size() != nr * grid.a.size() || psi2.size() != psi1.size()) {
    throw GridMismatchError("cwt_cross: sample count does not match the grid");
  }
  Complex sum = 0.0;
  for (std::size_t m = 0; m < grid.a.size(); ++m) {
    Complex row = 0.0;
    for (std::size_t i = 0; i < nr; ++i) row += psi1[m * nr + i] * std::conj(psi2[m * nr + i]) * grid.r_weight[i];
    sum += row * grid.a_weight[m];
  }
  return sum;
}

double cwt_energy(const std::vector<Complex>& psi, const CwtGrid& grid) { return cwt_cross(psi, psi, grid).real(); }

Frame::Frame(EvenFunction g_hat, FrameSpec spec)
    : g_hat_(std::move(g_hat)), spec_(std::move(spec)), basis_(spec_.alpha, spec_.n_max) {
  if (!(spec_.l > 0.0)) throw DomainError("Frame: band limit l must be positive");
  if (spec_.Q.empty()) throw DomainError("Frame: empty dilation set");
  for (double q : spec_.Q) {
    if (!(q > 0.0)) throw DomainError("Frame: dilations must be positive");
  }
  // Support check: g_hat must vanish on (l, 2l].
  double beyond = 0.0;
  double peak = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const double lam = (i + 0.5) * 2.0 * spec_.l / 4096;
    const double v = std::abs(g_hat_(lam));
    if (lam > spec_.l) {
      beyond = std::max(beyond, v);
    } else {
      peak = std::max(peak, v);
    }
  }
  if (beyond > 1e-12 * std::max(peak, 1e-300)) throw ToleranceError("Frame: g_hat is not supported in [0, l]");

  // Quadrature on [0, 1] resolving rho_{n_max}; split at breakpoints of D_{1/l} g_hat.
  std::vector<double> breaks;
  for (double b : g_hat_.breakpoints()) breaks.push_back(b / spec_.l);
  const auto q = composite_nodes(0.0, 1.0, std::min(1.0 / 64.0, 1.0 / spec_.n_max), 16, breaks);
  mu_ = q.x;
  w_.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) w_[i] = q.w[i] * spec_.alpha.weight(q.x[i]);
  rho_.resize(static_cast<std::size_t>(spec_.n_max) * mu_.size());
  parallel_for(spec_.n_max, [&](std::size_t n) {
    for (std::size_t i = 0; i < mu_.size(); ++i) rho_[n * mu_.size() + i] = basis_(static_cast<int>(n) + 1, mu_[i]);
  });
}

Complex Frame::coefficient(int n, double q, const EvenFunction& f_hat) const {
  const double a1 = spec_.alpha.value() + 1.0;
  const double upper = std::min(spec_.l / q, f_hat.extent(64.0));
  std::vector<double> breaks = f_hat.breakpoints();
  for (double b : g_hat_.breakpoints()) breaks.push_back(b / q);
  const double width = std::min(upper / 32.0, spec_.l / (q * (n + 1)));
  const auto nodes = composite_nodes(0.0, upper, width, 16, breaks);
  const double amp = std::pow(q, a1);
  const double zero = basis_.zero(n) / spec_.l;
  const double mn = basis_.norm(n);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double lam = nodes.x[i];
    const double rho_n = mn * bessel_j(spec_.alpha, zero * q * lam);
    sum += nodes.w[i] * spec_.alpha.weight(lam) * rho_n * amp * g_hat_(q * lam) * std::conj(f_hat(lam));
  }
  return sum;
}

std::vector<Complex> Frame::coefficients(double q, const EvenFunction& f_hat) const {
  const double a1 = spec_.alpha.value() + 1.0;
  const double l = spec_.l;
  std::vector<Complex> h(mu_.size());
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    const double m = mu_[i];
    // D_{1/l} g_hat (m) D_{q/l} conj(f_hat) (m)
    h[i] = w_[i] * std::pow(l, a1) * g_hat_(l * m) * std::pow(q / l, -a1) * std::conj(f_hat(l * m / q));
  }
  std::vector<Complex> c(spec_.n_max);
  for (int n = 0; n < spec_.n_max; ++n) {
    const double* row = &rho_[static_cast<std::size_t>(n) * mu_.size()];
    Complex sum = 0.0;
    for (std::size_t i = 0; i < mu_.size(); ++i) sum += h[i] * row[i];
    c[n] = sum;
  }
  return c;
}

double Frame::energy(const EvenFunction& f_hat) const {
  std::vector<double> per_q(spec_.Q.size());
  parallel_for(spec_.Q.size(), [&](std::size_t i) {
    double s = 0.0;
    for (const auto& c : coefficients(spec_.Q[i], f_hat)) s += std::norm(c);
    per_q[i] = s;
  });
  double total = 0.0;
  for (double v : per_q) total += v;
  return total;
}

double Frame::limit_energy(const EvenFunction& f_hat) const {
  const HypergroupIndex& alpha = spec_.alpha;
  double total = 0.0;
  for (double q : spec_.Q) {
    const double upper = std::min(spec_.l / q, f_hat.extent(64.0));
    std::vector<double> breaks = f_hat.breakpoints();
    for (double b : g_hat_.breakpoints()) breaks.push_back(b / q);
    const auto nodes = composite_nodes(0.0, upper, upper / 64.0, 16, breaks);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double lam = nodes.x[i];
      total += nodes.w[i] * alpha.weight(lam) * std::norm(f_hat(lam)) * std::norm(g_hat_(q * lam));
    }
  }
  return std::pow(spec_.l, 2.0 * alpha.value() + 2.0) * total;
}

std::pair<double, double> Frame::bound_estimates(double lo, double hi, int grid_pts) const {
  double mn = std::numeric_limits<double>::infinity();
  double mx = 0.0;
  const double step = std::log(hi / lo) / grid_pts;
  for (int i = 0; i < grid_pts; ++i) {
    const double lam = lo * std::exp((i + 0.5) * step);
    double s = 0.0;
    for (double q : spec_.Q) s += std::norm(g_hat_(q * lam));
    mn = std::min(mn, s);
    mx = std::max(mx, s);
  }
  const double scale = std::pow(spec_.l, 2.0 * spec_.alpha.value() + 2.0);
  return {mn * scale, mx * scale};
}

LatticeBounds lattice_bounds(const EvenFunction& g_hat, double a, int grid_pts) {
  if (!(a > 1.0)) throw DomainError("lattice_bounds: dilation base must exceed 1");
  if (!g_hat.compact()) throw DomainError("lattice_bounds: g_hat needs compact support");
  const double hi = g_hat.support();
  // Lower support edge from a log scan; g_hat must vanish near 0.
  const double floor_pt = hi * 1e-9;
  if (std::abs(g_hat(floor_pt)) != 0.0) throw DomainError("lattice_bounds: support of g_hat must stay away from 0");
  double lo = hi;
  constexpr int kScan = 1 << 16;
  for (int i = 0; i < kScan; ++i) {
    const double lam = floor_pt * std::pow(hi / floor_pt, (i + 0.5) / kScan);
    if (std::abs(g_hat(lam)) != 0.0) {
      lo = floor_pt * std::pow(hi / floor_pt, static_cast<double>(i) / kScan);
      break;
    }
  }
  const double la = std::log(a);
  const int k_lo = static_cast<int>(std::floor(std::log(lo) / la)) - 1;
  const int k_hi = static_cast<int>(std::ceil(std::log(hi) / la)) + 1;

  LatticeBounds b;
  b.sum_min = std::numeric_limits<double>::infinity();
  for (int n = k_lo; n <= k_hi; ++n) {
    double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_pts; ++i) {
      const double v = std::abs(g_hat(std::pow(a, n + (i + 0.5) / grid_pts)));
      inf = std::min(inf, v);
      b.tau = std::max(b.tau, v);
    }
    b.sigma = std::max(b.sigma, inf);
  }
  for (int i = 0; i < grid_pts; ++i) {
    const double lam = std::pow(a, (i + 0.5) / grid_pts);
    double s = 0.0;
    int count = 0;
    for (int k = k_lo - 1; k <= k_hi + 1; ++k) {
      const double v = std::norm(g_hat(std::pow(a, k) * lam));
      s += v;
      count += v != 0.0;
    }
    b.sum_min = std::min(b.sum_min, s);
    b.sum_max = std::max(b.sum_max, s);
    b.M = std::max(b.M, count);
  }
  return b;
}

}  // namespace radial
