// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/mra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radial/error.hpp"
#include "radial/hankel.hpp"
#include "radial/parallel.hpp"
#include "radial/quadrature.hpp"
#include "radial/special.hpp"

namespace radial {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double z) {
  if (std::fabs(z) < 1e-4) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

// lambda reduced into [0, 1] under evenness and 2-periodicity.
double reduce(double lambda) {
  double x = std::fmod(std::fabs(lambda), 2.0);
  return x > 1.0 ? 2.0 - x : x;
}

double max_abs_on(const EvenFunction& f, double upper, int n) {
  double m = std::abs(f(0.0));
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(f((i + 0.5) * upper / n)));
  return m;
}

}  // namespace

double radial_norm(double k) { return std::pow(2.0, 0.25) * std::pow(kPi, 1.25) * k; }

double rho(double k, double lambda) { return radial_norm(k) * sinc(k * kPi * lambda); }

ScalingFunction::ScalingFunction(EvenFunction spectrum, bool orthonormal, ScalingRecipe recipe)
    : spectrum_(std::move(spectrum)), orthonormal_(orthonormal), recipe_(std::move(recipe)) {
  if (!spectrum_) throw DomainError("ScalingFunction: empty spectrum");
}

int ScalingFunction::default_n_max() const noexcept {
  if (!band_limited()) return 64;
  return std::max(1, static_cast<int>(std::floor((spectrum_.support() + 1.0) / 2.0)));
}

SineSeries::SineSeries(std::vector<Complex> coefficients, Space space)
    : alpha_(std::move(coefficients)), space_(space) {
  if (space_ == Space::S0) {
    for (int k = 2; k <= size(); k += 2) {
      if (alpha_[k - 1] != 0.0) throw DomainError("SineSeries: S0 admits odd-index coefficients only");
    }
  }
}

Complex SineSeries::operator()(double lambda) const {
  Complex sum = 0.0;
  for (int k = 1; k <= size(); ++k) sum += alpha_[k - 1] * std::sin(k * kPi * lambda);
  return std::sqrt(2.0) * sum;
}

double SineSeries::norm() const {
  double s = 0.0;
  for (const auto& a : alpha_) s += std::norm(a);
  return std::sqrt(s);
}

SineSeries SineSeries::from_filter(const CosineFilter& g) {
  // sqrt2 g_n cos(n t) sin(2t) = (g_n / 2)(s_{n+2} - s_{n-2}), s_{-m} = -s_m.
  const int N = g.order();
  std::vector<Complex> alpha(N + 2, 0.0);
  for (int n = 0; n <= N; ++n) {
    const Complex half = 0.5 * g.g(n);
    alpha[n + 1] += half;
    const int m = n - 2;
    if (m > 0) alpha[m - 1] -= half;
    if (m < 0) alpha[-m - 1] += half;
  }
  return SineSeries(std::move(alpha), SineSeries::Space::S);
}

double periodization_at(const ScalingFunction& phi, double lambda, int n_max) {
  const double x = reduce(lambda);
  double sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) sum += std::norm(phi.hat(x + 2.0 * n));
  return sum;
}

double PeriodizationProfile::deviation_from_one() const {
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::fabs(v - 1.0));
  return worst;
}

PeriodizationProfile periodize(const ScalingFunction& phi, int grid_pts, int n_max) {
  if (grid_pts < 1) throw DomainError("periodize: grid_pts must be positive");
  if (n_max <= 0) n_max = phi.default_n_max();
  PeriodizationProfile p;
  p.n_max = n_max;
  p.lambda.resize(grid_pts);
  p.values.resize(grid_pts);
  parallel_for(grid_pts, [&](std::size_t i) {
    p.lambda[i] = (i + 0.5) / grid_pts;
    p.values[i] = periodization_at(phi, p.lambda[i], n_max);
  });
  return p;
}

bool RieszBounds::satisfied() const noexcept { return A > 0.0 && std::isfinite(B); }

RieszBounds riesz_bounds(const PeriodizationProfile& p) {
  if (p.values.empty()) return {};
  const auto [lo, hi] = std::minmax_element(p.values.begin(), p.values.end());
  return {*lo, *hi};
}

ScalingFunction orthogonalize(const ScalingFunction& phi, int n_max, int grid_pts) {
  if (n_max <= 0) n_max = phi.default_n_max();
  const auto p = periodize(phi, grid_pts, n_max);
  const auto rb = riesz_bounds(p);
  if (!(rb.A > 1e-12 * std::max(1.0, rb.B))) {
    throw ToleranceError("orthogonalize: lower Riesz bound vanishes, condition (RB) fails");
  }
  ScalingRecipe recipe = phi.recipe();
  recipe.orthogonalized = true;
  recipe.n_max = n_max;
  const auto& base = phi.spectrum();
  EvenFunction spectrum(
      [phi, n_max](double lambda) -> Complex {
        const Complex v = phi.hat(lambda);
        if (v == 0.0) return 0.0;
        return v / std::sqrt(periodization_at(phi, lambda, n_max));
      },
      base.support(), base.breakpoints());
  ScalingFunction out(std::move(spectrum), true, std::move(recipe));
  if (p.deviation_from_one() < 1e-14) {
    out.radial = phi.radial;
    out.classical = phi.classical;
  }
  return out;
}

ScalingFunction from_classical(const std::function<Complex(double)>& F, double support_xi,
                               std::vector<double> breakpoints_xi, ScalingRecipe recipe,
                               double orthonormal_tol) {
  const double probe = std::isfinite(support_xi) ? support_xi : 64.0 * kPi;
  constexpr int kProbe = 512;
  double peak = std::abs(F(0.0));
  double odd_part = 0.0;
  for (int i = 0; i < kProbe; ++i) {
    const double xi = (i + 0.5) * probe / kProbe;
    peak = std::max(peak, std::abs(F(xi)));
    odd_part = std::max(odd_part, std::abs(F(xi) - F(-xi)));
  }
  if (peak == 0.0) throw ToleranceError("from_classical: zero spectrum, condition (RB) fails");
  if (odd_part > 1e-12 * peak) throw DomainError("from_classical: classical scaling function is not even");
  const Complex at0 = F(0.0);
  if (std::abs(F(1e-9) - at0) > 1e-6 * peak || std::abs(F(-1e-9) - at0) > 1e-6 * peak) {
    throw DomainError("from_classical: transform is not continuous at 0");
  }

  for (auto& b : breakpoints_xi) b /= kPi;
  const double support = support_xi / kPi;
  EvenFunction spectrum([F](double lambda) { return std::sqrt(2.0 * kPi) * F(kPi * lambda); }, support,
                        std::move(breakpoints_xi));
  if (!spectrum.compact()) {
    // Weighted tails over [L/4, L/2] and [L/2, L] must shrink.
    const auto mass = [&](double a, double b) {
      const auto q = composite_nodes(a, b, 1.0 / 16.0, 16, spectrum.breakpoints());
      double s = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) s += q.w[i] * kRadial3D.weight(q.x[i]) * std::norm(spectrum(q.x[i]));
      return s;
    };
    const double L = 64.0;
    const double total = mass(0.0, L);
    const double outer = mass(L / 2.0, L);
    const double inner = mass(L / 4.0, L / 2.0);
    if (outer > 1e-10 * total && outer > 0.9 * inner) {
      throw ToleranceError("from_classical: weighted L2(H) norm does not converge");
    }
  }
  ScalingFunction probe_phi(spectrum, false, recipe);
  const bool orthonormal = periodize(probe_phi).deviation_from_one() < orthonormal_tol;
  return ScalingFunction(std::move(spectrum), orthonormal, std::move(recipe));
}

ScalingFunction from_classical(const SampledProfile& F) {
  ScalingRecipe recipe{"tabulated", F, false, 0};
  return from_classical([F](double xi) { return F(xi); }, F.grid().r_max(), {}, std::move(recipe));
}

ScalingFunction shannon_scaling() {
  ScalingFunction phi(builtin("shannon-scaling", Domain::spectral), true, {"shannon", std::nullopt, false, 0});
  phi.radial = builtin("shannon-scaling", Domain::radial);
  phi.classical = ClassicalOrigin{
      "shannon",
      [](double x) { return sinc(kPi * x); },
      [](double x) {
        const double t = kPi * x;
        if (std::fabs(t) < 1e-3) return -kPi * t / 3.0;
        return kPi * (t * std::cos(t) - std::sin(t)) / (t * t);
      }};
  return phi;
}

ScalingFunction meyer_scaling() {
  return ScalingFunction(builtin("meyer-scaling", Domain::spectral), true, {"meyer", std::nullopt, false, 0});
}

ScalingFunction hat_spline() {
  ScalingFunction phi(builtin("hat-spline", Domain::spectral), false, {"hat-spline", std::nullopt, false, 0});
  phi.classical = ClassicalOrigin{
      "hat-spline",
      [](double x) { return std::max(0.0, 1.0 - std::fabs(x)); },
      [](double x) {
        if (std::fabs(x) >= 1.0 || x == 0.0) return 0.0;
        return x > 0.0 ? -1.0 : 1.0;
      }};
  return phi;
}

ScalingFunction scaling_builtin(const std::string& kind) {
  if (kind == "shannon") return shannon_scaling();
  if (kind == "meyer") return meyer_scaling();
  if (kind == "hat-spline") return hat_spline();
  throw DomainError("scaling_builtin: unknown kind '" + kind + "'");
}

EvenFunction basis_spectrum(const ScalingFunction& phi, int j, int k) {
  if (k < 1) throw DomainError("basis_spectrum: k must be >= 1");
  const double s = std::ldexp(1.0, -j);
  const double amp = std::pow(2.0, -1.5 * j);
  std::vector<double> breaks = phi.spectrum().breakpoints();
  for (auto& b : breaks) b /= s;
  const EvenFunction base = phi.spectrum();
  return EvenFunction([base, s, amp, k](double lambda) { return amp * rho(k, s * lambda) * base(s * lambda); },
                      base.support() / s, std::move(breaks));
}

SampledProfile translate_basis(const ScalingFunction& phi, int j, int k, const RadialGrid& grid,
                               BasisPath path) {
  if (path == BasisPath::spectral) {
    const auto spectrum = basis_spectrum(phi, j, k);
    return hankel_of(kRadial3D, spectrum, grid, Domain::spectral, spectrum.extent(phi.extent() * std::ldexp(1.0, j)));
  }
  if (!phi.classical) throw DomainError("translate_basis: classical path needs a classical origin");
  const auto& c = *phi.classical;
  const double pre = std::pow(2.0 * kPi, -0.25);
  const double amp = std::pow(8.0, 0.5 * j);
  const double scale = std::ldexp(1.0, j);
  std::vector<Complex> v(grid.n_points());
  for (int i = 0; i < grid.n_points(); ++i) {
    const double x = scale * grid[i];
    double value;
    if (x < 1e-6) {
      value = -pre * (2.0 / kPi) * c.dphi(k);
    } else {
      value = pre * (c.phi(x / kPi - k) - c.phi(x / kPi + k)) / x;
    }
    v[i] = amp * value;
  }
  return SampledProfile(grid, std::move(v), Domain::radial);
}

std::vector<std::vector<Complex>> gram_matrix(const std::vector<EvenFunction>& spectra, double limit) {
  const std::size_t n = spectra.size();
  std::vector<std::vector<Complex>> g(n, std::vector<Complex>(n));
  parallel_for(n * n, [&](std::size_t idx) {
    const std::size_t a = idx / n;
    const std::size_t b = idx % n;
    if (b < a) return;
    double upper = std::min(spectra[a].support(), spectra[b].support());
    if (limit > 0.0) upper = std::min(upper, limit);
    if (!std::isfinite(upper)) upper = 64.0;
    g[a][b] = weighted_integral(spectra[a], spectra[b], kRadial3D, upper);
  });
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) g[a][b] = std::conj(g[b][a]);
  }
  return g;
}

double identity_deviation(const std::vector<std::vector<Complex>>& gram) {
  double worst = 0.0;
  for (std::size_t a = 0; a < gram.size(); ++a) {
    for (std::size_t b = 0; b < gram[a].size(); ++b) {
      worst = std::max(worst, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

FilterSymbol::FilterSymbol(std::function<Complex(double)> base, std::vector<double> breakpoints)
    : base_(std::move(base)), breakpoints_(std::move(breakpoints)) {
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

Complex FilterSymbol::operator()(double lambda) const { return base_(reduce(lambda)); }

double FilterSymbol::identity_residual(int grid_pts) const {
  double worst = 0.0;
  for (int i = 0; i < grid_pts; ++i) {
    const double lambda = (i + 0.5) / grid_pts;
    worst = std::max(worst, std::fabs(std::norm((*this)(lambda)) + std::norm((*this)(lambda + 1.0)) - 1.0));
  }
  return worst;
}

ExtractedFilter extract_filter(const ScalingFunction& phi, int grid_pts, int n_coeffs) {
  if (grid_pts < 1 || n_coeffs < 0) throw DomainError("extract_filter: bad grid_pts or n_coeffs");
  const double eps = 1e-8 * max_abs_on(phi.spectrum(), std::min(2.0, phi.extent()), grid_pts);
  const bool complete = phi.orthonormal();
  const EvenFunction s = phi.spectrum();

  // 0: ratio, 1: completion, 2: masked.
  const auto classify = [s, eps, complete](double l) -> std::pair<int, Complex> {
    const Complex d = s(l);
    if (std::abs(d) > eps) return {0, s(2.0 * l) / d};
    if (complete) {
      const Complex d1 = s(1.0 - l);
      if (std::abs(d1) > eps) return {1, std::sqrt(std::max(0.0, 1.0 - std::norm(s(2.0 - 2.0 * l) / d1)))};
    }
    return {2, 0.0};
  };

  std::vector<double> breaks{0.0, 1.0};
  for (double b : phi.spectrum().breakpoints()) {
    for (double c : {b, 0.5 * b}) {
      if (c >= 0.0 && c <= 1.0) {
        breaks.push_back(c);
        breaks.push_back(1.0 - c);
      }
    }
  }
  FilterSymbol symbol([classify](double l) { return classify(l).second; }, breaks);

  int completed = 0;
  int masked = 0;
  for (int i = 0; i < grid_pts; ++i) {
    const int kind = classify((i + 0.5) / grid_pts).first;
    completed += kind == 1;
    masked += kind == 2;
  }

  const auto q = composite_nodes(0.0, 1.0, 1.0 / grid_pts, 8, symbol.breakpoints());
  std::vector<Complex> gw(q.size());
  parallel_for(q.size(), [&](std::size_t i) { gw[i] = q.w[i] * symbol(q.x[i]); });
  std::vector<Complex> g(n_coeffs + 1);
  parallel_for(g.size(), [&](std::size_t n) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) sum += gw[i] * std::cos(static_cast<double>(n) * kPi * q.x[i]);
    g[n] = n == 0 ? sum / std::sqrt(2.0) : sum * std::sqrt(2.0);
  });
  return {std::move(symbol), CosineFilter(std::move(g)), eps, completed, masked};
}

std::function<Complex(double)> gamma_from(const FilterSymbol& G) {
  return [G](double l) { return G(l) * std::sin(2.0 * kPi * l); };
}

double two_scale_residual(const ScalingFunction& phi, const std::function<Complex(double)>& gamma, int k,
                          int grid_pts) {
  if (k < 1) throw DomainError("two_scale_residual: k must be >= 1");
  const double upper = phi.extent();
  std::vector<double> res(grid_pts);
  parallel_for(grid_pts, [&](std::size_t i) {
    const double l = (i + 0.5) * upper / grid_pts;
    const double t = 2.0 * kPi * l;
    const Complex lhs = std::sin(k * t) * phi.hat(2.0 * l);
    const Complex rhs = static_cast<double>(k) * gamma(l) * chebyshev_u(k - 1, std::cos(t)) * phi.hat(l);
    res[i] = std::abs(lhs - rhs);
  });
  return *std::max_element(res.begin(), res.end());
}

double two_scale_check(const ScalingFunction& phi, const SineSeries& gamma, int grid_pts) {
  return two_scale_residual(phi, [&gamma](double l) { return gamma(l); }, 1, grid_pts);
}

MraReport validate_mra(const ScalingFunction& phi) {
  MraReport report;
  report.riesz = riesz_bounds(periodize(phi));
  const auto filter = extract_filter(phi);
  report.two_scale_residual = two_scale_residual(phi, gamma_from(filter.symbol));
  report.phi_hat_at_zero = std::abs(phi.hat(0.0));
  report.generates_mra = report.phi_hat_at_zero > 0.0;
  report.unit_at_zero = std::fabs(report.phi_hat_at_zero - 1.0) < 1e-6;
  if (phi.orthonormal()) {
    std::vector<EvenFunction> spectra;
    for (int k = 1; k <= 8; ++k) spectra.push_back(basis_spectrum(phi, 0, k));
    report.gram_deviation = identity_deviation(gram_matrix(spectra, phi.extent()));
  }
  return report;
}

double shift_residual(const ScalingFunction& phi, int K) {
  const EvenFunction s = phi.spectrum();
  // (T^(1) phi_{0,1})^ = j(pi lambda) rho_1(lambda) phi_hat(lambda).
  const EvenFunction x([s](double l) { return sinc(kPi * l) * rho(1.0, l) * s(l); }, s.support(), s.breakpoints());
  const double upper = phi.extent();
  const double total = weighted_integral(x, x, kRadial3D, upper).real();
  std::vector<double> c2(K);
  parallel_for(K, [&](std::size_t k) {
    c2[k] = std::norm(weighted_integral(x, basis_spectrum(phi, 0, static_cast<int>(k) + 1), kRadial3D, upper));
  });
  double captured = 0.0;
  for (double v : c2) captured += v;
  return std::sqrt(std::max(0.0, total - captured) / total);
}

CosineFilter shannon_filter(int n_coeffs) {
  std::vector<Complex> g(n_coeffs + 1, 0.0);
  g[0] = 1.0 / (2.0 * std::sqrt(2.0));
  for (int n = 1; n <= n_coeffs; ++n) {
    const int r = n % 4;
    const double s = r == 1 ? 1.0 : (r == 3 ? -1.0 : 0.0);
    g[n] = std::sqrt(2.0) * s / (n * kPi);
  }
  return CosineFilter(std::move(g));
}

double shannon_tail_bound(int n_coeffs) { return 2.0 / (kPi * (n_coeffs + 1)); }

}  // namespace radial
