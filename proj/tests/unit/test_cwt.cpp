// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radial/cwt.hpp"
#include "radial/error.hpp"
#include "radial/hankel.hpp"
#include "radial/hypergroup.hpp"

namespace {

using namespace radial;

EvenFunction band(double lo, double hi) {
  return EvenFunction([lo, hi](double l) { return Complex(l >= lo && l < hi ? 1.0 : 0.0); }, hi, {lo, hi});
}

const EvenFunction kGaussianHat = builtin("gaussian", Domain::spectral);

// Mexican-hat pair at alpha = 1/2: g_hat = l^2 e^{-l^2/2}, g(r) = (3 - r^2) e^{-r^2/2}.
const EvenFunction kHatSpectrum([](double l) { return Complex(l * l * std::exp(-0.5 * l * l)); });
const EvenFunction kHatRadial([](double r) { return Complex((3.0 - r * r) * std::exp(-0.5 * r * r)); });

TEST(Admissibility, Examples) {
  EXPECT_NEAR(admissibility(band(1.0, 2.0)), std::log(2.0), 1e-12);
  EXPECT_EQ(admissibility(EvenFunction([](double) { return Complex(0.0); }, 1.0)), 0.0);
  const auto low = admissibility_check(band(0.0, 1.0));
  EXPECT_TRUE(low.divergent);
  EXPECT_THROW(admissibility(band(0.0, 1.0)), ToleranceError);
  // int_0^inf l^4 e^{-l^2} dl / l = 1/2.
  EXPECT_NEAR(admissibility(kHatSpectrum), 0.5, 1e-10);
}

TEST(CwtGrid, LogUniformWeights) {
  const auto g = CwtGrid::log_uniform(kRadial3D, 10.0, 100, 0.25, 4.0, 40);
  ASSERT_EQ(g.a.size(), 40u);
  double s = 0.0;
  for (std::size_t m = 0; m < g.a.size(); ++m) s += g.a_weight[m] * std::pow(g.a[m], 3.0);
  EXPECT_NEAR(s, std::log(16.0), 1e-12);  // int a^-4 a^3 da = log(a_max / a_min)
  for (double w : g.r_weight) EXPECT_GT(w, 0.0);
  EXPECT_THROW(CwtGrid::log_uniform(kRadial3D, 10.0, 10, 1.0, 0.5, 4), DomainError);
}

TEST(Cwt, ZeroSignal) {
  const auto grid = CwtGrid::log_uniform(kRadial3D, 10.0, 32, 0.5, 2.0, 8);
  const EvenFunction zero([](double) { return Complex(0.0); });
  for (const auto& v : cwt(kRadial3D, zero, band(1.0, 2.0), grid)) EXPECT_EQ(v, Complex(0.0));
}

TEST(Cwt, MatchesRadialSideInnerProduct) {
  const auto f = builtin("gaussian", Domain::radial);
  CwtGrid grid;
  grid.r = {0.0, 0.7, 2.5};
  grid.r_weight = {1.0, 1.0, 1.0};
  grid.a = {0.6, 1.0, 1.8};
  grid.a_weight = {1.0, 1.0, 1.0};
  const auto psi = cwt(kRadial3D, kGaussianHat, kHatSpectrum, grid);
  for (std::size_t m = 0; m < grid.a.size(); ++m) {
    const auto Dg = dilate(kRadial3D, kHatRadial, grid.a[m]);
    for (std::size_t i = 0; i < grid.r.size(); ++i) {
      const auto TDg = translate(kRadial3D, Dg, grid.r[i]);
      const Complex ref = weighted_integral(f, TDg, kRadial3D, 30.0, 1.0 / 16.0);
      EXPECT_NEAR(std::abs(psi[m * grid.r.size() + i] - ref), 0.0, 1e-8) << grid.r[i] << " " << grid.a[m];
    }
  }
}

TEST(Cwt, PlancherelForTightIndicator) {
  // r is truncated at R = 160: the indicator's r^-1 energy tail costs O(1/R).
  const auto grid = CwtGrid::log_uniform(kRadial3D, 160.0, 1024, std::pow(2.0, -6), std::pow(2.0, 6), 96);
  const auto psi = cwt(kRadial3D, kGaussianHat, band(1.0, 2.0), grid);
  const double f2 = std::sqrt(2.0) / 4.0;
  EXPECT_NEAR(cwt_energy(psi, grid) / (std::log(2.0) * f2), 1.0, 0.02);
}

TEST(Cwt, DisjointAnalyzersAreOrthogonal) {
  const auto grid = CwtGrid::log_uniform(kRadial3D, 160.0, 1024, 0.125, 8.0, 48);
  const auto p1 = cwt(kRadial3D, kGaussianHat, band(1.0, 2.0), grid);
  const auto p2 = cwt(kRadial3D, kGaussianHat, band(2.0, 4.0), grid);
  const double e1 = cwt_energy(p1, grid);
  const double e2 = cwt_energy(p2, grid);
  // Exactly zero per scale on [0, inf); the r truncation leaves an O(1/R) remainder.
  EXPECT_LT(std::abs(cwt_cross(p1, p2, grid)), 1e-2 * std::sqrt(e1 * e2));
  const auto p3 = cwt(kRadial3D, kGaussianHat, band(1.5, 3.0), grid);
  EXPECT_GT(std::abs(cwt_cross(p1, p3, grid)), 0.2 * std::sqrt(e1 * cwt_energy(p3, grid)));
  EXPECT_THROW(cwt_cross(p1, std::vector<Complex>(3), grid), GridMismatchError);
}

TEST(Cwt, ContinuityUnderRefinement) {
  const std::vector<double> r0{0.3, 1.0, 2.2};
  const std::vector<double> a0{0.5, 1.0, 2.0};
  auto sample_at = [&](double dr, double da) {
    CwtGrid g;
    for (double r : r0) {
      g.r.push_back(r + dr);
      g.r_weight.push_back(1.0);
    }
    for (double a : a0) {
      g.a.push_back(a * std::exp(da));
      g.a_weight.push_back(1.0);
    }
    return cwt(kRadial3D, kGaussianHat, kHatSpectrum, g);
  };
  const auto base = sample_at(0.0, 0.0);
  double previous = std::numeric_limits<double>::infinity();
  for (double h : {1e-2, 1e-3, 1e-4}) {
    const auto moved = sample_at(h, h);
    double diff = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) diff = std::max(diff, std::abs(moved[i] - base[i]));
    EXPECT_LT(diff, previous);
    previous = diff;
  }
  EXPECT_LT(previous, 1e-4);
}

FrameSpec dyadic_spec(int n_max) {
  FrameSpec spec{kRadial3D, 2.0, {}, n_max};
  for (int k = -3; k <= 3; ++k) spec.Q.push_back(std::ldexp(1.0, k));
  return spec;
}

EvenFunction smooth_band(unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> n01;
  std::vector<Complex> c(4);
  for (auto& v : c) v = {n01(rng), n01(rng)};
  return EvenFunction(
      [c](double l) {
        if (l <= 0.5 || l >= 4.0) return Complex(0.0);
        const double t = (l - 0.5) / 3.5;
        const double bump = std::exp(-1.0 / (t * (1.0 - t)));
        Complex s = 0.0;
        for (std::size_t m = 0; m < c.size(); ++m) s += c[m] * std::cos(m * std::numbers::pi * t);
        return bump * s;
      },
      4.0);
}

TEST(Frame, TightExampleBounds) {
  const Frame frame(band(1.0, 2.0), dyadic_spec(8));
  const auto [A, B] = frame.bound_estimates(0.5, 4.0);
  EXPECT_NEAR(A, 8.0, 1e-12);
  EXPECT_NEAR(B, 8.0, 1e-12);
}

TEST(Frame, ZeroAndScaling) {
  const Frame frame(band(1.0, 2.0), dyadic_spec(64));
  EXPECT_EQ(frame.energy(EvenFunction([](double) { return Complex(0.0); }, 4.0)), 0.0);
  const auto f = smooth_band(1);
  const EvenFunction f2([f](double l) { return 2.0 * f(l); }, 4.0);
  EXPECT_NEAR(frame.energy(f2) / frame.energy(f), 4.0, 1e-12);
}

TEST(Frame, DirectAndFourierBesselRoutesAgree) {
  const Frame frame(band(1.0, 2.0), dyadic_spec(24));
  const auto f = smooth_band(5);
  for (double q : {0.25, 1.0, 4.0}) {
    const auto all = frame.coefficients(q, f);
    for (int n : {1, 5, 17, 24}) {
      const Complex direct = frame.coefficient(n, q, f);
      EXPECT_NEAR(std::abs(all[n - 1] - direct), 0.0, 1e-9 * (1.0 + std::abs(direct))) << q << " " << n;
    }
  }
}

TEST(Frame, EnergyApproachesTightBound) {
  const Frame frame(band(1.0, 2.0), dyadic_spec(512));
  const auto f = smooth_band(11);
  const double f2 = weighted_integral(f, f, kRadial3D, 4.0).real();
  EXPECT_NEAR(frame.limit_energy(f) / f2, 8.0, 1e-10);
  EXPECT_NEAR(frame.energy(f) / f2, 8.0, 0.08);
}

TEST(Frame, RejectsBadSpecs) {
  EXPECT_THROW(Frame(band(1.0, 3.0), dyadic_spec(4)), ToleranceError);
  FrameSpec spec = dyadic_spec(4);
  spec.Q.push_back(-1.0);
  EXPECT_THROW(Frame(band(1.0, 2.0), spec), DomainError);
  spec = dyadic_spec(4);
  spec.Q.clear();
  EXPECT_THROW(Frame(band(1.0, 2.0), spec), DomainError);
}

TEST(LatticeBounds, DyadicIndicator) {
  const auto b = lattice_bounds(band(1.0, 2.0), 2.0, 4096);
  EXPECT_EQ(b.sigma, 1.0);
  EXPECT_EQ(b.tau, 1.0);
  EXPECT_EQ(b.M, 1);
  EXPECT_EQ(b.sum_min, 1.0);
  EXPECT_EQ(b.sum_max, 1.0);
  EXPECT_TRUE(b.holds());
}

TEST(LatticeBounds, OverlappingDilates) {
  const EvenFunction g([](double l) { return Complex(l >= 1.0 && l < 3.0 ? 0.5 + 0.25 * (l - 1.0) : 0.0); }, 3.0,
                       {1.0, 3.0});
  const auto b = lattice_bounds(g, 2.0, 4096);
  EXPECT_EQ(b.M, 2);
  EXPECT_NEAR(b.tau, 1.0, 1e-3);
  EXPECT_TRUE(b.holds());
  EXPECT_LE(b.sigma * b.sigma, b.sum_min);
  EXPECT_LE(b.sum_max, b.M * b.tau * b.tau);
}

TEST(LatticeBounds, Rejections) {
  EXPECT_THROW(lattice_bounds(band(1.0, 2.0), 1.0), DomainError);
  EXPECT_THROW(lattice_bounds(kGaussianHat, 2.0), DomainError);
  EXPECT_THROW(lattice_bounds(band(0.0, 2.0), 2.0), DomainError);
}

}  // namespace
