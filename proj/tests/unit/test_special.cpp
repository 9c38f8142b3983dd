// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "radial/error.hpp"
#include "radial/special.hpp"

namespace {

using namespace radial;
constexpr double kPi = std::numbers::pi;

double gk(const auto& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

TEST(HypergroupIndex, RejectsBelowMinusHalf) {
  EXPECT_THROW(HypergroupIndex(-0.6), DomainError);
  EXPECT_NO_THROW(HypergroupIndex(-0.5));
}

TEST(HypergroupIndex, HaarWeightAtHalf) {
  for (double r : {0.1, 1.0, 3.7}) {
    EXPECT_NEAR(kRadial3D.weight(r), std::sqrt(2.0 / kPi) * r * r, 1e-15 * r * r);
  }
}

TEST(HypergroupIndex, GammaMatchesStd) {
  for (double a : {0.0, 0.5, 1.0, 2.5, 29.0}) {
    EXPECT_NEAR(HypergroupIndex(a).gamma_alpha1(), std::tgamma(a + 1.0), 1e-13 * std::tgamma(a + 1.0));
  }
}

TEST(BesselJ, Examples) {
  EXPECT_NEAR(bessel_j(kRadial3D, kPi), 0.0, 1e-15);
  EXPECT_NEAR(bessel_j(kRadial3D, kPi / 2), 2.0 / kPi, 1e-15);
  for (double a : {-0.5, 0.0, 0.5, 1.0, 3.5}) EXPECT_EQ(bessel_j(HypergroupIndex(a), 0.0), 1.0);
}

TEST(BesselJ, HalfIndexIsSinc) {
  for (double z = 1e-8; z <= 50.0; z *= 1.07) {
    const double expect = std::sin(z) / z;
    EXPECT_LE(std::fabs(bessel_j(kRadial3D, z) - expect), 1e-12 * std::max(std::fabs(expect), 1.0 / z))
        << "z=" << z;
  }
}

TEST(BesselJ, Even) {
  for (double a : {0.0, 1.0, 2.5}) {
    EXPECT_EQ(bessel_j(HypergroupIndex(a), -3.2), bessel_j(HypergroupIndex(a), 3.2));
  }
}

TEST(BesselJ, AgreesWithBoost) {
  for (double a : {0.0, 0.25, 0.5, 1.0, 2.5, 7.0}) {
    const HypergroupIndex alpha(a);
    for (double z = 0.05; z < 80.0; z += 0.37) {
      const double ref = boost::math::cyl_bessel_j(a, z);
      EXPECT_NEAR(bessel_J(alpha, z), ref, 1e-12) << "alpha=" << a << " z=" << z;
    }
  }
}

TEST(BesselJ, BranchesAgreeAcrossSwitchover) {
  // Switchover sits at max(16, alpha); probe either side against Boost.
  for (double a : {0.0, 1.5, 20.0}) {
    const double edge = std::max(16.0, a);
    for (double dz : {-1e-3, 1e-3}) {
      const double z = edge + dz;
      EXPECT_NEAR(bessel_J(HypergroupIndex(a), z), boost::math::cyl_bessel_j(a, z), 1e-12);
    }
  }
}

TEST(BesselZero, Examples) {
  EXPECT_NEAR(bessel_zero(kRadial3D, 1), kPi, 1e-13);
  EXPECT_NEAR(bessel_zero(kRadial3D, 3), 3 * kPi, 1e-12);
  EXPECT_NEAR(bessel_zero(HypergroupIndex(0.0), 1), 2.404825557695773, 1e-12);
  EXPECT_THROW(bessel_zero(kRadial3D, 0), DomainError);
}

TEST(BesselZero, IsARootAndMatchesBoost) {
  for (double a : {0.0, 0.5, 1.0, 2.5}) {
    const HypergroupIndex alpha(a);
    for (int n = 1; n <= 20; ++n) {
      const double z = bessel_zero(alpha, n);
      EXPECT_NEAR(bessel_j(alpha, z), 0.0, 1e-10);
      EXPECT_NEAR(z, boost::math::cyl_bessel_j_zero(a, n), 1e-10 * z);
    }
  }
}

TEST(BesselZero, McMahonGap) {
  // nu_n - beta_n = -(mu - 1) / (8 beta_n) + O(beta_n^-3), beta_n = (n + a/2 - 1/4) pi, mu = 4a^2.
  for (double a : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    const double beta = (50 + a / 2 - 0.25) * kPi;
    const double gap = bessel_zero(HypergroupIndex(a), 50) - beta;
    EXPECT_NEAR(gap, -(4 * a * a - 1) / (8 * beta), 1e-5) << a;
  }
}

TEST(FourierBessel, ValueAtZero) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_NEAR(fourier_bessel(kRadial3D, k, 0.0), std::pow(2.0, 0.25) * std::pow(kPi, 1.25) * k, 1e-12 * k);
  }
}

class FourierBesselGram : public ::testing::TestWithParam<double> {};

TEST_P(FourierBesselGram, IdentityOnUnitInterval) {
  const HypergroupIndex alpha(GetParam());
  const FourierBesselBasis basis(alpha, 8);
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const double v = gk([&](double r) { return basis(m, r) * basis(n, r) * alpha.weight(r); }, 0.0, 1.0);
      EXPECT_NEAR(v, m == n ? 1.0 : 0.0, 1e-6) << m << "," << n;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Alphas, FourierBesselGram, ::testing::Values(0.0, 0.5, 1.0));

TEST(FourierBessel, BasisMatchesFreeFunction) {
  const FourierBesselBasis basis(HypergroupIndex(1.0), 6);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_DOUBLE_EQ(basis.zero(n), bessel_zero(HypergroupIndex(1.0), n));
    EXPECT_NEAR(basis(n, 0.3), fourier_bessel(HypergroupIndex(1.0), n, 0.3), 1e-13);
  }
}

TEST(SineBasis, Examples) {
  EXPECT_NEAR(sine_basis(1, 0.5), std::sqrt(2.0), 1e-15);
  for (int k = 1; k <= 4; ++k) EXPECT_NEAR(sine_basis(k, 0.3 + 2.0), sine_basis(k, 0.3), 1e-14);
  EXPECT_NEAR(gk([](double r) { return sine_basis(2, r) * sine_basis(3, r); }, 0.0, 1.0), 0.0, 1e-14);
}

TEST(SineBasis, GramIsIdentity) {
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      const double v = gk([&](double r) { return sine_basis(a, r) * sine_basis(b, r); }, 0.0, 1.0);
      EXPECT_NEAR(v, a == b ? 1.0 : 0.0, 1e-10);
    }
  }
}

TEST(ChebyshevU, Examples) {
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(chebyshev_u(k, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(chebyshev_u(1, 0.0), 0.0, 1e-15);
  for (double x : {-0.9, 0.0, 0.4}) EXPECT_EQ(chebyshev_u(0, x), 1.0);
  EXPECT_THROW(chebyshev_u(2, 1.5), DomainError);
}

TEST(ChebyshevU, MatchesTrigonometricForm) {
  for (int k = 0; k <= 8; ++k) {
    for (double t = 0.1; t < kPi; t += 0.3) {
      EXPECT_NEAR(chebyshev_u(k, std::cos(t)), std::sin((k + 1) * t) / ((k + 1) * std::sin(t)), 1e-13);
    }
  }
}

}  // namespace
