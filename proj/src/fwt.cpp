// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/fwt.hpp"

#include <algorithm>
#include <cmath>

#include "radial/error.hpp"
#include "radial/hankel.hpp"
#include "radial/parallel.hpp"
#include "radial/special.hpp"

namespace radial {

std::vector<Complex> project(const EvenFunction& f_hat, const ScalingFunction& phi, int j, int K) {
  if (!phi.orthonormal()) throw DomainError("project: scaling function is not orthonormal");
  const double upper = std::ldexp(phi.extent(), j);
  std::vector<Complex> c(K);
  parallel_for(K, [&](std::size_t k) {
    c[k] = weighted_integral(f_hat, basis_spectrum(phi, j, static_cast<int>(k) + 1), kRadial3D, upper);
  });
  return c;
}

std::pair<Complex, Complex> qr_coefficients(const CosineFilter& g, int ell, int k) {
  if (ell < 1 || k < 1) throw DomainError("qr_coefficients: indices must be >= 1");
  const Complex q = 2 * ell == k ? std::conj(2.0 * g.g(0) - g.g(4 * ell))
                                 : std::conj(g.g(std::abs(2 * ell - k)) - g.g(2 * ell + k));
  const int m = 2 * ell - 1;
  const double sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
  const Complex r = m == k ? 2.0 * g.g(0) - g.g(4 * ell - 2) : sign * (g.g(std::abs(m - k)) - g.g(m + k));
  return {q, r};
}

int decomposed_length(int K, int N) { return (K + N + 1) / 2; }

namespace {

// One analysis step on c of length K.
void analyse(const std::vector<Complex>& c, const CosineFilter& g, std::vector<Complex>& coarse,
             std::vector<Complex>& detail) {
  const int K = static_cast<int>(c.size());
  const int N = g.order();
  const int L = decomposed_length(K, N);
  coarse.assign(L, 0.0);
  detail.assign(L, 0.0);
  parallel_for(L, [&](std::size_t idx) {
    const int ell = static_cast<int>(idx) + 1;
    Complex cq = 0.0;
    Complex cr = 0.0;
    const int lo = std::max(1, 2 * ell - 1 - N);
    const int hi = std::min(K, 2 * ell + N);
    for (int k = lo; k <= hi; ++k) {
      const auto [q, r] = qr_coefficients(g, ell, k);
      cq += c[k - 1] * q;
      cr += c[k - 1] * r;
    }
    coarse[idx] = cq;
    detail[idx] = cr;
  });
}

// One synthesis step back to length K.
std::vector<Complex> synthesise(const std::vector<Complex>& coarse, const std::vector<Complex>& detail,
                                const CosineFilter& g, int K) {
  const int N = g.order();
  std::vector<Complex> c(K, 0.0);
  parallel_for(K, [&](std::size_t idx) {
    const int k = static_cast<int>(idx) + 1;
    // q_l^(k) and r_l^(k) vanish unless |2l - k| <= N, |2l - 1 - k| <= N or 2l + k <= N.
    const int hi = (k + N + 1) / 2;
    Complex sum = 0.0;
    for (int ell = 1; ell <= hi; ++ell) {
      const auto [q, r] = qr_coefficients(g, ell, k);
      if (ell <= static_cast<int>(coarse.size())) sum += coarse[ell - 1] * std::conj(q);
      if (ell <= static_cast<int>(detail.size())) sum += detail[ell - 1] * std::conj(r);
    }
    c[idx] = sum;
  });
  return c;
}

}  // namespace

CoefficientPyramid decompose(const std::vector<Complex>& c_top, const CosineFilter& g, int depth, int j_top,
                             double identity_tol) {
  if (depth < 0) throw DomainError("decompose: depth must be >= 0");
  if (g.identity_residual() > identity_tol) throw ToleranceError("decompose: filter is not orthonormal");
  CoefficientPyramid p;
  p.j_top = j_top;
  p.coarse = c_top;
  p.lengths.push_back(static_cast<int>(c_top.size()));
  for (int level = 0; level < depth; ++level) {
    std::vector<Complex> coarse;
    std::vector<Complex> detail;
    analyse(p.coarse, g, coarse, detail);
    p.details.push_back(std::move(detail));
    p.coarse = std::move(coarse);
    p.lengths.push_back(static_cast<int>(p.coarse.size()));
  }
  return p;
}

std::vector<Complex> reconstruct(const CoefficientPyramid& pyramid, const CosineFilter& g) {
  const int depth = pyramid.depth();
  if (static_cast<int>(pyramid.lengths.size()) != depth + 1) {
    throw SchemaError("reconstruct: pyramid needs one length per level plus the coarsest");
  }
  if (static_cast<int>(pyramid.coarse.size()) != pyramid.lengths.back()) {
    throw SchemaError("reconstruct: coarse length does not match the recorded length");
  }
  std::vector<Complex> c = pyramid.coarse;
  for (int level = depth - 1; level >= 0; --level) {
    const auto& d = pyramid.details[level];
    if (static_cast<int>(d.size()) != pyramid.lengths[level + 1]) {
      throw SchemaError("reconstruct: detail length does not match the recorded length");
    }
    c = synthesise(c, d, g, pyramid.lengths[level]);
  }
  return c;
}

bool classical_tail_check(const CosineFilter& g, int ell) {
  const int N = g.order();
  if (!(2 * ell > N + 1)) throw DomainError("classical_tail_check: needs 2l > N + 1");
  for (int k = -N - 2; k <= N + 2; ++k) {
    const Complex h = std::abs(k) <= N ? g.tap(k) : Complex(0.0);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    // Band-edge rows below index 1 do not exist.
    if (2 * ell + k >= 1 && qr_coefficients(g, ell, 2 * ell + k).first != std::conj(h)) return false;
    if (2 * ell - 1 + k >= 1 && qr_coefficients(g, ell, 2 * ell - 1 + k).second != sign * h) return false;
  }
  return true;
}

}  // namespace radial
