// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/quadrature.hpp"

#include <cmath>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

// Legendre polynomial P_m and its derivative at x in [-1, 1].
void legendre(int m, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  if (m == 0) {
    *p = p0;
    *dp = 0.0;
    return;
  }
  for (int n = 1; n < m; ++n) {
    double p2 = ((2 * n + 1) * x * p1 - n * p0) / (n + 1);
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  *dp = m * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_rule(int m) {
  require(m >= 1, Status::invalid_argument, "quadrature point count m must be at least 1");
  QuadratureRule rule;
  rule.points.resize(m);
  rule.weights.resize(m);
  rule.exactness = 2 * m - 1;
  if (m == 1) {
    rule.points(0) = 0.5;
    rule.weights(0) = 1.0;
    return rule;
  }
  for (int i = 0; i < m; ++i) {
    // Root of P_m in (-1, 1), found by Newton iteration from the Chebyshev guess.
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(m, x, &p, &dp);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(m, x, &p, &dp);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map from [-1, 1] to [0, 1]; roots come out in descending order.
    rule.points(m - 1 - i) = 0.5 * (x + 1.0);
    rule.weights(m - 1 - i) = 0.5 * w;
  }
  return rule;
}

}  // namespace dg1d
