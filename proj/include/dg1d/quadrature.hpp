// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DG1D_QUADRATURE_HPP
#define DG1D_QUADRATURE_HPP

#include <Eigen/Dense>

namespace dg1d {

// Quadrature rule on the reference interval [0, 1]. Weights sum to 1.
struct QuadratureRule {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;
  int exactness;  // integrates polynomials up to this degree
};

// Gauss-Legendre rule with m points, exactness degree 2m - 1.
QuadratureRule gauss_rule(int m);

}  // namespace dg1d

#endif
