// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// The C1-conforming piecewise polynomial space S of local degree k+2 with
// homogeneous Dirichlet values. Degrees of freedom: derivative at each
// boundary vertex (values pinned to zero), value and derivative at each
// interior vertex, and values at k-1 equally spaced points strictly inside
// each element. The element basis is the Hermite-Birkhoff cardinal basis of
// these conditions.

#ifndef DG1D_C1SPACE_HPP
#define DG1D_C1SPACE_HPP

#include <Eigen/Dense>
#include <vector>

#include "dg1d/dgspace.hpp"
#include "dg1d/mesh.hpp"

namespace dg1d {

class C1Space {
 public:
  // vh_degree is the degree k of the companion broken space; S uses k+2.
  C1Space(const Mesh1D& mesh, int vh_degree);

  const Mesh1D& mesh() const { return *mesh_; }
  int vh_degree() const { return k_; }
  int local_degree() const { return k_ + 2; }
  // Local conditions per element: 2 endpoint values, 2 endpoint derivatives,
  // k-1 interior values.
  int conditions_per_element() const { return k_ + 3; }
  int interior_points_per_element() const { return k_ - 1; }
  int total_dofs() const;

  // Global dof numbering is position-ordered along the line, giving a
  // stiffness bandwidth of k+2.
  int bandwidth() const { return k_ + 2; }

  // Global dof index of the value / derivative at a vertex; the value dof of
  // a boundary vertex is pinned and reported as -1.
  int vertex_value_dof(int vertex) const;
  int vertex_deriv_dof(int vertex) const;
  // Global dof index of interior interpolation point j (0-based, j < k-1).
  int interior_point_dof(int element, int j) const;
  // Reference coordinate of interior interpolation point j: (j+1)/k.
  double interior_point_t(int j) const;

  // Global dof ids of one element in local condition order
  // [value_left, deriv_left, value_right, deriv_right, interior 0..k-2];
  // -1 marks a pinned boundary value.
  const std::vector<int>& element_dofs(int element) const;

  // d^r/dx^r of the local cardinal basis at reference coordinate t; out has
  // conditions_per_element() entries in element_dofs order. Derivative-dof
  // cardinal functions are scaled by the element size so that global dofs
  // hold physical derivatives.
  void local_basis(int element, double t, int r, double* out) const;
  Eigen::VectorXd local_basis(int element, double t, int r) const;

 private:
  const Mesh1D* mesh_;
  int k_;
  // Reference cardinal coefficients: card_[r](p, c) is the coefficient of
  // t^p in the r-th derivative (in t) of cardinal function c.
  Eigen::MatrixXd card_[3];
  std::vector<std::vector<int>> dofs_;
};

class C1Function {
 public:
  C1Function(const C1Space& space, Eigen::VectorXd dofs);

  const C1Space& space() const { return *space_; }
  const Eigen::VectorXd& dofs() const { return dofs_; }

  double evaluate_on(int element, double t, int r) const;
  // Point evaluation; r in {0,1,2}. By conformity the result for r <= 1 does
  // not depend on the side at interior vertices.
  double evaluate(double x, int r) const;
  double evaluate(double x, Side side, int r) const;

 private:
  const C1Space* space_;
  Eigen::VectorXd dofs_;
};

}  // namespace dg1d

#endif
