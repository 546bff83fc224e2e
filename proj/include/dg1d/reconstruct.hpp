// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// Reconstruction operators from the broken space V_h into the C1 space S:
// the averaging operator E2 (dof-wise means) and the Ritz operator R
// (stiffness problem with jump-corrected right-hand side), together with the
// operator matrices shared by the analysis module.

#ifndef DG1D_RECONSTRUCT_HPP
#define DG1D_RECONSTRUCT_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "dg1d/c1space.hpp"
#include "dg1d/dgspace.hpp"
#include "dg1d/linalg.hpp"

namespace dg1d {

// E2 as a matrix mapping V_h coefficients to S dofs: interior vertex dofs
// take the mean of the two one-sided values/derivatives, boundary derivative
// dofs the single one-sided derivative, interior point dofs the value from
// the owning element.
Eigen::SparseMatrix<double> averaging_matrix(const DgSpace& space, const C1Space& c1space);

C1Function averaging_reconstruct(const DgFunction& u, const C1Space& c1space);

// Evaluation row of the S cardinal basis at a point: row(j) = s_j^{(r)}(x).
Eigen::VectorXd c1_point_row(const C1Space& c1space, double x, int r);

// Ritz reconstruction: the unique s in S with
//   int s' t' = int u' t' - sum_nodes [u] t'(node)   for all t in S.
class RitzOperator {
 public:
  RitzOperator(const DgSpace& space, const C1Space& c1space);

  // Mixed form block: mixed()(i, j) = A_h(phi_i, s_j)
  //                                 = int phi_i' s_j' - sum_nodes [phi_i] s_j'(node),
  // which is also the Ritz right-hand-side functional.
  const Eigen::SparseMatrix<double>& mixed() const { return mixed_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& u_coefficients) const;
  C1Function reconstruct(const DgFunction& u) const;

 private:
  const DgSpace* space_;
  const C1Space* c1_;
  Eigen::SparseMatrix<double> mixed_;
  SymmetricBandMatrix stiffness_;
};

// Dense integral and trace matrices coupling V_h and S; desk-scale sizes.
struct C1Grams {
  // V x V broken element integrals (the mass block is the identity).
  Eigen::MatrixXd v1;  // int phi' phi'
  Eigen::MatrixXd v2;  // int phi'' phi''
  // V x S broken integrals.
  Eigen::MatrixXd vs0, vs1, vs2;  // int phi^(r) s^(r)
  Eigen::MatrixXd vs_second;      // int phi s''
  // S x S integrals.
  Eigen::MatrixXd s0, s1, s2;  // int s t, int s' t', int s'' t''
  Eigen::MatrixXd ss_second;   // int s t''
  // Single-valued point evaluations at the mesh vertices, (n+1) x dim S.
  Eigen::MatrixXd value_at_nodes;
  Eigen::MatrixXd deriv_at_nodes;
};

C1Grams c1_grams(const DgSpace& space, const C1Space& c1space);

}  // namespace dg1d

#endif
