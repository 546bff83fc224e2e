// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// Assembly of the stabilized symmetric interior penalty form through two
// algebraically equivalent routes, the Gram matrices of the three
// mesh-dependent norms, load vectors, and norm evaluation for arbitrary
// broken functions.

#ifndef DG1D_FORMS_HPP
#define DG1D_FORMS_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "dg1d/dgspace.hpp"
#include "dg1d/linalg.hpp"
#include "dg1d/mesh.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

struct PenaltyParams {
  double sigma0 = 0.0;  // jump penalty weight, > 0
  double sigma1 = 0.0;  // gradient-jump stabilization weight, >= 0
};

// Default jump penalty 10 k^2; large enough for coercivity at every k >= 1.
double default_sigma0(int degree);

struct AssembledForms {
  // A_primal holds A_h(phi_j, phi_i): broken stiffness, consistency and
  // symmetry terms -[u]{v'} - [v]{u'} at every node, sigma0/h_e [u][v] at
  // every node, sigma1 h_e [u'][v'] at interior nodes only.
  Eigen::MatrixXd A_primal;
  // A_ibp holds the integrated-by-parts rewriting: element integrals of
  // -u'' v, interior-node terms [u']{v}, all-node terms -[u]{v'}, and the
  // same penalty terms. Equal to A_primal up to roundoff.
  Eigen::MatrixXd A_ibp;
  Eigen::MatrixXd M0;  // Gram of znorm
  Eigen::MatrixXd M1;  // Gram of enorm
  Eigen::MatrixXd M2;  // Gram of eenorm
  QuadratureRule quadrature;
  PenaltyParams params;
};

// Assembles both routes of the IP form together with the norm Gram matrices.
AssembledForms assemble_ip(const DgSpace& space, const PenaltyParams& params);

// Assembles the primal route alone into a symmetric band matrix of
// bandwidth 2k+1; this is the solve path for large meshes.
SymmetricBandMatrix assemble_ip_banded(const DgSpace& space, const PenaltyParams& params);

// Load vector with entries int f phi_i, integrated element-wise with
// gauss_rule(k + 1 + quadrature_boost) split at the declared breakpoints.
Eigen::VectorXd load_vector_smooth(const std::function<double(double)>& fsrc,
                                   const DgSpace& space, int quadrature_boost = 4,
                                   const std::vector<double>& breakpoints = {});

struct NormTriple {
  double znorm = 0.0;
  double enorm = 0.0;
  double eenorm = 0.0;
};

struct BrokenNorms {
  NormTriple norms;
  double l2 = 0.0;
  // Set when the element integrals disagree between the base quadrature and
  // a once-refined rule, indicating non-smoothness inside an element that
  // was not declared as a breakpoint.
  bool quadrature_warning = false;
};

// A broken function evaluated pointwise with one-sided limits; r in {0,1,2}
// selects the derivative order.
using BrokenEval = std::function<double(double x, Side side, int r)>;

// znorm/enorm/eenorm (and the plain L2 norm) of a broken function.
// quadrature_points is the Gauss point count per subcell; breakpoints are
// interior non-smoothness locations used to split the quadrature.
BrokenNorms norms_of(const BrokenEval& f, const Mesh1D& mesh, int quadrature_points,
                     const std::vector<double>& breakpoints = {});

// Convenience overload for members of V_h.
BrokenNorms norms_of(const DgFunction& u);

// Smallest generalized eigenvalue of (sym(A_primal), M1). May be <= 0 when
// the jump penalty is too small.
double coercivity_eigenvalue(const AssembledForms& forms);

// Returns the smallest generalized eigenvalue when positive; throws a
// coercivity_failure error naming sigma0 otherwise.
double check_coercivity(const AssembledForms& forms);

}  // namespace dg1d

#endif
