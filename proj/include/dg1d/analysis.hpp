// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spectral computation of discrete inf-sup constants over V_h and over the
// merged space W(h) = V_h + S, the proof-construction check behind the W(h)
// stability bound, reconstruction bound ratios, Ritz-projection stability,
// and experimental orders of convergence.

#ifndef DG1D_ANALYSIS_HPP
#define DG1D_ANALYSIS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "dg1d/c1space.hpp"
#include "dg1d/forms.hpp"
#include "dg1d/reconstruct.hpp"

namespace dg1d {

struct InfSupResult {
  double gamma;      // smallest whitened singular value
  double sigma_max;  // largest whitened singular value (continuity constant)
};

// A(i, j) = form(trial_j, test_i); gram_trial and gram_test must be SPD.
// gamma is the smallest singular value of L_test^{-1} A L_trial^{-T} with
// M = L L^T the Cholesky factorizations.
InfSupResult infsup_constant(const Eigen::MatrixXd& A, const Eigen::MatrixXd& gram_trial,
                             const Eigen::MatrixXd& gram_test);

// Orthonormalized basis of W(h) = V_h + S under the znorm inner product.
// The sum is non-direct; rank reduction removes the overlap S intersect V_h.
struct WhSpace {
  Eigen::MatrixXd merged_gram;  // znorm Gram of the stacked generators [V_h; S]
  Eigen::MatrixXd basis;        // generator coordinates of the reduced basis, columns
  int dim_v = 0;
  int dim_s = 0;
  int dim = 0;  // effective dimension = columns of basis
};

WhSpace build_wh_space(const DgSpace& space, const C1Space& c1space, double cutoff = 1e-10);

// One mesh level of the inf-sup study. gamma_v: trial V_h in znorm, test V_h
// in eenorm. gamma_w: trial V_h in eenorm, test W(h) in znorm. Requires the
// inf-sup theory hypothesis k >= 2.
struct LevelSpectra {
  double gamma_v = 0.0;
  double gamma_w = 0.0;
  double lambda_coercivity = 0.0;
  double sigma_max = 0.0;
};

LevelSpectra level_spectra(const DgSpace& space, const C1Space& c1space,
                           const PenaltyParams& params, double cutoff = 1e-10);

// Verifies the stability construction v = w - R(w) - alpha h^2 (second
// derivative of w, element-wise): the form value A_h(w, v) controls
// (min h)^2 eenorm(w)^2 from below while |v| stays within
// (max h)^2 eenorm(w) up to a constant.
struct ProofCheckResult {
  double lower = 0.0;  // A_h(w, v) / ((min h)^2 eenorm(w)^2)
  double upper = 0.0;  // |v|_L2 / ((max h)^2 eenorm(w))
};

class ProofConstruction {
 public:
  // alpha <= 0 selects the default 1 / max(sigma0^2, sigma1^2).
  ProofConstruction(const DgSpace& space, const C1Space& c1space,
                    const PenaltyParams& params, double alpha = 0.0);

  double alpha() const { return alpha_; }
  ProofCheckResult check(const Eigen::VectorXd& w) const;

 private:
  const DgSpace* space_;
  double alpha_;
  double hmin_, hmax_;
  Eigen::MatrixXd A_, M2_;
  Eigen::MatrixXd mixed_;  // A_h(phi_i, s_j)
  Eigen::MatrixXd vs0_, s0_;
  Eigen::LLT<Eigen::MatrixXd> s_stiffness_;
  std::vector<Eigen::MatrixXd> vsec_;  // per element int phi_i phi_j''
};

// Ratio families behind the reconstruction error bounds: the averaging
// operator in the broken energy norm, and the Ritz operator in the broken
// Sobolev scale alpha = 0, 1, 2, each against its h-weighted jump functional.
struct BoundRatios {
  double averaging = 0.0;
  double ritz_alpha0 = 0.0;
  double ritz_alpha1 = 0.0;
  double ritz_alpha2 = 0.0;
};

class ReconstructionBounds {
 public:
  ReconstructionBounds(const DgSpace& space, const C1Space& c1space);

  // Ratio values for one broken function.
  BoundRatios ratios_of(const Eigen::VectorXd& w) const;
  // Largest ratios over the whole space (generalized eigenvalue problem on
  // the quotient by the common nullspace of numerator and denominator).
  BoundRatios worst_case() const;
  // Largest ratios over standard normal coefficient samples.
  BoundRatios ensemble_max(int nsamples, std::uint64_t seed) const;

 private:
  // Quadratic form matrices: index 0 averaging, 1..3 Ritz alpha = 0, 1, 2.
  Eigen::MatrixXd num_[4];
  Eigen::MatrixXd den_[4];
};

// Largest L2 amplification of the A_h-orthogonal projection onto V_h over an
// ensemble of random members of S. Propagates a coercivity failure when the
// form cannot be factorized.
double ritz_projection_stability(const DgSpace& space, const C1Space& c1space,
                                 const PenaltyParams& params, int nsamples,
                                 std::uint64_t seed);

// Experimental orders of convergence for rows of (h, error); h must be
// strictly decreasing. The first row and rows with nonpositive errors get a
// quiet NaN marker.
std::vector<double> eoc(const std::vector<std::pair<double, double>>& rows);

}  // namespace dg1d

#endif
