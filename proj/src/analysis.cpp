// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dg1d/errors.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

namespace {

void require_infsup_degree(const DgSpace& space) {
  require(space.degree() >= 2, Status::invalid_argument,
          "the inf-sup theory requires polynomial degree k >= 2");
}

Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& gram, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  require(llt.info() == Eigen::Success, Status::numerical_failure,
          std::string(what) + " Gram matrix is not positive definite");
  return llt.matrixL();
}

// Dense jump/gradient-jump/gradient-average functional rows at every node.
struct NodeRows {
  Eigen::MatrixXd jump;          // (n+1) x nd
  Eigen::MatrixXd grad_jump;     // zero rows at boundary nodes
  Eigen::MatrixXd grad_average;
};

NodeRows node_rows_dense(const DgSpace& space) {
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  NodeRows rows;
  rows.jump = Eigen::MatrixXd::Zero(n + 1, space.total_dofs());
  rows.grad_jump = Eigen::MatrixXd::Zero(n + 1, space.total_dofs());
  rows.grad_average = Eigen::MatrixXd::Zero(n + 1, space.total_dofs());
  for (int node = 0; node <= n; ++node) {
    NodeBasisTraces tr = node_basis_traces(space, node);
    for (std::size_t a = 0; a < tr.dofs.size(); ++a) {
      int i = static_cast<int>(a);
      rows.jump(node, tr.dofs[a]) += tr.jump(i);
      rows.grad_average(node, tr.dofs[a]) += tr.grad_average(i);
      if (tr.interior) rows.grad_jump(node, tr.dofs[a]) += tr.grad_jump(i);
    }
  }
  return rows;
}

// znorm Gram of V_h alone: identity mass plus node terms.
Eigen::MatrixXd znorm_gram(const DgSpace& space) {
  const Mesh1D& mesh = space.mesh();
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(space.total_dofs(), space.total_dofs());
  for (int node = 0; node <= mesh.num_elements(); ++node) {
    NodeBasisTraces tr = node_basis_traces(space, node);
    double he = mesh.node_size(node);
    for (std::size_t r = 0; r < tr.dofs.size(); ++r) {
      for (std::size_t c = 0; c < tr.dofs.size(); ++c) {
        int ri = static_cast<int>(r), ci = static_cast<int>(c);
        M(tr.dofs[r], tr.dofs[c]) += he * he * he * tr.grad_average(ri) * tr.grad_average(ci) +
                                     he * tr.jump(ri) * tr.jump(ci);
      }
    }
  }
  return M;
}

// A_h(phi_i, s_j) = int phi_i' s_j' - sum_nodes [phi_i] s_j'(node) as a dense
// block with V_h rows; also the transpose of the Ritz right-hand-side map.
Eigen::MatrixXd mixed_block_dense(const DgSpace& space, const C1Grams& grams) {
  NodeRows rows = node_rows_dense(space);
  Eigen::MatrixXd out = grams.vs1;
  for (int node = 0; node <= space.mesh().num_elements(); ++node) {
    out.noalias() -= rows.jump.row(node).transpose() * grams.deriv_at_nodes.row(node);
  }
  return out;
}

// Largest eigenvalue of the quotient pencil (N, D): D is eigendecomposed,
// directions below the relative cutoff are dropped (they are null for N as
// well), and the supremum is the top eigenvalue of the whitened N.
double quotient_sup(const Eigen::MatrixXd& N, const Eigen::MatrixXd& D) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (D + D.transpose()));
  require(es.info() == Eigen::Success, Status::numerical_failure,
          "eigendecomposition failed in quotient supremum");
  const Eigen::VectorXd& lam = es.eigenvalues();
  double lmax = lam.maxCoeff();
  require(lmax > 0.0, Status::numerical_failure, "denominator form is identically zero");
  std::vector<int> keep;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) > 1e-10 * lmax) keep.push_back(i);
  }
  Eigen::MatrixXd B(D.rows(), static_cast<int>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    B.col(static_cast<int>(c)) = es.eigenvectors().col(keep[c]) / std::sqrt(lam(keep[c]));
  }
  Eigen::MatrixXd W = B.transpose() * N * B;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(0.5 * (W + W.transpose()));
  require(es2.info() == Eigen::Success, Status::numerical_failure,
          "eigendecomposition failed in quotient supremum");
  return es2.eigenvalues().maxCoeff();
}

}  // namespace

InfSupResult infsup_constant(const Eigen::MatrixXd& A, const Eigen::MatrixXd& gram_trial,
                             const Eigen::MatrixXd& gram_test) {
  require(A.rows() == gram_test.rows() && A.cols() == gram_trial.rows(),
          Status::invalid_argument, "form matrix dimensions do not match the Gram matrices");
  Eigen::MatrixXd l_trial = cholesky_lower(gram_trial, "trial");
  Eigen::MatrixXd l_test = cholesky_lower(gram_test, "test");
  Eigen::MatrixXd C = l_test.triangularView<Eigen::Lower>().solve(A);
  C = l_trial.triangularView<Eigen::Lower>().solve(C.transpose()).transpose();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(C);
  InfSupResult out;
  out.gamma = svd.singularValues().minCoeff();
  out.sigma_max = svd.singularValues().maxCoeff();
  return out;
}

WhSpace build_wh_space(const DgSpace& space, const C1Space& c1space, double cutoff) {
  require(cutoff > 0.0 && cutoff < 1.0, Status::invalid_argument,
          "rank cutoff must lie in (0, 1)");
  C1Grams g = c1_grams(space, c1space);
  NodeRows rows = node_rows_dense(space);
  const Mesh1D& mesh = space.mesh();
  int nv = space.total_dofs();
  int ns = c1space.total_dofs();
  // znorm pairings; jump terms vanish on S (continuous, zero at the boundary).
  Eigen::MatrixXd z_vs = g.vs0;
  Eigen::MatrixXd z_ss = g.s0;
  for (int node = 0; node <= mesh.num_elements(); ++node) {
    double he3 = std::pow(mesh.node_size(node), 3);
    z_vs.noalias() +=
        he3 * rows.grad_average.row(node).transpose() * g.deriv_at_nodes.row(node);
    z_ss.noalias() +=
        he3 * g.deriv_at_nodes.row(node).transpose() * g.deriv_at_nodes.row(node);
  }
  WhSpace wh;
  wh.dim_v = nv;
  wh.dim_s = ns;
  wh.merged_gram.resize(nv + ns, nv + ns);
  wh.merged_gram.topLeftCorner(nv, nv) = znorm_gram(space);
  wh.merged_gram.topRightCorner(nv, ns) = z_vs;
  wh.merged_gram.bottomLeftCorner(ns, nv) = z_vs.transpose();
  wh.merged_gram.bottomRightCorner(ns, ns) = z_ss;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(wh.merged_gram);
  require(es.info() == Eigen::Success, Status::numerical_failure,
          "eigendecomposition of the merged Gram failed");
  double lmax = es.eigenvalues().maxCoeff();
  require(lmax > 0.0, Status::numerical_failure, "merged Gram is identically zero");
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > cutoff * lmax) keep.push_back(i);
  }
  wh.dim = static_cast<int>(keep.size());
  wh.basis.resize(nv + ns, wh.dim);
  for (int c = 0; c < wh.dim; ++c) {
    wh.basis.col(c) = es.eigenvectors().col(keep[c]) / std::sqrt(es.eigenvalues()(keep[c]));
  }
  return wh;
}

LevelSpectra level_spectra(const DgSpace& space, const C1Space& c1space,
                           const PenaltyParams& params, double cutoff) {
  require_infsup_degree(space);
  AssembledForms forms = assemble_ip(space, params);
  LevelSpectra out;
  InfSupResult v = infsup_constant(forms.A_primal, forms.M0, forms.M2);
  out.gamma_v = v.gamma;
  out.sigma_max = v.sigma_max;
  out.lambda_coercivity = coercivity_eigenvalue(forms);

  WhSpace wh = build_wh_space(space, c1space, cutoff);
  RitzOperator ritz(space, c1space);
  int nv = space.total_dofs();
  int ns = c1space.total_dofs();
  Eigen::MatrixXd a_mix(nv + ns, nv);  // rows: W generators as test, cols: trial V
  a_mix.topRows(nv) = forms.A_primal;
  a_mix.bottomRows(ns) = Eigen::MatrixXd(ritz.mixed()).transpose();
  Eigen::MatrixXd G = wh.basis.transpose() * a_mix;
  Eigen::MatrixXd l_trial = cholesky_lower(forms.M2, "trial");
  Eigen::MatrixXd C = l_trial.triangularView<Eigen::Lower>().solve(G.transpose()).transpose();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(C);
  out.gamma_w = svd.singularValues().minCoeff();
  return out;
}

ProofConstruction::ProofConstruction(const DgSpace& space, const C1Space& c1space,
                                     const PenaltyParams& params, double alpha)
    : space_(&space) {
  require_infsup_degree(space);
  alpha_ = alpha > 0.0 ? alpha : 1.0 / std::max(params.sigma0 * params.sigma0,
                                                params.sigma1 * params.sigma1);
  const Mesh1D& mesh = space.mesh();
  hmin_ = mesh.min_element_size();
  hmax_ = mesh.max_element_size();
  AssembledForms forms = assemble_ip(space, params);
  A_ = forms.A_primal;
  M2_ = forms.M2;
  RitzOperator ritz(space, c1space);
  mixed_ = Eigen::MatrixXd(ritz.mixed());
  C1Grams g = c1_grams(space, c1space);
  vs0_ = g.vs0;
  s0_ = g.s0;
  s_stiffness_.compute(g.s1);
  require(s_stiffness_.info() == Eigen::Success, Status::internal,
          "C1 stiffness matrix is singular; boundary value pinning was lost");
  QuadratureRule rule = gauss_rule(space.degree() + 3);
  int m = space.dofs_per_element();
  vsec_.resize(mesh.num_elements());
  for (int e = 0; e < mesh.num_elements(); ++e) {
    double h = mesh.element_size(e);
    vsec_[e] = Eigen::MatrixXd::Zero(m, m);
    for (int q = 0; q < rule.points.size(); ++q) {
      Eigen::VectorXd b0 = space.basis(e, rule.points(q), 0);
      Eigen::VectorXd b2 = space.basis(e, rule.points(q), 2);
      vsec_[e].noalias() += rule.weights(q) * h * b0 * b2.transpose();
    }
  }
}

ProofCheckResult ProofConstruction::check(const Eigen::VectorXd& w) const {
  require(w.size() == space_->total_dofs(), Status::invalid_argument,
          "coefficient vector length does not match the space");
  double ee2 = w.dot(M2_ * w);
  require(ee2 > 0.0, Status::invalid_argument,
          "proof construction is undefined for the zero function");
  Eigen::VectorXd rw = s_stiffness_.solve(mixed_.transpose() * w);
  const Mesh1D& mesh = space_->mesh();
  int m = space_->dofs_per_element();
  Eigen::VectorXd hlap(space_->total_dofs());
  for (int e = 0; e < mesh.num_elements(); ++e) {
    double h = mesh.element_size(e);
    hlap.segment(space_->first_dof(e), m) =
        h * h * (vsec_[e] * w.segment(space_->first_dof(e), m));
  }
  Eigen::VectorXd v_part = w - alpha_ * hlap;  // V_h part of v; the S part is -R(w)
  double a_wv = w.dot(A_ * v_part) - w.dot(mixed_ * rw);
  double l2v2 = v_part.squaredNorm() - 2.0 * v_part.dot(vs0_ * rw) + rw.dot(s0_ * rw);
  ProofCheckResult out;
  out.lower = a_wv / (hmin_ * hmin_ * ee2);
  out.upper = std::sqrt(std::max(l2v2, 0.0)) / (hmax_ * hmax_ * std::sqrt(ee2));
  return out;
}

ReconstructionBounds::ReconstructionBounds(const DgSpace& space, const C1Space& c1space) {
  require_infsup_degree(space);
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  int nv = space.total_dofs();
  C1Grams g = c1_grams(space, c1space);
  NodeRows rows = node_rows_dense(space);
  Eigen::MatrixXd E = Eigen::MatrixXd(averaging_matrix(space, c1space));
  Eigen::LLT<Eigen::MatrixXd> k_llt(g.s1);
  require(k_llt.info() == Eigen::Success, Status::internal,
          "C1 stiffness matrix is singular; boundary value pinning was lost");
  Eigen::MatrixXd TS = k_llt.solve(mixed_block_dense(space, g).transpose());
  // Ritz difference d = R(w) - w: broken Gram of d per derivative order.
  Eigen::MatrixXd H[3];
  const Eigen::MatrixXd* ss[3] = {&g.s0, &g.s1, &g.s2};
  const Eigen::MatrixXd* vs[3] = {&g.vs0, &g.vs1, &g.vs2};
  const Eigen::MatrixXd vv0 = Eigen::MatrixXd::Identity(nv, nv);
  const Eigen::MatrixXd* vv[3] = {&vv0, &g.v1, &g.v2};
  for (int r = 0; r <= 2; ++r) {
    Eigen::MatrixXd X = (*vs[r]) * TS;
    Eigen::MatrixXd Q = TS.transpose() * (*ss[r]) * TS - X - X.transpose() + (*vv[r]);
    H[r] = 0.5 * (Q + Q.transpose());
  }
  // Averaging difference d = E2(w) - w in the broken energy norm; the jumps
  // of d equal -[w] at every node since E2(w) is conforming.
  Eigen::MatrixXd XE = g.vs1 * E;
  Eigen::MatrixXd QL = E.transpose() * g.s1 * E - XE - XE.transpose() + g.v1;
  for (int node = 0; node <= n; ++node) {
    QL.noalias() +=
        rows.jump.row(node).transpose() * rows.jump.row(node) / mesh.node_size(node);
  }
  QL = 0.5 * (QL + QL.transpose());
  // Jump functionals: gradient jumps over interior nodes, jumps everywhere.
  Eigen::MatrixXd JM[3], L31 = Eigen::MatrixXd::Zero(nv, nv);
  for (int a = 0; a <= 2; ++a) JM[a] = Eigen::MatrixXd::Zero(nv, nv);
  for (int node = 0; node <= n; ++node) {
    double he = mesh.node_size(node);
    Eigen::MatrixXd jj = rows.jump.row(node).transpose() * rows.jump.row(node);
    Eigen::MatrixXd gg = rows.grad_jump.row(node).transpose() * rows.grad_jump.row(node);
    for (int a = 0; a <= 2; ++a) {
      JM[a] += std::pow(he, 3 - 2 * a) * gg + std::pow(he, 1 - 2 * a) * jj;
    }
    L31 += he * gg + jj / he;
  }
  num_[0] = QL;
  den_[0] = L31;
  num_[1] = H[0];
  den_[1] = JM[0];
  num_[2] = H[0] + H[1];
  den_[2] = JM[1];
  num_[3] = H[0] + H[1] + H[2];
  den_[3] = JM[2];
}

BoundRatios ReconstructionBounds::ratios_of(const Eigen::VectorXd& w) const {
  BoundRatios out;
  double* slots[4] = {&out.averaging, &out.ritz_alpha0, &out.ritz_alpha1, &out.ritz_alpha2};
  for (int i = 0; i < 4; ++i) {
    double numv = w.dot(num_[i] * w);
    double denv = w.dot(den_[i] * w);
    // Conforming samples have zero jump functionals; they do not constrain
    // the bound, so report a zero ratio instead of dividing by zero.
    *slots[i] = denv > 0.0 ? numv / denv : 0.0;
  }
  return out;
}

BoundRatios ReconstructionBounds::worst_case() const {
  BoundRatios out;
  out.averaging = quotient_sup(num_[0], den_[0]);
  out.ritz_alpha0 = quotient_sup(num_[1], den_[1]);
  out.ritz_alpha1 = quotient_sup(num_[2], den_[2]);
  out.ritz_alpha2 = quotient_sup(num_[3], den_[3]);
  return out;
}

BoundRatios ReconstructionBounds::ensemble_max(int nsamples, std::uint64_t seed) const {
  require(nsamples > 0, Status::invalid_argument, "sample count must be positive");
  Rng rng(seed);
  BoundRatios worst;
  for (int s = 0; s < nsamples; ++s) {
    Eigen::VectorXd w = rng.normal_vector(static_cast<int>(num_[0].rows()));
    BoundRatios r = ratios_of(w);
    worst.averaging = std::max(worst.averaging, r.averaging);
    worst.ritz_alpha0 = std::max(worst.ritz_alpha0, r.ritz_alpha0);
    worst.ritz_alpha1 = std::max(worst.ritz_alpha1, r.ritz_alpha1);
    worst.ritz_alpha2 = std::max(worst.ritz_alpha2, r.ritz_alpha2);
  }
  return worst;
}

double ritz_projection_stability(const DgSpace& space, const C1Space& c1space,
                                 const PenaltyParams& params, int nsamples,
                                 std::uint64_t seed) {
  require_infsup_degree(space);
  require(nsamples > 0, Status::invalid_argument, "sample count must be positive");
  SymmetricBandMatrix A = assemble_ip_banded(space, params);
  A.factorize();  // propagates a coercivity failure
  RitzOperator ritz(space, c1space);
  C1Grams g = c1_grams(space, c1space);
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < nsamples; ++s) {
    Eigen::VectorXd ws = rng.normal_vector(c1space.total_dofs());
    Eigen::VectorXd u = A.solve_refined(ritz.mixed() * ws);
    double denom = std::sqrt(ws.dot(g.s0 * ws));
    worst = std::max(worst, u.norm() / denom);
  }
  return worst;
}

std::vector<double> eoc(const std::vector<std::pair<double, double>>& rows) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> out(rows.size(), nan);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    require(rows[i].first < rows[i - 1].first, Status::invalid_argument,
            "mesh sizes must be strictly decreasing");
    if (rows[i].second > 0.0 && rows[i - 1].second > 0.0) {
      out[i] = std::log(rows[i - 1].second / rows[i].second) /
               std::log(rows[i - 1].first / rows[i].first);
    }
  }
  return out;
}

}  // namespace dg1d
