// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dg1d/errors.hpp"

namespace dg1d {

double default_sigma0(int degree) { return 10.0 * degree * degree; }

namespace {

void validate_params(const PenaltyParams& p) {
  require(p.sigma0 > 0.0, Status::invalid_argument, "sigma0 must be positive");
  require(p.sigma1 >= 0.0, Status::invalid_argument, "sigma1 must be nonnegative");
}

struct ElementBlocks {
  Eigen::MatrixXd grad;    // int phi_i' phi_j'
  Eigen::MatrixXd second;  // int phi_i'' phi_j''
  Eigen::MatrixXd vsec;    // int phi_i phi_j''
};

ElementBlocks element_blocks(const DgSpace& space, int element, const QuadratureRule& rule) {
  int m = space.dofs_per_element();
  double h = space.mesh().element_size(element);
  ElementBlocks blk;
  blk.grad = Eigen::MatrixXd::Zero(m, m);
  blk.second = Eigen::MatrixXd::Zero(m, m);
  blk.vsec = Eigen::MatrixXd::Zero(m, m);
  for (int q = 0; q < rule.points.size(); ++q) {
    double w = rule.weights(q) * h;
    Eigen::VectorXd b0 = space.basis(element, rule.points(q), 0);
    Eigen::VectorXd b1 = space.basis(element, rule.points(q), 1);
    Eigen::VectorXd b2 = space.basis(element, rule.points(q), 2);
    blk.grad.noalias() += w * b1 * b1.transpose();
    blk.second.noalias() += w * b2 * b2.transpose();
    blk.vsec.noalias() += w * b0 * b2.transpose();
  }
  return blk;
}

}  // namespace

AssembledForms assemble_ip(const DgSpace& space, const PenaltyParams& params) {
  validate_params(params);
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  int nd = space.total_dofs();
  AssembledForms out;
  out.quadrature = gauss_rule(space.degree() + 3);
  out.params = params;
  out.A_primal = Eigen::MatrixXd::Zero(nd, nd);
  out.A_ibp = Eigen::MatrixXd::Zero(nd, nd);
  out.M0 = Eigen::MatrixXd::Identity(nd, nd);  // orthonormal basis, mass = I
  out.M1 = Eigen::MatrixXd::Zero(nd, nd);
  out.M2 = Eigen::MatrixXd::Zero(nd, nd);

  int m = space.dofs_per_element();
  for (int e = 0; e < n; ++e) {
    ElementBlocks blk = element_blocks(space, e, out.quadrature);
    int base = space.first_dof(e);
    out.A_primal.block(base, base, m, m) += blk.grad;
    out.A_ibp.block(base, base, m, m) -= blk.vsec;  // -(u'', v): row test, col trial
    out.M1.block(base, base, m, m) += blk.grad;
    out.M2.block(base, base, m, m) += blk.second;
  }

  for (int node = 0; node <= n; ++node) {
    NodeBasisTraces tr = node_basis_traces(space, node);
    double he = mesh.node_size(node);
    int sz = static_cast<int>(tr.dofs.size());
    for (int r = 0; r < sz; ++r) {
      int i = tr.dofs[r];
      for (int c = 0; c < sz; ++c) {
        int j = tr.dofs[c];
        double jr = tr.jump(r), jc = tr.jump(c);
        double gar = tr.grad_average(r), gac = tr.grad_average(c);
        double gjr = tr.grad_jump(r), gjc = tr.grad_jump(c);
        double pen0 = params.sigma0 / he * jr * jc;
        double pen1 = tr.interior ? params.sigma1 * he * gjr * gjc : 0.0;
        out.A_primal(i, j) += -(gac * jr + gar * jc) + pen0 + pen1;
        out.A_ibp(i, j) += (tr.interior ? gjc * tr.average(r) : 0.0) - gar * jc + pen0 + pen1;
        out.M0(i, j) += he * he * he * gar * gac + he * jr * jc;
        out.M1(i, j) += jr * jc / he;
        out.M2(i, j) += (tr.interior ? gjr * gjc / he : 0.0) + jr * jc / (he * he * he);
      }
    }
  }
  return out;
}

SymmetricBandMatrix assemble_ip_banded(const DgSpace& space, const PenaltyParams& params) {
  validate_params(params);
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  int m = space.dofs_per_element();
  SymmetricBandMatrix A(space.total_dofs(), 2 * space.degree() + 1);
  QuadratureRule rule = gauss_rule(space.degree() + 3);
  for (int e = 0; e < n; ++e) {
    ElementBlocks blk = element_blocks(space, e, rule);
    int base = space.first_dof(e);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j <= i; ++j) {
        A.add(base + i, base + j, blk.grad(i, j));
      }
    }
  }
  for (int node = 0; node <= n; ++node) {
    NodeBasisTraces tr = node_basis_traces(space, node);
    double he = mesh.node_size(node);
    int sz = static_cast<int>(tr.dofs.size());
    for (int r = 0; r < sz; ++r) {
      int i = tr.dofs[r];
      for (int c = 0; c < sz; ++c) {
        int j = tr.dofs[c];
        if (i < j) continue;  // symmetric storage, emit lower triangle once
        double jr = tr.jump(r), jc = tr.jump(c);
        double gar = tr.grad_average(r), gac = tr.grad_average(c);
        double pen0 = params.sigma0 / he * jr * jc;
        double pen1 = tr.interior ? params.sigma1 * he * tr.grad_jump(r) * tr.grad_jump(c) : 0.0;
        A.add(i, j, -(gac * jr + gar * jc) + pen0 + pen1);
      }
    }
  }
  return A;
}

Eigen::VectorXd load_vector_smooth(const std::function<double(double)>& fsrc,
                                   const DgSpace& space, int quadrature_boost,
                                   const std::vector<double>& breakpoints) {
  require(quadrature_boost >= 0, Status::invalid_argument, "quadrature boost must be >= 0");
  const Mesh1D& mesh = space.mesh();
  QuadratureRule rule = gauss_rule(space.degree() + 1 + quadrature_boost);
  Eigen::VectorXd load = Eigen::VectorXd::Zero(space.total_dofs());
  std::vector<double> cuts;
  for (int e = 0; e < mesh.num_elements(); ++e) {
    double xl = mesh.element_left(e), xr = mesh.element_right(e);
    cuts.assign({xl, xr});
    for (double b : breakpoints) {
      if (b > xl && b < xr) cuts.push_back(b);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      for (int q = 0; q < rule.points.size(); ++q) {
        double x = cuts[c] + (cuts[c + 1] - cuts[c]) * rule.points(q);
        double t = (x - xl) / (xr - xl);
        load.segment(space.first_dof(e), space.dofs_per_element()) +=
            rule.weights(q) * (cuts[c + 1] - cuts[c]) * fsrc(x) * space.basis(e, t, 0);
      }
    }
  }
  return load;
}

namespace {

// Integrates f(., r)^2 over [a, b] with the given rule; limits are taken
// from the interior side so breakpoint subcells see the correct branch.
double square_integral(const BrokenEval& f, double a, double b, int r,
                       const QuadratureRule& rule) {
  double acc = 0.0;
  for (int q = 0; q < rule.points.size(); ++q) {
    double x = a + (b - a) * rule.points(q);
    double v = f(x, Side::interior, r);
    acc += rule.weights(q) * (b - a) * v * v;
  }
  return acc;
}

}  // namespace

BrokenNorms norms_of(const BrokenEval& f, const Mesh1D& mesh, int quadrature_points,
                     const std::vector<double>& breakpoints) {
  require(quadrature_points >= 1, Status::invalid_argument,
          "quadrature point count must be >= 1");
  QuadratureRule rule = gauss_rule(quadrature_points);
  int n = mesh.num_elements();
  double l2sq = 0.0, h1sq = 0.0, h2sq = 0.0;
  bool warning = false;
  std::vector<double> cuts;
  for (int e = 0; e < n; ++e) {
    double xl = mesh.element_left(e), xr = mesh.element_right(e);
    cuts.assign({xl, xr});
    for (double b : breakpoints) {
      if (b > xl && b < xr) cuts.push_back(b);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      double a = cuts[c], b = cuts[c + 1], mid = 0.5 * (a + b);
      for (int r = 0; r <= 2; ++r) {
        double coarse = square_integral(f, a, b, r, rule);
        double fine = square_integral(f, a, mid, r, rule) + square_integral(f, mid, b, r, rule);
        double scale = std::max({std::abs(coarse), std::abs(fine), 1e-300});
        if (std::abs(coarse - fine) > 1e-6 * scale && std::abs(fine) > 1e-14) {
          warning = true;
        }
        if (r == 0) l2sq += fine;
        if (r == 1) h1sq += fine;
        if (r == 2) h2sq += fine;
      }
    }
  }
  double zn = l2sq, en = h1sq, een = h2sq;
  for (int node = 0; node <= n; ++node) {
    double x = mesh.vertex(node);
    double he = mesh.node_size(node);
    bool interior = node > 0 && node < n;
    double vl = 0, vr = 0, dl = 0, dr = 0;
    if (node > 0) {
      vl = f(x, Side::left, 0);
      dl = f(x, Side::left, 1);
    }
    if (node < n) {
      vr = f(x, Side::right, 0);
      dr = f(x, Side::right, 1);
    }
    double jump, grad_avg, grad_jump;
    if (interior) {
      jump = vl - vr;
      grad_avg = 0.5 * (dl + dr);
      grad_jump = dl - dr;
    } else if (node == 0) {  // outward normal -1
      jump = -vr;
      grad_avg = dr;
      grad_jump = -dr;
    } else {  // outward normal +1
      jump = vl;
      grad_avg = dl;
      grad_jump = dl;
    }
    zn += he * he * he * grad_avg * grad_avg + he * jump * jump;
    en += jump * jump / he;
    een += (interior ? grad_jump * grad_jump / he : 0.0) + jump * jump / (he * he * he);
  }
  BrokenNorms out;
  out.norms.znorm = std::sqrt(zn);
  out.norms.enorm = std::sqrt(en);
  out.norms.eenorm = std::sqrt(een);
  out.l2 = std::sqrt(l2sq);
  out.quadrature_warning = warning;
  return out;
}

BrokenNorms norms_of(const DgFunction& u) {
  const DgSpace& space = u.space();
  BrokenEval eval = [&u](double x, Side side, int r) { return u.evaluate(x, side, r); };
  return norms_of(eval, space.mesh(), space.degree() + 3);
}

double coercivity_eigenvalue(const AssembledForms& forms) {
  Eigen::MatrixXd sym = 0.5 * (forms.A_primal + forms.A_primal.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, forms.M1);
  require(solver.info() == Eigen::Success, Status::numerical_failure,
          "generalized eigenvalue solve failed");
  return solver.eigenvalues().minCoeff();
}

double check_coercivity(const AssembledForms& forms) {
  double lambda = coercivity_eigenvalue(forms);
  if (lambda <= 0.0) {
    std::ostringstream msg;
    msg << "coercivity failure: smallest generalized eigenvalue " << lambda
        << " is not positive at sigma0=" << forms.params.sigma0;
    fail(Status::coercivity_failure, msg.str());
  }
  return lambda;
}

}  // namespace dg1d
