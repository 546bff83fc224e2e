// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/dgspace.hpp"

#include <algorithm>
#include <cmath>

#include "dg1d/errors.hpp"

namespace dg1d {

DgSpace::DgSpace(const Mesh1D& mesh, int degree) : mesh_(&mesh), degree_(degree) {
  require(degree >= 0, Status::invalid_argument, "polynomial degree k must be nonnegative");
}

void DgSpace::basis(int element, double t, int r, double* out) const {
  require(r >= 0 && r <= 2, Status::invalid_argument, "derivative order r must be in {0, 1, 2}");
  int k = degree_;
  double h = mesh_->element_size(element);
  double s = 2.0 * t - 1.0;
  // Legendre three-term recurrence carried simultaneously for P, P', P''
  // with respect to s in [-1, 1].
  double P[3][64];  // value, first, second derivative rows; k + 1 <= 64
  require(k + 1 <= 64, Status::invalid_argument, "polynomial degree too large");
  P[0][0] = 1.0;
  P[1][0] = 0.0;
  P[2][0] = 0.0;
  if (k >= 1) {
    P[0][1] = s;
    P[1][1] = 1.0;
    P[2][1] = 0.0;
  }
  for (int n = 1; n < k; ++n) {
    double a = 2 * n + 1, b = n, c = n + 1;
    P[0][n + 1] = (a * s * P[0][n] - b * P[0][n - 1]) / c;
    P[1][n + 1] = (a * (P[0][n] + s * P[1][n]) - b * P[1][n - 1]) / c;
    P[2][n + 1] = (a * (2.0 * P[1][n] + s * P[2][n]) - b * P[2][n - 1]) / c;
  }
  // Chain rule d/dx = (2/h) d/ds; scaling sqrt((2n+1)/h) makes the family
  // L2-orthonormal on the element.
  double chain = std::pow(2.0 / h, r);
  for (int n = 0; n <= k; ++n) {
    out[n] = std::sqrt((2.0 * n + 1.0) / h) * P[r][n] * chain;
  }
}

Eigen::VectorXd DgSpace::basis(int element, double t, int r) const {
  Eigen::VectorXd v(dofs_per_element());
  basis(element, t, r, v.data());
  return v;
}

DgFunction::DgFunction(const DgSpace& space, Eigen::VectorXd coefficients)
    : space_(&space), coeffs_(std::move(coefficients)) {
  require(coeffs_.size() == space.total_dofs(), Status::invalid_argument,
          "coefficient vector length does not match the space");
}

double DgFunction::evaluate_on(int element, double t, int r) const {
  Eigen::VectorXd b = space_->basis(element, t, r);
  return b.dot(coeffs_.segment(space_->first_dof(element), space_->dofs_per_element()));
}

double DgFunction::evaluate(double x, Side side, int r) const {
  const Mesh1D& mesh = space_->mesh();
  LocateResult loc = mesh.locate(x);
  int e = loc.element;
  // locate() already assigns a vertex to the element on its right, which is
  // the one-sided limit from the right; only the left limit needs a shift.
  if (side == Side::left && e > 0 && x == mesh.vertex(e)) {
    e -= 1;
  }
  double t = (x - mesh.element_left(e)) / mesh.element_size(e);
  return evaluate_on(e, t, r);
}

TraceData trace_data(const DgFunction& f, int node) {
  const Mesh1D& mesh = f.space().mesh();
  int n = mesh.num_elements();
  require(node >= 0 && node <= n, Status::invalid_argument, "node index out of range");
  TraceData td;
  bool has_left = node > 0;
  bool has_right = node < n;
  if (has_left) {
    td.value_left = f.evaluate_on(node - 1, 1.0, 0);
    td.grad_left = f.evaluate_on(node - 1, 1.0, 1);
  }
  if (has_right) {
    td.value_right = f.evaluate_on(node, 0.0, 0);
    td.grad_right = f.evaluate_on(node, 0.0, 1);
  }
  if (has_left && has_right) {
    td.jump = td.value_left - td.value_right;
    td.average = 0.5 * (td.value_left + td.value_right);
    td.grad_jump = td.grad_left - td.grad_right;
    td.grad_average = 0.5 * (td.grad_left + td.grad_right);
  } else if (has_right) {  // left boundary, outward normal -1
    td.jump = -td.value_right;
    td.average = td.value_right;
    td.grad_jump = -td.grad_right;
    td.grad_average = td.grad_right;
  } else {  // right boundary, outward normal +1
    td.jump = td.value_left;
    td.average = td.value_left;
    td.grad_jump = td.grad_left;
    td.grad_average = td.grad_left;
  }
  return td;
}

NodeBasisTraces node_basis_traces(const DgSpace& space, int node) {
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  require(node >= 0 && node <= n, Status::invalid_argument, "node index out of range");
  NodeBasisTraces tr;
  int m = space.dofs_per_element();
  bool has_left = node > 0;
  bool has_right = node < n;
  tr.interior = has_left && has_right;
  int total = (has_left ? m : 0) + (has_right ? m : 0);
  tr.dofs.resize(total);
  tr.jump = Eigen::VectorXd::Zero(total);
  tr.average = Eigen::VectorXd::Zero(total);
  tr.grad_jump = Eigen::VectorXd::Zero(total);
  tr.grad_average = Eigen::VectorXd::Zero(total);
  int off = 0;
  if (has_left) {
    Eigen::VectorXd b0 = space.basis(node - 1, 1.0, 0);
    Eigen::VectorXd b1 = space.basis(node - 1, 1.0, 1);
    for (int i = 0; i < m; ++i) tr.dofs[off + i] = space.first_dof(node - 1) + i;
    double jsign = 1.0;  // interior convention v- - v+; right boundary normal is +1
    double asign = tr.interior ? 0.5 : 1.0;
    tr.jump.segment(off, m) = jsign * b0;
    tr.average.segment(off, m) = asign * b0;
    tr.grad_jump.segment(off, m) = jsign * b1;
    tr.grad_average.segment(off, m) = asign * b1;
    off += m;
  }
  if (has_right) {
    Eigen::VectorXd b0 = space.basis(node, 0.0, 0);
    Eigen::VectorXd b1 = space.basis(node, 0.0, 1);
    for (int i = 0; i < m; ++i) tr.dofs[off + i] = space.first_dof(node) + i;
    double jsign = -1.0;  // minus side of v- - v+; left boundary normal is -1
    double asign = tr.interior ? 0.5 : 1.0;
    tr.jump.segment(off, m) = jsign * b0;
    tr.average.segment(off, m) = asign * b0;
    tr.grad_jump.segment(off, m) = jsign * b1;
    tr.grad_average.segment(off, m) = asign * b1;
  }
  return tr;
}

DgFunction project_l2(const std::function<double(double)>& g, const DgSpace& space,
                      int quadrature_boost, const std::vector<double>& breakpoints) {
  require(quadrature_boost >= 0, Status::invalid_argument, "quadrature boost must be >= 0");
  const Mesh1D& mesh = space.mesh();
  int k = space.degree();
  QuadratureRule rule = gauss_rule(k + 1 + quadrature_boost);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(space.total_dofs());
  std::vector<double> cuts;
  for (int e = 0; e < mesh.num_elements(); ++e) {
    double xl = mesh.element_left(e), xr = mesh.element_right(e);
    double h = xr - xl;
    cuts.clear();
    cuts.push_back(xl);
    for (double b : breakpoints) {
      if (b > xl && b < xr) cuts.push_back(b);
    }
    cuts.push_back(xr);
    std::sort(cuts.begin(), cuts.end());
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(space.dofs_per_element());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      double a0 = cuts[c], b0 = cuts[c + 1];
      for (int q = 0; q < rule.points.size(); ++q) {
        double x = a0 + (b0 - a0) * rule.points(q);
        double t = (x - xl) / h;
        acc += rule.weights(q) * (b0 - a0) * g(x) * space.basis(e, t, 0);
      }
    }
    coeffs.segment(space.first_dof(e), space.dofs_per_element()) = acc;
  }
  return DgFunction(space, std::move(coeffs));
}

}  // namespace dg1d
