// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/c1space.hpp"

#include <cmath>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

// Value of the polynomial with monomial coefficient column c of coeffs at t.
double horner(const Eigen::MatrixXd& coeffs, int c, double t) {
  double acc = 0.0;
  for (int p = static_cast<int>(coeffs.rows()) - 1; p >= 0; --p) {
    acc = acc * t + coeffs(p, c);
  }
  return acc;
}

}  // namespace

C1Space::C1Space(const Mesh1D& mesh, int vh_degree) : mesh_(&mesh), k_(vh_degree) {
  require(vh_degree >= 1, Status::invalid_argument, "companion degree k must be >= 1");
  int d = conditions_per_element();
  // Condition matrix over monomials t^p: rows are the local conditions
  // p(0), p'(0), p(1), p'(1), p(j/k); unisolvent for degree k+2.
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  for (int p = 0; p < d; ++p) {
    C(0, p) = (p == 0) ? 1.0 : 0.0;
    C(1, p) = (p == 1) ? 1.0 : 0.0;
    C(2, p) = 1.0;
    C(3, p) = p;
    for (int j = 0; j < k_ - 1; ++j) {
      C(4 + j, p) = std::pow(interior_point_t(j), p);
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(C);
  require(lu.isInvertible(), Status::internal,
          "local interpolation conditions are not unisolvent");
  card_[0] = lu.inverse();
  card_[1] = Eigen::MatrixXd::Zero(d, d);
  card_[2] = Eigen::MatrixXd::Zero(d, d);
  for (int p = 1; p < d; ++p) card_[1].row(p - 1) = p * card_[0].row(p);
  for (int p = 1; p < d; ++p) card_[2].row(p - 1) = p * card_[1].row(p);

  int n = mesh.num_elements();
  dofs_.resize(n);
  for (int e = 0; e < n; ++e) {
    std::vector<int>& g = dofs_[e];
    g = {vertex_value_dof(e), vertex_deriv_dof(e), vertex_value_dof(e + 1),
         vertex_deriv_dof(e + 1)};
    for (int j = 0; j < k_ - 1; ++j) g.push_back(interior_point_dof(e, j));
  }
}

int C1Space::total_dofs() const { return mesh_->num_elements() * (k_ + 1); }

int C1Space::vertex_value_dof(int vertex) const {
  if (vertex == 0 || vertex == mesh_->num_elements()) return -1;  // pinned
  return (vertex - 1) * (k_ + 1) + k_;
}

int C1Space::vertex_deriv_dof(int vertex) const {
  if (vertex == 0) return 0;
  int pos = (vertex - 1) * (k_ + 1) + k_;
  return vertex == mesh_->num_elements() ? pos : pos + 1;
}

int C1Space::interior_point_dof(int element, int j) const {
  return 1 + element * (k_ + 1) + j;
}

double C1Space::interior_point_t(int j) const {
  return static_cast<double>(j + 1) / k_;
}

const std::vector<int>& C1Space::element_dofs(int element) const {
  return dofs_[element];
}

void C1Space::local_basis(int element, double t, int r, double* out) const {
  require(r >= 0 && r <= 2, Status::invalid_argument, "derivative order r must be in {0, 1, 2}");
  int d = conditions_per_element();
  double h = mesh_->element_size(element);
  double chain = std::pow(1.0 / h, r);
  for (int c = 0; c < d; ++c) {
    out[c] = horner(card_[r], c, t) * chain;
  }
  out[1] *= h;  // derivative dofs carry physical derivatives
  out[3] *= h;
}

Eigen::VectorXd C1Space::local_basis(int element, double t, int r) const {
  Eigen::VectorXd v(conditions_per_element());
  local_basis(element, t, r, v.data());
  return v;
}

C1Function::C1Function(const C1Space& space, Eigen::VectorXd dofs)
    : space_(&space), dofs_(std::move(dofs)) {
  require(dofs_.size() == space.total_dofs(), Status::invalid_argument,
          "dof vector length does not match the space");
}

double C1Function::evaluate_on(int element, double t, int r) const {
  Eigen::VectorXd b = space_->local_basis(element, t, r);
  const std::vector<int>& g = space_->element_dofs(element);
  double acc = 0.0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g[a] >= 0) acc += b(static_cast<int>(a)) * dofs_(g[a]);
  }
  return acc;
}

double C1Function::evaluate(double x, int r) const {
  return evaluate(x, Side::interior, r);
}

double C1Function::evaluate(double x, Side side, int r) const {
  const Mesh1D& mesh = space_->mesh();
  LocateResult loc = mesh.locate(x);
  int e = loc.element;
  if (side == Side::left && e > 0 && x == mesh.vertex(e)) {
    e -= 1;
  }
  double t = (x - mesh.element_left(e)) / mesh.element_size(e);
  return evaluate_on(e, t, r);
}

}  // namespace dg1d
