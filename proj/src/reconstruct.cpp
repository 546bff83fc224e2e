// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/reconstruct.hpp"

#include <vector>

#include "dg1d/errors.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

namespace {

void check_shared_mesh(const DgSpace& space, const C1Space& c1space) {
  require(&space.mesh() == &c1space.mesh(), Status::invalid_argument,
          "broken and C1 spaces must share one mesh");
  require(space.degree() == c1space.vh_degree(), Status::invalid_argument,
          "C1 space was built for a different polynomial degree");
}

// Single-valued evaluation rows of the S basis at mesh vertex `node`,
// taken from the element left of the node when one exists.
void node_rows(const C1Space& c1, int node, Eigen::VectorXd* value, Eigen::VectorXd* deriv) {
  int e = node > 0 ? node - 1 : 0;
  double t = node > 0 ? 1.0 : 0.0;
  *value = Eigen::VectorXd::Zero(c1.total_dofs());
  *deriv = Eigen::VectorXd::Zero(c1.total_dofs());
  Eigen::VectorXd b0 = c1.local_basis(e, t, 0);
  Eigen::VectorXd b1 = c1.local_basis(e, t, 1);
  const std::vector<int>& g = c1.element_dofs(e);
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g[a] < 0) continue;
    (*value)(g[a]) += b0(static_cast<int>(a));
    (*deriv)(g[a]) += b1(static_cast<int>(a));
  }
}

}  // namespace

Eigen::SparseMatrix<double> averaging_matrix(const DgSpace& space, const C1Space& c1space) {
  check_shared_mesh(space, c1space);
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  int m = space.dofs_per_element();
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i <= n; ++i) {
    int vd = c1space.vertex_value_dof(i);
    int dd = c1space.vertex_deriv_dof(i);
    if (i > 0 && i < n) {
      Eigen::VectorXd l0 = space.basis(i - 1, 1.0, 0), r0 = space.basis(i, 0.0, 0);
      Eigen::VectorXd l1 = space.basis(i - 1, 1.0, 1), r1 = space.basis(i, 0.0, 1);
      for (int a = 0; a < m; ++a) {
        trip.emplace_back(vd, space.first_dof(i - 1) + a, 0.5 * l0(a));
        trip.emplace_back(vd, space.first_dof(i) + a, 0.5 * r0(a));
        trip.emplace_back(dd, space.first_dof(i - 1) + a, 0.5 * l1(a));
        trip.emplace_back(dd, space.first_dof(i) + a, 0.5 * r1(a));
      }
    } else {
      int e = (i == 0) ? 0 : n - 1;
      double t = (i == 0) ? 0.0 : 1.0;
      Eigen::VectorXd b1 = space.basis(e, t, 1);
      for (int a = 0; a < m; ++a) {
        trip.emplace_back(dd, space.first_dof(e) + a, b1(a));
      }
    }
  }
  for (int e = 0; e < n; ++e) {
    for (int j = 0; j < c1space.interior_points_per_element(); ++j) {
      Eigen::VectorXd b0 = space.basis(e, c1space.interior_point_t(j), 0);
      for (int a = 0; a < m; ++a) {
        trip.emplace_back(c1space.interior_point_dof(e, j), space.first_dof(e) + a, b0(a));
      }
    }
  }
  Eigen::SparseMatrix<double> E(c1space.total_dofs(), space.total_dofs());
  E.setFromTriplets(trip.begin(), trip.end());
  return E;
}

C1Function averaging_reconstruct(const DgFunction& u, const C1Space& c1space) {
  Eigen::SparseMatrix<double> E = averaging_matrix(u.space(), c1space);
  return C1Function(c1space, E * u.coefficients());
}

Eigen::VectorXd c1_point_row(const C1Space& c1space, double x, int r) {
  const Mesh1D& mesh = c1space.mesh();
  LocateResult loc = mesh.locate(x);
  double t = (x - mesh.element_left(loc.element)) / mesh.element_size(loc.element);
  Eigen::VectorXd row = Eigen::VectorXd::Zero(c1space.total_dofs());
  Eigen::VectorXd b = c1space.local_basis(loc.element, t, r);
  const std::vector<int>& g = c1space.element_dofs(loc.element);
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g[a] >= 0) row(g[a]) += b(static_cast<int>(a));
  }
  return row;
}

RitzOperator::RitzOperator(const DgSpace& space, const C1Space& c1space)
    : space_(&space),
      c1_(&c1space),
      stiffness_(c1space.total_dofs(), c1space.bandwidth()) {
  check_shared_mesh(space, c1space);
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  int d = c1space.conditions_per_element();
  int m = space.dofs_per_element();
  QuadratureRule rule = gauss_rule(space.degree() + 3);
  std::vector<Eigen::Triplet<double>> trip;
  for (int e = 0; e < n; ++e) {
    double h = mesh.element_size(e);
    Eigen::MatrixXd k_local = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd g_local = Eigen::MatrixXd::Zero(m, d);  // int phi' s'
    for (int q = 0; q < rule.points.size(); ++q) {
      double w = rule.weights(q) * h;
      Eigen::VectorXd s1 = c1space.local_basis(e, rule.points(q), 1);
      Eigen::VectorXd v1 = space.basis(e, rule.points(q), 1);
      k_local.noalias() += w * s1 * s1.transpose();
      g_local.noalias() += w * v1 * s1.transpose();
    }
    const std::vector<int>& g = c1space.element_dofs(e);
    for (int a = 0; a < d; ++a) {
      if (g[a] < 0) continue;
      for (int b = 0; b < d; ++b) {
        if (g[b] < 0 || g[a] < g[b]) continue;
        stiffness_.add(g[a], g[b], k_local(a, b));
      }
      for (int i = 0; i < m; ++i) {
        trip.emplace_back(space.first_dof(e) + i, g[a], g_local(i, a));
      }
    }
  }
  for (int node = 0; node <= n; ++node) {
    Eigen::VectorXd val_row, der_row;
    node_rows(c1space, node, &val_row, &der_row);
    NodeBasisTraces tr = node_basis_traces(space, node);
    for (std::size_t r = 0; r < tr.dofs.size(); ++r) {
      if (tr.jump(static_cast<int>(r)) == 0.0) continue;
      for (int j = 0; j < der_row.size(); ++j) {
        if (der_row(j) != 0.0) {
          trip.emplace_back(tr.dofs[r], j, -tr.jump(static_cast<int>(r)) * der_row(j));
        }
      }
    }
  }
  mixed_.resize(space.total_dofs(), c1space.total_dofs());
  mixed_.setFromTriplets(trip.begin(), trip.end());
  try {
    stiffness_.factorize();
  } catch (const Error&) {
    fail(Status::internal,
         "C1 stiffness matrix is singular; boundary value pinning was lost");
  }
}

Eigen::VectorXd RitzOperator::apply(const Eigen::VectorXd& u_coefficients) const {
  require(u_coefficients.size() == space_->total_dofs(), Status::invalid_argument,
          "coefficient vector length does not match the space");
  return stiffness_.solve_refined(mixed_.transpose() * u_coefficients);
}

C1Function RitzOperator::reconstruct(const DgFunction& u) const {
  require(&u.space() == space_, Status::invalid_argument,
          "input lives in a different space than the operator");
  return C1Function(*c1_, apply(u.coefficients()));
}

C1Grams c1_grams(const DgSpace& space, const C1Space& c1space) {
  check_shared_mesh(space, c1space);
  const Mesh1D& mesh = space.mesh();
  int n = mesh.num_elements();
  int nv = space.total_dofs();
  int ns = c1space.total_dofs();
  int m = space.dofs_per_element();
  int d = c1space.conditions_per_element();
  QuadratureRule rule = gauss_rule(space.degree() + 3);
  C1Grams g;
  g.v1 = Eigen::MatrixXd::Zero(nv, nv);
  g.v2 = Eigen::MatrixXd::Zero(nv, nv);
  g.vs0 = Eigen::MatrixXd::Zero(nv, ns);
  g.vs1 = Eigen::MatrixXd::Zero(nv, ns);
  g.vs2 = Eigen::MatrixXd::Zero(nv, ns);
  g.vs_second = Eigen::MatrixXd::Zero(nv, ns);
  g.s0 = Eigen::MatrixXd::Zero(ns, ns);
  g.s1 = Eigen::MatrixXd::Zero(ns, ns);
  g.s2 = Eigen::MatrixXd::Zero(ns, ns);
  g.ss_second = Eigen::MatrixXd::Zero(ns, ns);
  for (int e = 0; e < n; ++e) {
    double h = mesh.element_size(e);
    int base = space.first_dof(e);
    const std::vector<int>& gl = c1space.element_dofs(e);
    Eigen::MatrixXd sb[3], vb[3];
    for (int r = 0; r <= 2; ++r) {
      sb[r] = Eigen::MatrixXd(rule.points.size(), d);
      vb[r] = Eigen::MatrixXd(rule.points.size(), m);
    }
    for (int q = 0; q < rule.points.size(); ++q) {
      for (int r = 0; r <= 2; ++r) {
        Eigen::VectorXd s = c1space.local_basis(e, rule.points(q), r);
        Eigen::VectorXd v = space.basis(e, rule.points(q), r);
        sb[r].row(q) = s.transpose();
        vb[r].row(q) = v.transpose();
      }
    }
    Eigen::VectorXd w = rule.weights * h;
    Eigen::MatrixXd ss[3], vv[3], vs[3];
    for (int r = 0; r <= 2; ++r) {
      ss[r] = sb[r].transpose() * w.asDiagonal() * sb[r];
      vv[r] = vb[r].transpose() * w.asDiagonal() * vb[r];
      vs[r] = vb[r].transpose() * w.asDiagonal() * sb[r];
    }
    Eigen::MatrixXd ssec_local = sb[0].transpose() * w.asDiagonal() * sb[2];
    Eigen::MatrixXd vsec_local = vb[0].transpose() * w.asDiagonal() * sb[2];
    g.v1.block(base, base, m, m) += vv[1];
    g.v2.block(base, base, m, m) += vv[2];
    for (int a = 0; a < d; ++a) {
      if (gl[a] < 0) continue;
      for (int b = 0; b < d; ++b) {
        if (gl[b] < 0) continue;
        g.s0(gl[a], gl[b]) += ss[0](a, b);
        g.s1(gl[a], gl[b]) += ss[1](a, b);
        g.s2(gl[a], gl[b]) += ss[2](a, b);
        g.ss_second(gl[a], gl[b]) += ssec_local(a, b);
      }
      g.vs0.block(base, gl[a], m, 1) += vs[0].col(a);
      g.vs1.block(base, gl[a], m, 1) += vs[1].col(a);
      g.vs2.block(base, gl[a], m, 1) += vs[2].col(a);
      g.vs_second.block(base, gl[a], m, 1) += vsec_local.col(a);
    }
  }
  g.value_at_nodes = Eigen::MatrixXd::Zero(n + 1, ns);
  g.deriv_at_nodes = Eigen::MatrixXd::Zero(n + 1, ns);
  for (int node = 0; node <= n; ++node) {
    Eigen::VectorXd val_row, der_row;
    node_rows(c1space, node, &val_row, &der_row);
    g.value_at_nodes.row(node) = val_row.transpose();
    g.deriv_at_nodes.row(node) = der_row.transpose();
  }
  return g;
}

}  // namespace dg1d
