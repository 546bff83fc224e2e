// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "dg1d/c1space.hpp"
#include "dg1d/dgspace.hpp"
#include "dg1d/errors.hpp"
#include "dg1d/linalg.hpp"
#include "dg1d/mesh.hpp"
#include "dg1d/reconstruct.hpp"

using namespace dg1d;

TEST_CASE("averaging and Ritz reproduce a conforming quadratic") {
  Mesh1D mesh = Mesh1D::perturbed(5, -1.0, 2.0, 0.25, 19);
  double a = mesh.domain_left(), b = mesh.domain_right();
  auto g = [a, b](double x) { return (x - a) * (b - x); };
  for (int k : {2, 3}) {
    DgSpace space(mesh, k);
    C1Space c1(mesh, k);
    DgFunction u = project_l2(g, space);  // exact: g lies in V_h and in S

    C1Function avg = averaging_reconstruct(u, c1);
    RitzOperator ritz(space, c1);
    C1Function rz = ritz.reconstruct(u);
    for (double x : {-0.8, -0.1, 0.5, 1.2, 1.9}) {
      CHECK(avg.evaluate(x, 0) == doctest::Approx(g(x)).epsilon(1e-11));
      CHECK(rz.evaluate(x, 0) == doctest::Approx(g(x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("averaging of an element indicator takes one-sided means") {
  Mesh1D mesh = Mesh1D::uniform(3, 0.0, 1.0);
  DgSpace space(mesh, 2);
  C1Space c1(mesh, 2);
  // u = indicator of element 1.
  Eigen::VectorXd c = Eigen::VectorXd::Zero(space.total_dofs());
  c(space.first_dof(1)) = std::sqrt(1.0 / 3.0);  // normalized constant, value 1
  DgFunction u(space, c);
  C1Function s = averaging_reconstruct(u, c1);

  // Shared vertices average 1 and 0; derivatives average to 0 either way.
  CHECK(s.dofs()(c1.vertex_value_dof(1)) == doctest::Approx(0.5));
  CHECK(s.dofs()(c1.vertex_value_dof(2)) == doctest::Approx(0.5));
  CHECK(s.dofs()(c1.vertex_deriv_dof(1)) == doctest::Approx(0.0));
  CHECK(s.dofs()(c1.vertex_deriv_dof(2)) == doctest::Approx(0.0));
  // Interior interpolation points take the owner-element value.
  CHECK(s.dofs()(c1.interior_point_dof(1, 0)) == doctest::Approx(1.0));
  CHECK(s.dofs()(c1.interior_point_dof(0, 0)) == doctest::Approx(0.0));
  // The matrix route agrees with the operator route.
  Eigen::VectorXd via_matrix = averaging_matrix(space, c1) * c;
  CHECK((via_matrix - s.dofs()).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("the mixed form block equals the negative second moment block") {
  // Integration by parts with the C1 continuity of s turns
  // A_h(phi, s) = int phi' s' - sum [phi] s' into -int phi s''.
  Mesh1D mesh = Mesh1D::perturbed(4, 0.0, 1.0, 0.3, 61);
  for (int k : {2, 3}) {
    DgSpace space(mesh, k);
    C1Space c1(mesh, k);
    RitzOperator ritz(space, c1);
    C1Grams g = c1_grams(space, c1);
    Eigen::MatrixXd mixed = Eigen::MatrixXd(ritz.mixed());
    double scale = mixed.cwiseAbs().maxCoeff();
    CHECK((mixed + g.vs_second).cwiseAbs().maxCoeff() <= 1e-12 * scale);
  }
}

TEST_CASE("Ritz reconstruction is orthogonal to second derivatives of S") {
  Mesh1D mesh = Mesh1D::perturbed(6, 0.0, 1.0, 0.25, 29);
  DgSpace space(mesh, 2);
  C1Space c1(mesh, 2);
  RitzOperator ritz(space, c1);
  C1Grams g = c1_grams(space, c1);
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd u = rng.normal_vector(space.total_dofs());
    Eigen::VectorXd r = ritz.apply(u);
    // int (u - Ru) s'' = 0 for every s: the Ritz equations say exactly this
    // after integrating the left side by parts.
    Eigen::VectorXd rho = g.vs_second.transpose() * u - g.ss_second.transpose() * r;
    double denom = u.norm();
    CHECK(rho.cwiseAbs().maxCoeff() <= 1e-10 * denom * g.ss_second.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("point rows evaluate the cardinal basis") {
  Mesh1D mesh = Mesh1D::perturbed(4, -0.5, 1.5, 0.2, 44);
  C1Space c1(mesh, 3);
  Rng rng(23);
  Eigen::VectorXd d = rng.normal_vector(c1.total_dofs());
  C1Function f(c1, d);
  for (double x : {-0.3, 0.2, 0.9, 1.4}) {
    for (int r : {0, 1, 2}) {
      double via_row = c1_point_row(c1, x, r).dot(d);
      CHECK(via_row == doctest::Approx(f.evaluate(x, r)).epsilon(1e-11));
    }
  }
}

TEST_CASE("gram matrices carry the expected symmetries and identities") {
  Mesh1D mesh = Mesh1D::perturbed(4, 0.0, 1.0, 0.25, 91);
  DgSpace space(mesh, 2);
  C1Space c1(mesh, 2);
  C1Grams g = c1_grams(space, c1);
  for (const Eigen::MatrixXd* m : {&g.v1, &g.v2, &g.s0, &g.s1, &g.s2}) {
    CHECK((*m - m->transpose()).cwiseAbs().maxCoeff() <= 1e-12 * m->cwiseAbs().maxCoeff());
  }
  // int s t'' = -int s' t' for s, t in S with pinned boundary values.
  CHECK((g.ss_second + g.s1).cwiseAbs().maxCoeff() <= 1e-12 * g.s1.cwiseAbs().maxCoeff());
  // Node evaluation rows match direct evaluation of a random member.
  Rng rng(5);
  Eigen::VectorXd d = rng.normal_vector(c1.total_dofs());
  C1Function f(c1, d);
  for (int v = 0; v <= 4; ++v) {
    CHECK(g.value_at_nodes.row(v).dot(d) ==
          doctest::Approx(f.evaluate(mesh.vertex(v), 0)).epsilon(1e-11));
    CHECK(g.deriv_at_nodes.row(v).dot(d) ==
          doctest::Approx(f.evaluate(mesh.vertex(v), 1)).epsilon(1e-11));
  }
}

TEST_CASE("mismatched spaces are rejected") {
  Mesh1D mesh = Mesh1D::uniform(3, 0.0, 1.0);
  Mesh1D other = Mesh1D::uniform(4, 0.0, 1.0);
  DgSpace space(mesh, 2);
  C1Space c1(other, 2);
  CHECK_THROWS_AS(averaging_matrix(space, c1), Error);
  DgSpace space3(mesh, 3);
  C1Space c1k2(mesh, 2);
  CHECK_THROWS_AS(RitzOperator(space3, c1k2), Error);
}
