// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end problem drivers: smooth manufactured Poisson problems and the
// rough point-source problem with an ultra-weak right-hand side, their exact
// solutions, the direct solve, and error measurement.

#ifndef DG1D_PROBLEMS_HPP
#define DG1D_PROBLEMS_HPP

#include <functional>
#include <vector>

#include "dg1d/c1space.hpp"
#include "dg1d/dgspace.hpp"
#include "dg1d/forms.hpp"
#include "dg1d/mesh.hpp"

namespace dg1d {

enum class ProblemKind { smooth, point_source };

// -u'' = f on (a, b) with homogeneous Dirichlet values. The smooth problem
// carries a source function and an exact solution with derivatives; the
// point-source problem carries f = c0 * (Dirac at xbar) + c1 * (its
// derivative), discretized through the averaging reconstruction of the test
// function. Empty smooth closures select the built-in sine solution
// u = sin(pi (x-a)/(b-a)) on whatever domain the mesh carries.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::smooth;
  std::function<double(double)> source;             // f, smooth problems
  std::function<double(double, int)> smooth_exact;  // u^{(r)}, r in {0,1,2}
  double xbar = 0.6366;
  double c0 = 0.0;
  double c1 = 1.0;

  static ProblemSpec smooth_sine();
  static ProblemSpec point_source(double xbar, double c0, double c1);
};

// Piecewise-analytic exact solution; breakpoints are interior kinks that
// quadrature must split at.
struct ExactSolution {
  std::vector<double> breakpoints;
  BrokenEval eval;  // one-sided evaluation, r in {0,1,2}
};

ExactSolution exact_solution(const ProblemSpec& spec, double a, double b);

// Load vector of the point-source functional: entries
// c0 * E2(phi_i)(xbar) - c1 * (E2(phi_i))'(xbar).
Eigen::VectorXd point_source_load(const DgSpace& space, const C1Space& c1space,
                                  double xbar, double c0, double c1);

// Direct symmetric banded solve of A u = l on the caller-owned space.
// Throws a skeleton_collision error when xbar lies on a mesh vertex and a
// coercivity_failure (naming sigma0) when the form is not positive definite.
DgFunction solve(const ProblemSpec& spec, const DgSpace& space,
                 const PenaltyParams& params);

struct ErrorRecord {
  double h_min = 0.0;
  double h_max = 0.0;
  double err_znorm = 0.0;
  double err_enorm = 0.0;
  double err_eenorm = 0.0;
  double err_l2 = 0.0;
  int dofs = 0;
  double solve_seconds = 0.0;
  bool quadrature_warning = false;
};

ErrorRecord measure_errors(const DgFunction& u_h, const ExactSolution& exact);

}  // namespace dg1d

#endif
