// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "dg1d/c1space.hpp"
#include "dg1d/dgspace.hpp"
#include "dg1d/errors.hpp"
#include "dg1d/forms.hpp"
#include "dg1d/mesh.hpp"
#include "dg1d/problems.hpp"

using namespace dg1d;

TEST_CASE("the built-in sine solution satisfies its problem data") {
  ProblemSpec spec = ProblemSpec::smooth_sine();
  ExactSolution exact = exact_solution(spec, -1.0, 3.0);
  CHECK(exact.breakpoints.empty());
  CHECK(exact.eval(-1.0, Side::interior, 0) == doctest::Approx(0.0));
  CHECK(exact.eval(3.0, Side::interior, 0) == doctest::Approx(0.0));
  CHECK(exact.eval(1.0, Side::interior, 0) == doctest::Approx(1.0));  // midpoint peak
  // -u'' = f: the second derivative is -(pi/4)^2 times the value.
  double w = M_PI / 4.0;
  for (double x : {-0.3, 0.7, 2.1}) {
    CHECK(exact.eval(x, Side::interior, 2) ==
          doctest::Approx(-w * w * exact.eval(x, Side::interior, 0)).epsilon(1e-12));
  }
}

TEST_CASE("the point-source solution has the Green function shape") {
  // Pure Dirac of weight 1 at 0.5 on (0, 1): u = x/2 left, (1-x)/2 right.
  ExactSolution dirac = exact_solution(ProblemSpec::point_source(0.5, 1.0, 0.0), 0.0, 1.0);
  REQUIRE(dirac.breakpoints.size() == 1);
  CHECK(dirac.breakpoints[0] == doctest::Approx(0.5));
  CHECK(dirac.eval(0.3, Side::interior, 0) == doctest::Approx(0.15));
  CHECK(dirac.eval(0.8, Side::interior, 0) == doctest::Approx(0.10));
  CHECK(dirac.eval(0.0, Side::interior, 0) == doctest::Approx(0.0));
  CHECK(dirac.eval(1.0, Side::interior, 0) == doctest::Approx(0.0));
  // The value is continuous; the derivative drops by the Dirac weight.
  CHECK(dirac.eval(0.5, Side::left, 0) == doctest::Approx(dirac.eval(0.5, Side::right, 0)));
  double kink = dirac.eval(0.5, Side::left, 1) - dirac.eval(0.5, Side::right, 1);
  CHECK(kink == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(dirac.eval(0.25, Side::interior, 2) == 0.0);

  // Pure dipole of weight 1 at 0.5: value jumps by 1, derivative continuous.
  ExactSolution dipole = exact_solution(ProblemSpec::point_source(0.5, 0.0, 1.0), 0.0, 1.0);
  double jump = dipole.eval(0.5, Side::left, 0) - dipole.eval(0.5, Side::right, 0);
  CHECK(jump == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(dipole.eval(0.5, Side::left, 1) ==
        doctest::Approx(dipole.eval(0.5, Side::right, 1)).epsilon(1e-13));
  CHECK(dipole.eval(0.0, Side::interior, 0) == doctest::Approx(0.0));
  CHECK(dipole.eval(1.0, Side::interior, 0) == doctest::Approx(0.0));
}

TEST_CASE("hand values: the ultra-weak load against a reproduced quadratic") {
  // v is the projection of x(1 - x), which the averaging reconstruction
  // reproduces exactly for k >= 2, so the load pairing must evaluate
  // c0 * v(xbar) - c1 * v'(xbar) of the quadratic itself.
  Mesh1D mesh = Mesh1D::uniform(5, 0.0, 1.0);
  DgSpace space(mesh, 2);
  C1Space c1(mesh, 2);
  DgFunction v = project_l2([](double x) { return x * (1.0 - x); }, space);

  Eigen::VectorXd dirac_load = point_source_load(space, c1, 0.6366, 1.0, 0.0);
  CHECK(dirac_load.dot(v.coefficients()) ==
        doctest::Approx(0.6366 * (1.0 - 0.6366)).epsilon(1e-10));

  Eigen::VectorXd dipole_load = point_source_load(space, c1, 0.6366, 0.0, 1.0);
  CHECK(dipole_load.dot(v.coefficients()) ==
        doctest::Approx(2.0 * 0.6366 - 1.0).epsilon(1e-10));
}

TEST_CASE("smooth solves converge at the expected scale") {
  ProblemSpec spec = ProblemSpec::smooth_sine();
  PenaltyParams params{40.0, 1.0};
  double prev = 0.0;
  for (int n : {8, 16, 32}) {
    Mesh1D mesh = Mesh1D::uniform(n, 0.0, 1.0);
    DgSpace space(mesh, 2);
    DgFunction u_h = solve(spec, space, params);
    ErrorRecord rec = measure_errors(u_h, exact_solution(spec, 0.0, 1.0));
    CHECK(rec.dofs == 3 * n);
    CHECK(rec.h_max == doctest::Approx(1.0 / n));
    CHECK(rec.err_l2 > 0.0);
    CHECK_FALSE(rec.quadrature_warning);
    if (prev > 0.0) CHECK(rec.err_l2 < 0.2 * prev);  // order three decay
    prev = rec.err_l2;
  }
  CHECK(prev < 2e-5);
}

TEST_CASE("the solve is close to the best approximation") {
  ProblemSpec spec = ProblemSpec::smooth_sine();
  Mesh1D mesh = Mesh1D::uniform(16, 0.0, 1.0);
  DgSpace space(mesh, 2);
  DgFunction u_h = solve(spec, space, {40.0, 1.0});
  DgFunction best = project_l2([](double x) { return std::sin(M_PI * x); }, space, 4);
  double err = measure_errors(u_h, exact_solution(spec, 0.0, 1.0)).err_l2;
  double best_err = measure_errors(best, exact_solution(spec, 0.0, 1.0)).err_l2;
  CHECK(err <= 10.0 * best_err);
}

TEST_CASE("point-source solves converge in the mean-square sense") {
  ProblemSpec spec = ProblemSpec::point_source(0.6366, 0.0, 1.0);
  PenaltyParams params{40.0, 1.0};
  ExactSolution exact = exact_solution(spec, 0.0, 1.0);
  double e16 = 0.0, e64 = 0.0;
  for (int n : {16, 64}) {
    Mesh1D mesh = Mesh1D::uniform(n, 0.0, 1.0);
    DgSpace space(mesh, 2);
    DgFunction u_h = solve(spec, space, params);
    double err = measure_errors(u_h, exact).err_l2;
    (n == 16 ? e16 : e64) = err;
  }
  CHECK(e16 > 0.0);
  CHECK(e64 < 0.8 * e16);  // roughly half-order decay
}

TEST_CASE("a source on a mesh vertex is rejected") {
  ProblemSpec spec = ProblemSpec::point_source(0.5, 0.0, 1.0);
  Mesh1D mesh = Mesh1D::uniform(10, 0.0, 1.0);
  DgSpace space(mesh, 2);
  try {
    solve(spec, space, {40.0, 1.0});
    FAIL("expected a skeleton collision");
  } catch (const Error& e) {
    CHECK(e.code() == Status::skeleton_collision);
    CHECK(std::string(e.what()).find("vertex") != std::string::npos);
  }
}

TEST_CASE("an undersized penalty is reported as a coercivity failure") {
  ProblemSpec spec = ProblemSpec::smooth_sine();
  Mesh1D mesh = Mesh1D::uniform(8, 0.0, 1.0);
  DgSpace space(mesh, 2);
  try {
    solve(spec, space, {0.01, 1.0});
    FAIL("expected a coercivity failure");
  } catch (const Error& e) {
    CHECK(e.code() == Status::coercivity_failure);
    CHECK(std::string(e.what()).find("sigma0") != std::string::npos);
  }
}

TEST_CASE("problems carry over to a general domain") {
  ProblemSpec spec = ProblemSpec::smooth_sine();
  Mesh1D mesh = Mesh1D::perturbed(24, -1.0, 3.0, 0.2, 12);
  DgSpace space(mesh, 2);
  DgFunction u_h = solve(spec, space, {40.0, 1.0});
  ErrorRecord rec = measure_errors(u_h, exact_solution(spec, -1.0, 3.0));
  CHECK(rec.err_l2 < 1e-3);
  CHECK(rec.err_znorm < 1e-2);
  CHECK(rec.h_min > 0.0);
  CHECK(rec.h_max < 4.0);

  ProblemSpec rough = ProblemSpec::point_source(0.7, 0.5, 1.5);
  DgFunction u_r = solve(rough, space, {40.0, 1.0});
  ExactSolution exact = exact_solution(rough, -1.0, 3.0);
  // The discrete solution tracks the exact one away from the source.
  CHECK(u_r.evaluate(-0.5, Side::interior, 0) ==
        doctest::Approx(exact.eval(-0.5, Side::interior, 0)).epsilon(0.05));
}
