// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/problems.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dg1d/errors.hpp"
#include "dg1d/reconstruct.hpp"

namespace dg1d {

namespace {

std::function<double(double)> sine_source(double a, double b) {
  double w = std::numbers::pi / (b - a);
  return [a, w](double x) { return w * w * std::sin(w * (x - a)); };
}

std::function<double(double, int)> sine_exact(double a, double b) {
  double w = std::numbers::pi / (b - a);
  return [a, w](double x, int r) {
    double s = w * (x - a);
    if (r == 0) return std::sin(s);
    if (r == 1) return w * std::cos(s);
    return -w * w * std::sin(s);
  };
}

void require_inside(double xbar, double a, double b) {
  require(xbar > a && xbar < b, Status::invalid_argument,
          "xbar must lie strictly inside the domain");
}

}  // namespace

ProblemSpec ProblemSpec::smooth_sine() {
  ProblemSpec spec;
  spec.kind = ProblemKind::smooth;
  return spec;
}

ProblemSpec ProblemSpec::point_source(double xbar, double c0, double c1) {
  ProblemSpec spec;
  spec.kind = ProblemKind::point_source;
  spec.xbar = xbar;
  spec.c0 = c0;
  spec.c1 = c1;
  return spec;
}

ExactSolution exact_solution(const ProblemSpec& spec, double a, double b) {
  require(b > a, Status::invalid_argument, "domain must satisfy a < b");
  ExactSolution out;
  if (spec.kind == ProblemKind::smooth) {
    std::function<double(double, int)> u =
        spec.smooth_exact ? spec.smooth_exact : sine_exact(a, b);
    out.eval = [u](double x, Side, int r) { return u(x, r); };
    return out;
  }
  double xbar = spec.xbar, c0 = spec.c0, c1 = spec.c1, len = b - a;
  require_inside(xbar, a, b);
  out.breakpoints = {xbar};
  // -u'' = c0 delta + c1 delta' at xbar: piecewise linear with a derivative
  // kink of -c0 and a value jump u(xbar-) - u(xbar+) = c1.
  out.eval = [a, b, xbar, c0, c1, len](double x, Side side, int r) -> double {
    if (r >= 2) return 0.0;
    bool left_branch = (x < xbar) || (x == xbar && side != Side::right);
    double g, gp, d;
    if (left_branch) {
      g = (x - a) * (b - xbar) / len;
      gp = (b - xbar) / len;
      d = (x - a) / len;
    } else {
      g = (xbar - a) * (b - x) / len;
      gp = -(xbar - a) / len;
      d = -(b - x) / len;
    }
    if (r == 0) return c0 * g + c1 * d;
    return c0 * gp + c1 / len;
  };
  return out;
}

Eigen::VectorXd point_source_load(const DgSpace& space, const C1Space& c1space,
                                  double xbar, double c0, double c1) {
  const Mesh1D& mesh = space.mesh();
  require_inside(xbar, mesh.domain_left(), mesh.domain_right());
  Eigen::SparseMatrix<double> averaging = averaging_matrix(space, c1space);
  Eigen::VectorXd functional =
      c0 * c1_point_row(c1space, xbar, 0) - c1 * c1_point_row(c1space, xbar, 1);
  return averaging.transpose() * functional;
}

DgFunction solve(const ProblemSpec& spec, const DgSpace& space, const PenaltyParams& params) {
  const Mesh1D& mesh = space.mesh();
  double a = mesh.domain_left(), b = mesh.domain_right();
  Eigen::VectorXd load;
  if (spec.kind == ProblemKind::smooth) {
    std::function<double(double)> f = spec.source ? spec.source : sine_source(a, b);
    load = load_vector_smooth(f, space);
  } else {
    require_inside(spec.xbar, a, b);
    LocateResult loc = mesh.locate(spec.xbar);
    if (loc.nearest_vertex_distance <= 1e-12 * (b - a)) {
      std::ostringstream msg;
      msg << "point source at x=" << spec.xbar
          << " lies on a mesh vertex; move the source or perturb the mesh";
      fail(Status::skeleton_collision, msg.str());
    }
    C1Space c1space(mesh, space.degree());
    load = point_source_load(space, c1space, spec.xbar, spec.c0, spec.c1);
  }
  SymmetricBandMatrix A = assemble_ip_banded(space, params);
  try {
    A.factorize();
  } catch (const Error& err) {
    if (err.code() == Status::coercivity_failure) {
      std::ostringstream msg;
      msg << "stiffness factorization hit a nonpositive pivot at sigma0=" << params.sigma0
          << "; the form is not coercive there, raise sigma0 (default "
          << default_sigma0(space.degree()) << " for degree " << space.degree() << ")";
      fail(Status::coercivity_failure, msg.str());
    }
    throw;
  }
  return DgFunction(space, A.solve_refined(load));
}

ErrorRecord measure_errors(const DgFunction& u_h, const ExactSolution& exact) {
  const DgSpace& space = u_h.space();
  const Mesh1D& mesh = space.mesh();
  BrokenEval diff = [&u_h, &exact](double x, Side side, int r) {
    return u_h.evaluate(x, side, r) - exact.eval(x, side, r);
  };
  BrokenNorms norms = norms_of(diff, mesh, space.degree() + 8, exact.breakpoints);
  ErrorRecord rec;
  rec.h_min = mesh.min_element_size();
  rec.h_max = mesh.max_element_size();
  rec.err_znorm = norms.norms.znorm;
  rec.err_enorm = norms.norms.enorm;
  rec.err_eenorm = norms.norms.eenorm;
  rec.err_l2 = norms.l2;
  rec.dofs = space.total_dofs();
  rec.quadrature_warning = norms.quadrature_warning;
  return rec;
}

}  // namespace dg1d
