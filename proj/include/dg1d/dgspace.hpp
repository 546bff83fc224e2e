// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DG1D_DGSPACE_HPP
#define DG1D_DGSPACE_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "dg1d/mesh.hpp"
#include "dg1d/quadrature.hpp"

namespace dg1d {

// Resolves which one-sided limit to take when a coordinate sits on a vertex.
enum class Side { left, right, interior };

// Broken polynomial space P_k on a mesh. The element-local basis is the
// scaled Legendre family, L2-orthonormal on each element, so every element
// mass matrix is the identity.
class DgSpace {
 public:
  DgSpace(const Mesh1D& mesh, int degree);  // degree >= 0

  const Mesh1D& mesh() const { return *mesh_; }
  int degree() const { return degree_; }
  int dofs_per_element() const { return degree_ + 1; }
  int total_dofs() const { return mesh_->num_elements() * (degree_ + 1); }
  int first_dof(int element) const { return element * (degree_ + 1); }

  // Values of the r-th derivative (r in {0, 1, 2}) of all element-local basis
  // functions at reference coordinate t in [0, 1]. out must hold
  // dofs_per_element() entries.
  void basis(int element, double t, int r, double* out) const;
  Eigen::VectorXd basis(int element, double t, int r) const;

 private:
  const Mesh1D* mesh_;
  int degree_;
};

// Coefficient vector over a DgSpace.
class DgFunction {
 public:
  DgFunction(const DgSpace& space, Eigen::VectorXd coefficients);

  const DgSpace& space() const { return *space_; }
  const Eigen::VectorXd& coefficients() const { return coeffs_; }
  Eigen::VectorXd& coefficients() { return coeffs_; }

  // d^r/dx^r of the element-local polynomial; side picks the element when x
  // is a vertex. r beyond the polynomial degree evaluates to 0.
  double evaluate(double x, Side side, int r) const;
  double evaluate_on(int element, double t, int r) const;

 private:
  const DgSpace* space_;
  Eigen::VectorXd coeffs_;
};

// One-sided values and jump/average data of a function at a mesh vertex.
// Interior: [v] = v- - v+, {v} = (v- + v+)/2, same pattern for gradients.
// Boundary: {v} = v, {grad v} = v', [v] = v*n, [grad v] = v'*n with n = -1 at
// the left end and +1 at the right end. Missing one-sided slots are 0.
struct TraceData {
  double value_left = 0.0, value_right = 0.0;
  double grad_left = 0.0, grad_right = 0.0;
  double jump = 0.0;
  double average = 0.0;
  double grad_jump = 0.0;
  double grad_average = 0.0;
};

TraceData trace_data(const DgFunction& f, int node);

// Jump/average functionals of the local basis at a mesh vertex, expressed as
// rows over the dofs of the (at most two) adjacent elements.
struct NodeBasisTraces {
  bool interior = false;
  std::vector<int> dofs;
  Eigen::VectorXd jump;          // [v]
  Eigen::VectorXd average;       // {v}
  Eigen::VectorXd grad_jump;     // [v']
  Eigen::VectorXd grad_average;  // {v'}
};

NodeBasisTraces node_basis_traces(const DgSpace& space, int node);

// Element-wise L2 projection. Optional breakpoints (global coordinates
// strictly inside elements) split the quadrature cells of a non-smooth g;
// quadrature_boost adds points beyond the default degree-exact rule.
DgFunction project_l2(const std::function<double(double)>& g, const DgSpace& space,
                      int quadrature_boost = 0, const std::vector<double>& breakpoints = {});

}  // namespace dg1d

#endif
