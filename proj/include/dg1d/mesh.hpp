// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DG1D_MESH_HPP
#define DG1D_MESH_HPP

#include <cstdint>
#include <vector>

namespace dg1d {

struct LocateResult {
  int element;                     // 0-based index of the containing element
  double nearest_vertex_distance;  // distance from x to the closest mesh vertex
};

// Immutable 1D interval mesh. Vertices are strictly increasing; element e is
// the interval (vertex(e), vertex(e+1)). Vertices double as the skeleton:
// interior vertices are shared interfaces, the two boundary vertices carry
// the outward normals -1 (left end) and +1 (right end).
class Mesh1D {
 public:
  static Mesh1D uniform(int n, double a, double b);

  // Uniform mesh whose interior vertices are each displaced by at most
  // jitter * (b - a) / n. Deterministic for a fixed seed.
  static Mesh1D perturbed(int n, double a, double b, double jitter, std::uint64_t seed);

  // Every element bisected at its midpoint.
  Mesh1D refined() const;

  int num_elements() const { return static_cast<int>(verts_.size()) - 1; }
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  double domain_left() const { return verts_.front(); }
  double domain_right() const { return verts_.back(); }
  double vertex(int i) const { return verts_[i]; }
  const std::vector<double>& vertices() const { return verts_; }

  double element_left(int e) const { return verts_[e]; }
  double element_right(int e) const { return verts_[e + 1]; }
  double element_size(int e) const { return verts_[e + 1] - verts_[e]; }

  bool is_interior_vertex(int i) const { return i > 0 && i < num_elements(); }

  // Size h_e attached to vertex i: the larger adjacent element size at an
  // interior vertex, the single adjacent size at a boundary vertex.
  double node_size(int i) const;

  // Piecewise constant meshsize function: the largest element size among the
  // element closures containing x.
  double meshsize_at(double x) const;

  double min_element_size() const;
  double max_element_size() const;
  double quasi_uniformity() const;  // max h / min h, >= 1, == 1 for uniform meshes
  double shape_regularity() const { return 0.5; }  // inradius/diameter of an interval

  // Containment is half-open, [vertex(e), vertex(e+1)), except that the right
  // domain endpoint belongs to the last element. x outside [a, b] is an error.
  LocateResult locate(double x) const;

 private:
  explicit Mesh1D(std::vector<double> vertices);
  std::vector<double> verts_;
};

}  // namespace dg1d

#endif
