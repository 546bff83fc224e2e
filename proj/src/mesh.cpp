// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "dg1d/errors.hpp"
#include "dg1d/linalg.hpp"

namespace dg1d {

Mesh1D::Mesh1D(std::vector<double> vertices) : verts_(std::move(vertices)) {
  require(verts_.size() >= 2, Status::invalid_argument, "mesh needs at least one element");
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    require(verts_[i] > verts_[i - 1], Status::invalid_argument,
            "mesh vertices must be strictly increasing");
  }
}

Mesh1D Mesh1D::uniform(int n, double a, double b) {
  require(n >= 1, Status::invalid_argument, "element count n must be at least 1");
  require(b > a, Status::invalid_argument, "domain interval is degenerate");
  std::vector<double> v(n + 1);
  for (int i = 0; i <= n; ++i) {
    v[i] = a + (b - a) * (static_cast<double>(i) / n);
  }
  v[0] = a;
  v[n] = b;
  return Mesh1D(std::move(v));
}

Mesh1D Mesh1D::perturbed(int n, double a, double b, double jitter, std::uint64_t seed) {
  require(jitter >= 0.0 && jitter < 0.5, Status::invalid_argument,
          "jitter must lie in [0, 0.5) to keep vertices increasing");
  Mesh1D base = uniform(n, a, b);
  std::vector<double> v = base.verts_;
  double h = (b - a) / n;
  Rng rng(seed);
  for (int i = 1; i < n; ++i) {
    double u = rng.uniform01();
    v[i] += (2.0 * u - 1.0) * jitter * h;
  }
  return Mesh1D(std::move(v));
}

Mesh1D Mesh1D::refined() const {
  std::vector<double> v;
  v.reserve(verts_.size() * 2 - 1);
  for (std::size_t i = 0; i + 1 < verts_.size(); ++i) {
    v.push_back(verts_[i]);
    v.push_back(0.5 * (verts_[i] + verts_[i + 1]));
  }
  v.push_back(verts_.back());
  return Mesh1D(std::move(v));
}

double Mesh1D::node_size(int i) const {
  int n = num_elements();
  require(i >= 0 && i <= n, Status::invalid_argument, "vertex index out of range");
  if (i == 0) return element_size(0);
  if (i == n) return element_size(n - 1);
  return std::max(element_size(i - 1), element_size(i));
}

double Mesh1D::meshsize_at(double x) const {
  LocateResult loc = locate(x);
  double h = element_size(loc.element);
  // A vertex belongs to the closures of both adjacent elements.
  if (loc.element > 0 && x == verts_[loc.element]) {
    h = std::max(h, element_size(loc.element - 1));
  }
  if (loc.element + 1 < num_elements() && x == verts_[loc.element + 1]) {
    h = std::max(h, element_size(loc.element + 1));
  }
  return h;
}

double Mesh1D::min_element_size() const {
  double m = element_size(0);
  for (int e = 1; e < num_elements(); ++e) m = std::min(m, element_size(e));
  return m;
}

double Mesh1D::max_element_size() const {
  double m = element_size(0);
  for (int e = 1; e < num_elements(); ++e) m = std::max(m, element_size(e));
  return m;
}

double Mesh1D::quasi_uniformity() const { return max_element_size() / min_element_size(); }

LocateResult Mesh1D::locate(double x) const {
  require(x >= domain_left() && x <= domain_right(), Status::invalid_argument,
          "coordinate " + format_double(x) + " lies outside the mesh domain");
  int n = num_elements();
  int e;
  if (x == domain_right()) {
    e = n - 1;
  } else {
    auto it = std::upper_bound(verts_.begin(), verts_.end(), x);
    e = static_cast<int>(it - verts_.begin()) - 1;
    e = std::clamp(e, 0, n - 1);
  }
  double dist = std::min(x - verts_[e], verts_[e + 1] - x);
  return LocateResult{e, dist};
}

}  // namespace dg1d
