// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "dg1d/dg1d.h"

TEST_CASE("version and defaults") {
  CHECK(std::string(dg1d_version()) == "1.0.0");
  CHECK(dg1d_default_sigma0(2) == doctest::Approx(40.0));
  CHECK(dg1d_default_sigma0(3) == doctest::Approx(90.0));
}

TEST_CASE("mesh lifecycle and accessors") {
  dg1d_mesh* mesh = nullptr;
  REQUIRE(dg1d_mesh_create_uniform(4, 0.0, 1.0, &mesh) == DG1D_OK);
  REQUIRE(mesh != nullptr);
  CHECK(std::string(dg1d_last_error()).empty());
  CHECK(dg1d_mesh_num_elements(mesh) == 4);
  CHECK(dg1d_mesh_vertex(mesh, 0) == doctest::Approx(0.0));
  CHECK(dg1d_mesh_vertex(mesh, 2) == doctest::Approx(0.5));
  CHECK(dg1d_mesh_vertex(mesh, 4) == doctest::Approx(1.0));
  CHECK(std::isnan(dg1d_mesh_vertex(mesh, 5)));
  dg1d_mesh_destroy(mesh);

  CHECK(dg1d_mesh_num_elements(nullptr) == -1);
  CHECK(std::isnan(dg1d_mesh_vertex(nullptr, 0)));
  dg1d_mesh_destroy(nullptr);  // must be a harmless no-op
}

TEST_CASE("invalid mesh arguments set the thread error message") {
  dg1d_mesh* mesh = nullptr;
  CHECK(dg1d_mesh_create_uniform(0, 0.0, 1.0, &mesh) == DG1D_ERR_INVALID_ARGUMENT);
  CHECK(mesh == nullptr);
  CHECK(!std::string(dg1d_last_error()).empty());

  CHECK(dg1d_mesh_create_perturbed(4, 0.0, 1.0, 0.7, 1, &mesh) ==
        DG1D_ERR_INVALID_ARGUMENT);
  CHECK(mesh == nullptr);

  dg1d_mesh* ok = nullptr;
  REQUIRE(dg1d_mesh_create_perturbed(4, 0.0, 1.0, 0.3, 1, &ok) == DG1D_OK);
  CHECK(std::string(dg1d_last_error()).empty());
  dg1d_mesh_destroy(ok);
}

TEST_CASE("config init fills the documented defaults") {
  dg1d_config c;
  dg1d_config_init(&c);
  CHECK(c.problem == DG1D_PROBLEM_SMOOTH);
  CHECK(c.degree == 2);
  CHECK(c.sigma0 == 0.0);
  CHECK(c.sigma1 == 1.0);
  CHECK(c.mesh_counts == nullptr);
  CHECK(c.domain_a == 0.0);
  CHECK(c.domain_b == 1.0);
  CHECK(c.xbar == doctest::Approx(0.6366));
  CHECK(c.c0 == 0.0);
  CHECK(c.c1 == 1.0);
  CHECK(c.seed == 7);
  CHECK(c.timing == 0);
  CHECK(c.dump_dir == nullptr);
}

TEST_CASE("a convergence study runs through the C surface") {
  dg1d_config c;
  dg1d_config_init(&c);
  const int meshes[] = {4, 8, 16};
  c.mesh_counts = meshes;
  c.num_mesh_counts = 3;

  size_t needed = 0;
  REQUIRE(dg1d_run_convergence(&c, nullptr, 0, &needed) == DG1D_OK);
  REQUIRE(needed == 3);

  std::vector<dg1d_run_row> rows(needed);
  size_t produced = 0;
  REQUIRE(dg1d_run_convergence(&c, rows.data(), rows.size(), &produced) == DG1D_OK);
  REQUIRE(produced == 3);
  CHECK(rows[0].n_elements == 4);
  CHECK(std::isnan(rows[0].eoc_l2));
  CHECK(rows[2].eoc_l2 == doctest::Approx(3.0).epsilon(0.15));
  CHECK(rows[2].err_l2 < rows[1].err_l2);

  dg1d_run_row one;
  size_t n1 = 0;
  CHECK(dg1d_run_convergence(&c, &one, 1, &n1) == DG1D_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dg1d_last_error()).find("buffer") != std::string::npos);
}

TEST_CASE("error statuses map the failure kinds") {
  dg1d_config c;
  dg1d_config_init(&c);
  c.problem = DG1D_PROBLEM_POINT_SOURCE;
  c.xbar = 0.5;  // lands exactly on a vertex of the 10-element mesh
  const int meshes[] = {10};
  c.mesh_counts = meshes;
  c.num_mesh_counts = 1;
  std::vector<dg1d_run_row> rows(1);
  size_t n = 0;
  CHECK(dg1d_run_convergence(&c, rows.data(), 1, &n) == DG1D_ERR_SKELETON_COLLISION);
  CHECK(!std::string(dg1d_last_error()).empty());

  dg1d_config bad;
  dg1d_config_init(&bad);
  bad.sigma0 = 0.01;
  const int small[] = {8};
  bad.mesh_counts = small;
  bad.num_mesh_counts = 1;
  CHECK(dg1d_run_convergence(&bad, rows.data(), 1, &n) == DG1D_ERR_COERCIVITY);

  dg1d_config invalid;
  dg1d_config_init(&invalid);
  invalid.problem = 7;
  CHECK(dg1d_run_convergence(&invalid, rows.data(), 1, &n) == DG1D_ERR_INVALID_ARGUMENT);
  CHECK(dg1d_run_convergence(nullptr, rows.data(), 1, &n) == DG1D_ERR_INVALID_ARGUMENT);
}

TEST_CASE("inf-sup rows arrive through the C surface") {
  dg1d_config c;
  dg1d_config_init(&c);
  const int meshes[] = {4, 8};
  c.mesh_counts = meshes;
  c.num_mesh_counts = 2;
  dg1d_infsup_row rows[2];
  size_t n = 0;
  REQUIRE(dg1d_run_infsup(&c, rows, 2, &n) == DG1D_OK);
  REQUIRE(n == 2);
  CHECK(rows[0].gamma_v > 0.0);
  CHECK(rows[1].gamma_w > 0.0);
  CHECK(rows[1].lambda_coercivity > 0.0);

  c.degree = 1;
  CHECK(dg1d_run_infsup(&c, rows, 2, &n) == DG1D_ERR_INVALID_ARGUMENT);
}

TEST_CASE("the check suite reports named rows at degree one") {
  // Degree one keeps this quick; the full-depth suite runs elsewhere.
  dg1d_config c;
  dg1d_config_init(&c);
  c.degree = 1;
  size_t needed = 0;
  REQUIRE(dg1d_run_check(&c, nullptr, 0, &needed) == DG1D_OK);
  REQUIRE(needed >= 10);
  std::vector<dg1d_check_row> rows(needed);
  size_t n = 0;
  REQUIRE(dg1d_run_check(&c, rows.data(), rows.size(), &n) == DG1D_OK);
  REQUIRE(n == needed);
  for (size_t i = 0; i < n; ++i) {
    CHECK(std::strlen(rows[i].name) > 0);
    CHECK(std::strlen(rows[i].name) < sizeof(rows[i].name));
    CHECK(rows[i].passed == 1);
  }
}
