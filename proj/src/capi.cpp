// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/dg1d.h"

#include <algorithm>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "dg1d/driver.hpp"
#include "dg1d/errors.hpp"
#include "dg1d/mesh.hpp"
#include "dg1d/version.hpp"

struct dg1d_mesh {
  dg1d::Mesh1D impl;
};

namespace {

thread_local std::string t_last_error;

dg1d_status to_status(dg1d::Status s) {
  switch (s) {
    case dg1d::Status::ok:
      return DG1D_OK;
    case dg1d::Status::invalid_argument:
      return DG1D_ERR_INVALID_ARGUMENT;
    case dg1d::Status::skeleton_collision:
      return DG1D_ERR_SKELETON_COLLISION;
    case dg1d::Status::coercivity_failure:
      return DG1D_ERR_COERCIVITY;
    case dg1d::Status::numerical_failure:
      return DG1D_ERR_NUMERICAL;
    default:
      return DG1D_ERR_INTERNAL;
  }
}

template <typename Fn>
dg1d_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return DG1D_OK;
  } catch (const dg1d::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return DG1D_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unidentified failure";
    return DG1D_ERR_INTERNAL;
  }
}

dg1d::RunConfig to_config(const dg1d_config* c) {
  dg1d::require(c != nullptr, dg1d::Status::invalid_argument, "config must not be null");
  dg1d::require(c->problem == DG1D_PROBLEM_SMOOTH || c->problem == DG1D_PROBLEM_POINT_SOURCE,
                dg1d::Status::invalid_argument,
                "problem must be 0 (smooth) or 1 (point source)");
  dg1d::RunConfig rc;
  rc.problem = c->problem == DG1D_PROBLEM_POINT_SOURCE ? dg1d::ProblemKind::point_source
                                                       : dg1d::ProblemKind::smooth;
  rc.degree = c->degree;
  rc.sigma0 = c->sigma0;
  rc.sigma1 = c->sigma1;
  if (c->mesh_counts != nullptr) {
    dg1d::require(c->num_mesh_counts > 0, dg1d::Status::invalid_argument,
                  "mesh list must not be empty");
    rc.mesh_counts.assign(c->mesh_counts, c->mesh_counts + c->num_mesh_counts);
  }
  rc.domain_a = c->domain_a;
  rc.domain_b = c->domain_b;
  rc.xbar = c->xbar;
  rc.c0 = c->c0;
  rc.c1 = c->c1;
  rc.seed = c->seed;
  rc.timing = c->timing != 0;
  if (c->dump_dir != nullptr) rc.dump_dir = c->dump_dir;
  return rc;
}

// Copies study rows into the caller buffer under the common buffer contract.
template <typename Row, typename Out, typename Convert>
void deliver(const std::vector<Row>& result, Out* rows, size_t max_rows, size_t* num_rows,
             Convert&& convert) {
  if (num_rows != nullptr) *num_rows = result.size();
  if (rows == nullptr) return;  // size query
  dg1d::require(max_rows >= result.size(), dg1d::Status::invalid_argument,
                "row buffer is smaller than the result");
  for (size_t i = 0; i < result.size(); ++i) convert(result[i], rows[i]);
}

}  // namespace

extern "C" {

const char* dg1d_version(void) { return dg1d::kVersion; }

const char* dg1d_last_error(void) { return t_last_error.c_str(); }

double dg1d_default_sigma0(int degree) { return dg1d::default_sigma0(degree); }

dg1d_status dg1d_mesh_create_uniform(int n, double a, double b, dg1d_mesh** out) {
  return guarded([&] {
    dg1d::require(out != nullptr, dg1d::Status::invalid_argument, "out must not be null");
    *out = new dg1d_mesh{dg1d::Mesh1D::uniform(n, a, b)};
  });
}

dg1d_status dg1d_mesh_create_perturbed(int n, double a, double b, double jitter,
                                       uint64_t seed, dg1d_mesh** out) {
  return guarded([&] {
    dg1d::require(out != nullptr, dg1d::Status::invalid_argument, "out must not be null");
    *out = new dg1d_mesh{dg1d::Mesh1D::perturbed(n, a, b, jitter, seed)};
  });
}

void dg1d_mesh_destroy(dg1d_mesh* mesh) { delete mesh; }

int dg1d_mesh_num_elements(const dg1d_mesh* mesh) {
  return mesh == nullptr ? -1 : mesh->impl.num_elements();
}

double dg1d_mesh_vertex(const dg1d_mesh* mesh, int i) {
  if (mesh == nullptr || i < 0 || i >= mesh->impl.num_vertices()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return mesh->impl.vertex(i);
}

void dg1d_config_init(dg1d_config* config) {
  if (config == nullptr) return;
  dg1d::RunConfig defaults;
  config->problem = DG1D_PROBLEM_SMOOTH;
  config->degree = defaults.degree;
  config->sigma0 = defaults.sigma0;
  config->sigma1 = defaults.sigma1;
  config->mesh_counts = nullptr;  // selects the default family
  config->num_mesh_counts = 0;
  config->domain_a = defaults.domain_a;
  config->domain_b = defaults.domain_b;
  config->xbar = defaults.xbar;
  config->c0 = defaults.c0;
  config->c1 = defaults.c1;
  config->seed = defaults.seed;
  config->timing = 0;
  config->dump_dir = nullptr;
}

dg1d_status dg1d_run_convergence(const dg1d_config* config, dg1d_run_row* rows,
                                 size_t max_rows, size_t* num_rows) {
  return guarded([&] {
    std::vector<dg1d::RunRow> result = dg1d::run_convergence(to_config(config));
    deliver(result, rows, max_rows, num_rows, [](const dg1d::RunRow& in, dg1d_run_row& out) {
      out.n_elements = in.n_elements;
      out.h_max = in.h_max;
      out.dofs = in.dofs;
      out.err_znorm = in.err_znorm;
      out.err_enorm = in.err_enorm;
      out.err_eenorm = in.err_eenorm;
      out.err_l2 = in.err_l2;
      out.eoc_znorm = in.eoc_znorm;
      out.eoc_l2 = in.eoc_l2;
      out.solve_seconds = in.solve_seconds;
    });
  });
}

dg1d_status dg1d_run_infsup(const dg1d_config* config, dg1d_infsup_row* rows,
                            size_t max_rows, size_t* num_rows) {
  return guarded([&] {
    std::vector<dg1d::InfsupRow> result = dg1d::run_infsup(to_config(config));
    deliver(result, rows, max_rows, num_rows,
            [](const dg1d::InfsupRow& in, dg1d_infsup_row& out) {
              out.n_elements = in.n_elements;
              out.h_max = in.h_max;
              out.gamma_v = in.gamma_v;
              out.gamma_w = in.gamma_w;
              out.lambda_coercivity = in.lambda_coercivity;
              out.sigma_max_continuity = in.sigma_max_continuity;
            });
  });
}

dg1d_status dg1d_run_check(const dg1d_config* config, dg1d_check_row* rows,
                           size_t max_rows, size_t* num_rows) {
  return guarded([&] {
    std::vector<dg1d::CheckItem> result = dg1d::run_check(to_config(config));
    deliver(result, rows, max_rows, num_rows,
            [](const dg1d::CheckItem& in, dg1d_check_row& out) {
              std::size_t len = std::min(in.name.size(), sizeof(out.name) - 1);
              std::memcpy(out.name, in.name.data(), len);
              out.name[len] = '\0';
              out.passed = in.passed ? 1 : 0;
              out.observed = in.observed;
              out.threshold = in.threshold;
            });
  });
}

}  // extern "C"
