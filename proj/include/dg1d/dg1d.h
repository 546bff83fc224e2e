/* Copyright 2026 The dg1d Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the dg1d shared library: a one-dimensional interior penalty
 * discontinuous Galerkin toolkit with mesh-dependent-norm diagnostics.
 * All entry points are thread-safe as long as each handle is confined to one
 * thread; error messages are reported per thread.
 */

#ifndef DG1D_DG1D_H
#define DG1D_DG1D_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dg1d_status {
  DG1D_OK = 0,
  DG1D_ERR_INVALID_ARGUMENT = 1,  /* precondition violated; message names the field */
  DG1D_ERR_SKELETON_COLLISION = 2, /* point source sits on a mesh vertex */
  DG1D_ERR_COERCIVITY = 3,         /* assembled form is not positive definite */
  DG1D_ERR_NUMERICAL = 4,          /* factorization or eigensolve broke down */
  DG1D_ERR_INTERNAL = 5            /* library invariant violated */
} dg1d_status;

/* Semantic version of the library, e.g. "1.0.0". */
const char* dg1d_version(void);

/* Message of the most recent failing call on this thread; empty after a
 * success. The pointer stays valid until the next dg1d call on the thread. */
const char* dg1d_last_error(void);

/* Default jump penalty 10 k^2 for polynomial degree k. */
double dg1d_default_sigma0(int degree);

/* ----- meshes ----- */

typedef struct dg1d_mesh dg1d_mesh;

dg1d_status dg1d_mesh_create_uniform(int n, double a, double b, dg1d_mesh** out);

/* Uniform mesh with interior vertices displaced by at most
 * jitter * (b - a) / n; deterministic in the seed. */
dg1d_status dg1d_mesh_create_perturbed(int n, double a, double b, double jitter,
                                       uint64_t seed, dg1d_mesh** out);

void dg1d_mesh_destroy(dg1d_mesh* mesh);

/* -1 when mesh is NULL. */
int dg1d_mesh_num_elements(const dg1d_mesh* mesh);

/* Vertex coordinate; NaN when mesh is NULL or i is out of range. */
double dg1d_mesh_vertex(const dg1d_mesh* mesh, int i);

/* ----- study configuration ----- */

#define DG1D_PROBLEM_SMOOTH 0
#define DG1D_PROBLEM_POINT_SOURCE 1

typedef struct dg1d_config {
  int problem;  /* DG1D_PROBLEM_SMOOTH or DG1D_PROBLEM_POINT_SOURCE */
  int degree;   /* polynomial degree k >= 1 */
  double sigma0; /* jump penalty; <= 0 selects the default 10 k^2 */
  double sigma1; /* gradient-jump stabilization, >= 0 */
  const int* mesh_counts; /* strictly increasing element counts; NULL selects 8,16,32,64 */
  size_t num_mesh_counts;
  double domain_a;
  double domain_b;
  double xbar; /* point-source location */
  double c0;   /* Dirac weight */
  double c1;   /* dipole weight */
  uint64_t seed;
  int timing;           /* nonzero: report wall-clock solve times */
  const char* dump_dir; /* NULL or empty: no matrix dumps */
} dg1d_config;

/* Fills a config with the library defaults. */
void dg1d_config_init(dg1d_config* config);

/* ----- result rows ----- */

typedef struct dg1d_run_row {
  int n_elements;
  double h_max;
  int dofs;
  double err_znorm;
  double err_enorm;
  double err_eenorm;
  double err_l2;
  double eoc_znorm; /* NaN on the first row */
  double eoc_l2;    /* NaN on the first row */
  double solve_seconds;
} dg1d_run_row;

typedef struct dg1d_infsup_row {
  int n_elements;
  double h_max;
  double gamma_v;
  double gamma_w;
  double lambda_coercivity;
  double sigma_max_continuity;
} dg1d_infsup_row;

typedef struct dg1d_check_row {
  char name[64]; /* NUL-terminated check identifier */
  int passed;    /* 1 passed, 0 failed */
  double observed;
  double threshold;
} dg1d_check_row;

/* ----- studies -----
 *
 * Common buffer contract: *num_rows receives the number of rows the study
 * produced. When rows is NULL the call only reports that count; otherwise
 * max_rows must be at least that count or the call fails with
 * DG1D_ERR_INVALID_ARGUMENT before any row is written. */

/* Convergence study of the configured problem over the mesh family. */
dg1d_status dg1d_run_convergence(const dg1d_config* config, dg1d_run_row* rows,
                                 size_t max_rows, size_t* num_rows);

/* Discrete inf-sup and coercivity spectra per mesh level; requires
 * degree >= 2. Rows are produced even when a coercivity eigenvalue is
 * nonpositive; inspect lambda_coercivity. */
dg1d_status dg1d_run_infsup(const dg1d_config* config, dg1d_infsup_row* rows,
                            size_t max_rows, size_t* num_rows);

/* Self-check suite on fixed internal mesh levels; mesh_counts is ignored.
 * A failing check is reported in its row, not as a status. */
dg1d_status dg1d_run_check(const dg1d_config* config, dg1d_check_row* rows,
                           size_t max_rows, size_t* num_rows);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DG1D_DG1D_H */
