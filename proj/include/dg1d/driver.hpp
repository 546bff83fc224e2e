// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// Study drivers behind the command-line tool: convergence runs over mesh
// families, inf-sup spectra per level, and the self-check suite. All results
// come back as plain row structs; serialization lives with the callers.

#ifndef DG1D_DRIVER_HPP
#define DG1D_DRIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dg1d/forms.hpp"
#include "dg1d/problems.hpp"

namespace dg1d {

struct RunConfig {
  ProblemKind problem = ProblemKind::smooth;
  int degree = 2;
  double sigma0 = 0.0;  // <= 0 selects default_sigma0(degree)
  double sigma1 = 1.0;
  std::vector<int> mesh_counts = {8, 16, 32, 64};
  double domain_a = 0.0;
  double domain_b = 1.0;
  double xbar = 0.6366;  // point-source location
  double c0 = 0.0;       // Dirac weight
  double c1 = 1.0;       // dipole weight
  std::uint64_t seed = 7;
  bool timing = false;   // when false, solve_seconds is reported as 0
  std::string dump_dir;  // empty disables matrix dumps
};

PenaltyParams resolve_penalties(const RunConfig& config);

// One mesh level of a convergence run. The EOC columns compare against the
// previous level and are NaN on the first row.
struct RunRow {
  int n_elements = 0;
  double h_max = 0.0;
  int dofs = 0;
  double err_znorm = 0.0;
  double err_enorm = 0.0;
  double err_eenorm = 0.0;
  double err_l2 = 0.0;
  double eoc_znorm = 0.0;
  double eoc_l2 = 0.0;
  double solve_seconds = 0.0;
};

struct InfsupRow {
  int n_elements = 0;
  double h_max = 0.0;
  double gamma_v = 0.0;
  double gamma_w = 0.0;
  double lambda_coercivity = 0.0;
  double sigma_max_continuity = 0.0;
};

// One self-check. The pass/fail direction depends on the check (upper bound,
// lower bound, or exact match); observed and threshold are still reported so
// failures can be read off the table.
struct CheckItem {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double threshold = 0.0;
};

std::vector<RunRow> run_convergence(const RunConfig& config);
std::vector<InfsupRow> run_infsup(const RunConfig& config);

// Self-check suite on fixed internal mesh levels 8..64; mesh_counts is
// ignored. Checks never throw: a check that raises an error is reported as
// failed with a NaN observation.
std::vector<CheckItem> run_check(const RunConfig& config);

// Comment line for CSV output recording the parameters that shaped the rows.
std::string config_comment(const RunConfig& config);

}  // namespace dg1d

#endif
