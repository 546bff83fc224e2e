// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <functional>
#include <string>

#include "dg1d/driver.hpp"
#include "dg1d/errors.hpp"

using namespace dg1d;

namespace {

bool throws_mentioning(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("configuration validation names the offending field") {
  RunConfig c;
  c.degree = 0;
  CHECK(throws_mentioning([&] { run_convergence(c); }, "degree"));

  c = RunConfig{};
  c.mesh_counts = {};
  CHECK(throws_mentioning([&] { run_convergence(c); }, "mesh"));

  c = RunConfig{};
  c.mesh_counts = {8, 8};
  CHECK(throws_mentioning([&] { run_convergence(c); }, "increasing"));

  c = RunConfig{};
  c.domain_a = 1.0;
  c.domain_b = 1.0;
  CHECK(throws_mentioning([&] { run_convergence(c); }, "domain"));

  c = RunConfig{};
  c.sigma1 = -1.0;
  CHECK(throws_mentioning([&] { run_convergence(c); }, "sigma1"));

  c = RunConfig{};
  c.problem = ProblemKind::point_source;
  c.xbar = 2.0;
  CHECK(throws_mentioning([&] { run_convergence(c); }, "xbar"));

  c = RunConfig{};
  c.degree = 1;
  CHECK(throws_mentioning([&] { run_infsup(c); }, "k >= 2"));
}

TEST_CASE("default penalties resolve from the degree") {
  RunConfig c;
  PenaltyParams p = resolve_penalties(c);
  CHECK(p.sigma0 == doctest::Approx(40.0));
  CHECK(p.sigma1 == doctest::Approx(1.0));
  c.sigma0 = 55.0;
  CHECK(resolve_penalties(c).sigma0 == doctest::Approx(55.0));
}

TEST_CASE("convergence rows carry sizes, errors, and orders") {
  RunConfig c;
  c.mesh_counts = {4, 8, 16};
  std::vector<RunRow> rows = run_convergence(c);
  REQUIRE(rows.size() == 3);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n_elements == c.mesh_counts[i]);
    CHECK(rows[i].h_max == doctest::Approx(1.0 / c.mesh_counts[i]));
    CHECK(rows[i].dofs == 3 * c.mesh_counts[i]);
    CHECK(rows[i].err_l2 > 0.0);
    CHECK(rows[i].solve_seconds == 0.0);  // timing disabled by default
  }
  CHECK(std::isnan(rows[0].eoc_l2));
  CHECK(std::isnan(rows[0].eoc_znorm));
  CHECK(rows[2].eoc_l2 == doctest::Approx(3.0).epsilon(0.15));
  CHECK(rows[2].eoc_znorm == doctest::Approx(3.0).epsilon(0.15));
  CHECK(rows[2].err_l2 < rows[1].err_l2);

  c.timing = true;
  std::vector<RunRow> timed = run_convergence(c);
  CHECK(timed[0].solve_seconds > 0.0);
}

TEST_CASE("rough convergence rows decay at the rough rate") {
  RunConfig c;
  c.problem = ProblemKind::point_source;
  c.mesh_counts = {16, 32, 64};
  std::vector<RunRow> rows = run_convergence(c);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].eoc_l2 > 0.3);
  CHECK(rows[2].eoc_l2 < 0.9);
}

TEST_CASE("inf-sup rows are positive and stable at degree two") {
  RunConfig c;
  c.mesh_counts = {4, 8};
  std::vector<InfsupRow> rows = run_infsup(c);
  REQUIRE(rows.size() == 2);
  for (const InfsupRow& r : rows) {
    CHECK(r.gamma_v > 0.0);
    CHECK(r.gamma_w > 0.0);
    CHECK(r.lambda_coercivity > 0.0);
    CHECK(r.sigma_max_continuity > r.gamma_v);
  }
}

TEST_CASE("the self-check suite passes at the defaults") {
  RunConfig c;
  std::vector<CheckItem> items = run_check(c);
  CHECK(items.size() >= 20);
  int failed = 0;
  for (const CheckItem& item : items) {
    INFO(item.name, " observed=", item.observed, " threshold=", item.threshold);
    CHECK(item.passed);
    if (!item.passed) ++failed;
  }
  CHECK(failed == 0);

  std::vector<CheckItem> again = run_check(c);
  REQUIRE(again.size() == items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    CHECK(again[i].name == items[i].name);
    // Bitwise repeatability: the suite is fully deterministic.
    CHECK(again[i].observed == items[i].observed);
  }
}

TEST_CASE("the self-check suite runs in reduced form at degree one") {
  RunConfig c;
  c.degree = 1;
  std::vector<CheckItem> items = run_check(c);
  CHECK(items.size() >= 10);
  for (const CheckItem& item : items) {
    INFO(item.name, " observed=", item.observed, " threshold=", item.threshold);
    CHECK(item.passed);
  }
}

TEST_CASE("the comment line freezes the run parameters") {
  RunConfig c;
  CHECK(config_comment(c) == "# k=2 sigma0=40 sigma1=1 xbar=0.6366 seed=7 version=1.0.0");
  c.sigma0 = 12.5;
  c.degree = 3;
  CHECK(config_comment(c).find("k=3 sigma0=12.5") != std::string::npos);
}

TEST_CASE("matrix dumps land in the requested directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "dg1d_test_dumps";
  fs::remove_all(dir);
  RunConfig c;
  c.mesh_counts = {4};
  c.dump_dir = dir.string();
  run_convergence(c);
  for (const char* stem : {"A_primal", "A_ibp", "M0", "M1", "M2"}) {
    fs::path f = dir / (std::string(stem) + "_n4.mtx");
    INFO(f.string());
    CHECK(fs::exists(f));
  }
  fs::remove_all(dir);
}
