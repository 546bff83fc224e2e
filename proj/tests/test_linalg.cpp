// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dg1d/errors.hpp"
#include "dg1d/linalg.hpp"

using namespace dg1d;

namespace {

// Random symmetric positive definite band matrix: band Gram of a random
// banded factor, plus a diagonal shift to keep it well conditioned.
Eigen::MatrixXd random_spd_band(int n, int bw, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - bw); j <= i; ++j) b(i, j) = rng.normal();
  }
  Eigen::MatrixXd a = b * b.transpose();
  a.diagonal().array() += 1.0;
  return a;
}

}  // namespace

TEST_CASE("banded Cholesky matches a dense solve") {
  const int n = 24, bw = 3;
  Eigen::MatrixXd dense = random_spd_band(n, bw, 11);
  SymmetricBandMatrix band(n, bw);
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - bw); j <= i; ++j) band.add(i, j, dense(i, j));
  }
  CHECK(band.dense().isApprox(dense, 1e-14));

  Rng rng(5);
  Eigen::VectorXd rhs = rng.normal_vector(n);
  Eigen::VectorXd expect = dense.llt().solve(rhs);

  SymmetricBandMatrix factored = band;
  factored.factorize();
  Eigen::VectorXd got = factored.solve(rhs);
  CHECK((got - expect).norm() <= 1e-12 * expect.norm());

  Eigen::VectorXd refined = factored.solve_refined(rhs);
  CHECK((band.multiply(refined) - rhs).norm() <= 1e-12 * rhs.norm());
}

TEST_CASE("banded storage folds upper triangle entries") {
  SymmetricBandMatrix band(5, 2);
  band.add(1, 3, 2.5);  // upper-triangle write lands at (3, 1)
  band.add(3, 1, 0.5);
  CHECK(band.at(3, 1) == doctest::Approx(3.0));
  CHECK(band.dense()(1, 3) == doctest::Approx(3.0));
}

TEST_CASE("banded multiply agrees with dense multiply") {
  const int n = 17, bw = 4;
  Eigen::MatrixXd dense = random_spd_band(n, bw, 23);
  SymmetricBandMatrix band(n, bw);
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - bw); j <= i; ++j) band.add(i, j, dense(i, j));
  }
  Rng rng(9);
  Eigen::VectorXd x = rng.normal_vector(n);
  CHECK((band.multiply(x) - dense * x).norm() <= 1e-13 * x.norm());
}

TEST_CASE("indefinite matrices are rejected during factorization") {
  SymmetricBandMatrix band(2, 1);
  band.add(0, 0, 1.0);
  band.add(1, 1, -1.0);
  try {
    band.factorize();
    FAIL("expected a coercivity failure");
  } catch (const Error& e) {
    CHECK(e.code() == Status::coercivity_failure);
    CHECK(std::string(e.what()).find("pivot") != std::string::npos);
  }
}

TEST_CASE("band matrix constructor validates its arguments") {
  CHECK_THROWS_AS(SymmetricBandMatrix(0, 0), Error);
  CHECK_THROWS_AS(SymmetricBandMatrix(4, 4), Error);
  CHECK_THROWS_AS(SymmetricBandMatrix(4, -1), Error);
}

TEST_CASE("random streams are deterministic per seed") {
  Rng a(42), b(42), c(43);
  bool same = true, different = false;
  for (int i = 0; i < 64; ++i) {
    double x = a.uniform01();
    if (x != b.uniform01()) same = false;
    if (x != c.uniform01()) different = true;
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(same);
  CHECK(different);
}

TEST_CASE("normal samples have sane moments") {
  Rng rng(7);
  const int n = 40000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = rng.normal();
    sum += x;
    sumsq += x * x;
  }
  double mean = sum / n;
  double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 0.03);
  CHECK(var == doctest::Approx(1.0).epsilon(0.05));

  Eigen::VectorXd v = rng.normal_vector(8);
  CHECK(v.size() == 8);
}

TEST_CASE("double formatting is shortest and round-trips") {
  CHECK(format_double(40.0) == "40");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-3.0) == "-3");
  double x = 0.1 + 0.2;
  CHECK(std::stod(format_double(x)) == x);
  CHECK(std::stod(format_double_17(x)) == x);
  CHECK(std::stod(format_double_17(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("matrix market output carries the nonzero entries") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 3);
  m(0, 0) = 1.5;
  m(1, 2) = -2.0;
  auto path = std::filesystem::temp_directory_path() / "dg1d_test_mm.mtx";
  write_matrix_market(path.string(), m);

  std::ifstream in(path);
  std::string header, sizes;
  std::getline(in, header);
  std::getline(in, sizes);
  CHECK(header == "%%MatrixMarket matrix coordinate real general");
  CHECK(sizes == "2 3 2");
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(body.find("1 1 ") != std::string::npos);
  CHECK(body.find("2 3 ") != std::string::npos);
  CHECK(body.find("1.5") != std::string::npos);
  std::filesystem::remove(path);
}
