// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "dg1d/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "dg1d/errors.hpp"

namespace dg1d {

SymmetricBandMatrix::SymmetricBandMatrix(int n, int bandwidth) : n_(n), bw_(bandwidth) {
  require(n >= 1, Status::invalid_argument, "band matrix order must be positive");
  require(bandwidth >= 0 && bandwidth < n, Status::invalid_argument,
          "band width must lie in [0, n)");
  band_ = Eigen::MatrixXd::Zero(bw_ + 1, n_);
}

void SymmetricBandMatrix::add(int i, int j, double v) {
  if (i < j) std::swap(i, j);
  require(i < n_ && j >= 0, Status::internal, "band entry out of range");
  require(i - j <= bw_, Status::internal, "band entry outside the band");
  band_(i - j, j) += v;
}

double SymmetricBandMatrix::at(int i, int j) const {
  if (i < j) std::swap(i, j);
  require(i < n_ && j >= 0 && i - j <= bw_, Status::internal, "band entry outside the band");
  return band_(i - j, j);
}

Eigen::VectorXd SymmetricBandMatrix::multiply(const Eigen::VectorXd& x) const {
  require(x.size() == n_, Status::internal, "band multiply size mismatch");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n_);
  for (int j = 0; j < n_; ++j) {
    y(j) += band_(0, j) * x(j);
    int top = std::min(bw_, n_ - 1 - j);
    for (int r = 1; r <= top; ++r) {
      y(j + r) += band_(r, j) * x(j);
      y(j) += band_(r, j) * x(j + r);
    }
  }
  return y;
}

void SymmetricBandMatrix::factorize() {
  factor_ = band_;
  for (int j = 0; j < n_; ++j) {
    double d = factor_(0, j);
    if (!(d > 0.0) || !std::isfinite(d)) {
      factorized_ = false;
      fail(Status::coercivity_failure,
           "nonpositive pivot at row " + std::to_string(j) + " during banded Cholesky");
    }
    d = std::sqrt(d);
    factor_(0, j) = d;
    int top = std::min(bw_, n_ - 1 - j);
    for (int r = 1; r <= top; ++r) factor_(r, j) /= d;
    // Rank-1 update of the trailing band columns touched by column j.
    for (int c = 1; c <= top; ++c) {
      double ljc = factor_(c, j);
      for (int r = c; r <= top; ++r) {
        factor_(r - c, j + c) -= factor_(r, j) * ljc;
      }
    }
  }
  factorized_ = true;
}

Eigen::VectorXd SymmetricBandMatrix::solve(const Eigen::VectorXd& rhs) const {
  require(factorized_, Status::internal, "solve called before factorize");
  require(rhs.size() == n_, Status::internal, "band solve size mismatch");
  Eigen::VectorXd x = rhs;
  // Forward substitution with L.
  for (int j = 0; j < n_; ++j) {
    x(j) /= factor_(0, j);
    int top = std::min(bw_, n_ - 1 - j);
    for (int r = 1; r <= top; ++r) x(j + r) -= factor_(r, j) * x(j);
  }
  // Backward substitution with L^T.
  for (int j = n_ - 1; j >= 0; --j) {
    int top = std::min(bw_, n_ - 1 - j);
    for (int r = 1; r <= top; ++r) x(j) -= factor_(r, j) * x(j + r);
    x(j) /= factor_(0, j);
  }
  return x;
}

Eigen::VectorXd SymmetricBandMatrix::solve_refined(const Eigen::VectorXd& rhs) const {
  Eigen::VectorXd x = solve(rhs);
  Eigen::VectorXd r = rhs - multiply(x);
  x += solve(r);
  return x;
}

Eigen::MatrixXd SymmetricBandMatrix::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j < n_; ++j) {
    int top = std::min(bw_, n_ - 1 - j);
    for (int r = 0; r <= top; ++r) {
      m(j + r, j) = band_(r, j);
      m(j, j + r) = band_(r, j);
    }
  }
  return m;
}

double Rng::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the logarithm finite.
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Eigen::VectorXd Rng::normal_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double_17(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_matrix_market(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  require(out.good(), Status::invalid_argument, "cannot open '" + path + "' for writing");
  long nnz = 0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0.0) ++nnz;
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << " " << m.cols() << " " << nnz << "\n";
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0.0) {
        out << (i + 1) << " " << (j + 1) << " " << format_double_17(m(i, j)) << "\n";
      }
    }
  }
  require(out.good(), Status::invalid_argument, "short write to '" + path + "'");
}

}  // namespace dg1d
