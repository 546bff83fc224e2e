// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DG1D_LINALG_HPP
#define DG1D_LINALG_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>

namespace dg1d {

// Symmetric matrix in lower band storage with an in-place Cholesky
// factorization. The assembled values are kept separately from the factor so
// that residuals can be formed after factorization (iterative refinement).
class SymmetricBandMatrix {
 public:
  // n: matrix order; bandwidth: number of subdiagonals stored (entries with
  // i - j > bandwidth are structurally zero).
  SymmetricBandMatrix(int n, int bandwidth);

  int size() const { return n_; }
  int bandwidth() const { return bw_; }

  // Accumulates v into entry (i, j). Entries from the upper triangle are
  // folded onto the lower one, so a caller emitting both (i, j) and (j, i)
  // of a symmetric pair must restrict itself to i >= j.
  void add(int i, int j, double v);
  double at(int i, int j) const;  // requires |i - j| <= bandwidth

  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;

  // Cholesky factorization of the assembled matrix. Throws
  // Error(coercivity_failure) on a nonpositive pivot; the assembled values
  // stay valid either way.
  void factorize();
  bool factorized() const { return factorized_; }

  // Requires factorize() to have succeeded.
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  // One step of iterative refinement: solve, then correct with the residual
  // of the assembled matrix.
  Eigen::VectorXd solve_refined(const Eigen::VectorXd& rhs) const;

  Eigen::MatrixXd dense() const;  // symmetric dense copy of the assembled values

 private:
  int n_;
  int bw_;
  bool factorized_ = false;
  Eigen::MatrixXd band_;    // assembled values, (bw_+1) x n_, row r holds diagonal r
  Eigen::MatrixXd factor_;  // Cholesky factor in the same layout
};

// Deterministic random streams. The mapping from raw engine output to
// doubles is fixed here because the standard library distributions are
// implementation-defined; byte-identical output across runs is a contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01();

  // Standard normal via the Box-Muller transform with a cached spare.
  double normal();

  Eigen::VectorXd normal_vector(int n);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Writes a dense matrix in MatrixMarket coordinate format (1-based indices,
// exact zeros dropped, 17 significant digits).
void write_matrix_market(const std::string& path, const Eigen::MatrixXd& m);

// Locale-independent shortest-round-trip and fixed-precision formatting.
std::string format_double(double v);                  // shortest round-trip
std::string format_double_17(double v);               // 17 significant digits

}  // namespace dg1d

#endif
