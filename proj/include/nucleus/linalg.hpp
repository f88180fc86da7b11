// The linear nucleus: adjoint operators, Gram composites, rank-space
// factorization, and singular-value diagonalization via a cyclic Jacobi
// eigensolver. Plain dense matrices, 64-bit floats, deterministic
// rotation order.

#pragma once

#include <string>
#include <vector>

namespace lin {

struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<double> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static DenseMatrix eye(int n);
  bool finite() const;
};

DenseMatrix adjoint(const DenseMatrix& m);
DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
double frobenius(const DenseMatrix& m);
double max_abs(const DenseMatrix& m);
double inner(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> apply(const DenseMatrix& m, const std::vector<double>& v);

struct EigenResult {
  std::vector<double> values;  // nonincreasing
  DenseMatrix vectors;         // columns are the eigenvectors, same order
  int sweeps = 0;
};

// cyclic Jacobi with threshold strategy for symmetric input;
// throws on asymmetry beyond tol or failure to converge in max_sweeps.
EigenResult sym_eigen(const DenseMatrix& g, double tol = 1e-12, int max_sweeps = 100);

struct SpectralNucleus {
  DenseMatrix U;              // cols x r, orthonormal columns (basis of the Φ‡Φ rank space)
  std::vector<double> sigma;  // nonincreasing, strictly above the rank threshold
  DenseMatrix V;              // rows x r, orthonormal columns (basis of the ΦΦ‡ rank space)
  double tol = 0.0;
  int rank = 0;
  double residual = 0.0;  // ‖Φ − V·diag(σ)·U‡‖_F
};

// Φ = V·diag(σ)·U‡ via the eigendecomposition of the smaller Gram matrix;
// the other basis is recovered on the positive spectrum. Sign convention:
// the first nonzero entry of each U-column is positive.
SpectralNucleus svd_nucleus(const DenseMatrix& m, double tol = 1e-10);

// m = left·right with left = V (orthonormal columns) and right = diag(σ)·U‡.
struct RankFactorization {
  DenseMatrix left;
  DenseMatrix right;
  int rank = 0;
  double residual = 0.0;
};
RankFactorization rank_factorization(const DenseMatrix& m, double tol = 1e-10);

struct IdempotenceReport {
  std::vector<double> sigma_before;
  std::vector<double> sigma_after;  // of diag(sigma_before)
  double max_deviation = 0.0;
};
// re-running the nucleus on diag(σ) must return the same singular values
IdempotenceReport nucleus_idempotence_check(const DenseMatrix& m, double tol = 1e-10);

// CSV of decimal floats, one row per line
DenseMatrix parse_matrix_csv(std::istream& in);
std::string nucleus_to_json(const SpectralNucleus& n);

}  // namespace lin
