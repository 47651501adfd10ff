#pragma once

#include <vector>

#include "spheremax/types.hpp"

namespace spheremax {

/// Minimal dense rectangular matrix. Sized for n*d <= ~32; no sparsity, no views.
class Matrix {
 public:
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, fill) {}
  static Matrix identity(int n);
  static Matrix from_coefficients(const CoefficientMatrix& a);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  std::vector<double> apply(const std::vector<double>& x) const;
  double frobenius_norm() const;

 private:
  int rows_, cols_;
  std::vector<double> v_;
};

/// Eigen-decomposition of a symmetric matrix, eigenvalues descending,
/// vectors(:, i) the eigenvector for values[i].
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;
};

/// Cyclic Jacobi sweeps to near machine precision. Stops when the off-diagonal
/// Frobenius norm falls below 1e-14 * ||S||_F; more than 100 sweeps is an
/// internal error.
SymmetricEigen jacobi_eigen_symmetric(Matrix s);

/// Largest singular value with consistent left/right vectors.
/// |A * right - sigma * left| <= 1e-8 * max(1, sigma). A zero matrix yields
/// sigma = 0 with arbitrary unit vectors and degenerate = true.
struct SingularTriple {
  double sigma;
  std::vector<double> left;
  std::vector<double> right;
  bool degenerate;
};

/// Singular values in descending order, computed as sqrt of the eigenvalues of
/// A^T A. Values below 1e-12 * sigma_1 are reported as exactly 0.
std::vector<double> singular_values(const Matrix& a);
std::vector<double> singular_values(const CoefficientMatrix& a);

SingularTriple largest_singular_triple(const Matrix& a);
SingularTriple largest_singular_triple(const CoefficientMatrix& a);

/// Kronecker product A (x) J_d with J_d the d x d all-ones matrix, in the
/// lexicographic block layout: B[(k*d + r)][(j*d + s)] = a_kj.
Matrix kron_all_ones(const CoefficientMatrix& a, int d);

}  // namespace spheremax
