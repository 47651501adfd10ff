#include "spheremax/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spheremax {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_coefficients(const CoefficientMatrix& a) {
  const int n = a.order();
  Matrix m(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) m(k, j) = a(k, j);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const double v = (*this)(r, k);
      if (v == 0.0) continue;
      for (int c = 0; c < rhs.cols_; ++c) out(r, c) += v * rhs(k, c);
    }
  return out;
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("Matrix apply: vector length mismatch");
  std::vector<double> out(static_cast<size_t>(rows_), 0.0);
  for (int r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : v_) s += v * v;
  return std::sqrt(s);
}

SymmetricEigen jacobi_eigen_symmetric(Matrix s) {
  const int n = s.rows();
  if (n != s.cols()) throw std::invalid_argument("jacobi_eigen_symmetric: matrix not square");
  Matrix v = Matrix::identity(n);
  const double scale = s.frobenius_norm();
  const double stop = 1e-14 * scale;

  auto off_norm = [&]() {
    double acc = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) acc += 2.0 * s(p, q) * s(p, q);
    return std::sqrt(acc);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() > stop) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("jacobi_eigen_symmetric: sweep cap exceeded");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = s(p, q);
        if (apq == 0.0) continue;
        const double tau = (s(q, q) - s(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        // Rotate rows/columns p and q of S and accumulate into V.
        for (int i = 0; i < n; ++i) {
          const double sip = s(i, p), siq = s(i, q);
          s(i, p) = c * sip - sn * siq;
          s(i, q) = sn * sip + c * siq;
        }
        for (int i = 0; i < n; ++i) {
          const double spi = s(p, i), sqi = s(q, i);
          s(p, i) = c * spi - sn * sqi;
          s(q, i) = sn * spi + c * sqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - sn * viq;
          v(i, q) = sn * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s(a, a) > s(b, b); });

  SymmetricEigen out{std::vector<double>(static_cast<size_t>(n)), Matrix(n, n)};
  for (int i = 0; i < n; ++i) {
    out.values[i] = s(order[i], order[i]);
    for (int r = 0; r < n; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

namespace {

constexpr double kRankZeroTol = 1e-12;

std::vector<double> sigmas_from_gram(const std::vector<double>& eigenvalues) {
  std::vector<double> sig;
  sig.reserve(eigenvalues.size());
  for (double e : eigenvalues) sig.push_back(std::sqrt(std::max(e, 0.0)));
  if (!sig.empty()) {
    const double cutoff = kRankZeroTol * sig.front();
    for (double& s : sig)
      if (s < cutoff) s = 0.0;
  }
  return sig;
}

}  // namespace

std::vector<double> singular_values(const Matrix& a) {
  const Matrix gram = a.transpose() * a;
  return sigmas_from_gram(jacobi_eigen_symmetric(gram).values);
}

std::vector<double> singular_values(const CoefficientMatrix& a) {
  return singular_values(Matrix::from_coefficients(a));
}

SingularTriple largest_singular_triple(const Matrix& a) {
  const int m = a.rows(), n = a.cols();
  if (a.frobenius_norm() == 0.0) {
    std::vector<double> left(static_cast<size_t>(m), 0.0), right(static_cast<size_t>(n), 0.0);
    left[0] = 1.0;
    right[0] = 1.0;
    return {0.0, std::move(left), std::move(right), true};
  }
  const SymmetricEigen eig = jacobi_eigen_symmetric(a.transpose() * a);
  const double sigma = std::sqrt(std::max(eig.values[0], 0.0));
  std::vector<double> right(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) right[r] = eig.vectors(r, 0);
  right = vec::normalized(std::move(right));
  std::vector<double> left = vec::normalized(a.apply(right));
  return {sigma, std::move(left), std::move(right), false};
}

SingularTriple largest_singular_triple(const CoefficientMatrix& a) {
  return largest_singular_triple(Matrix::from_coefficients(a));
}

Matrix kron_all_ones(const CoefficientMatrix& a, int d) {
  if (d < 1) throw std::invalid_argument("kron_all_ones: d must be >= 1");
  const int n = a.order();
  Matrix b(n * d, n * d);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const double akj = a(k, j);
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) b(k * d + r, j * d + s) = akj;
    }
  return b;
}

}  // namespace spheremax
