#include "spheremax/normal_eq.hpp"

#include <cmath>
#include <sstream>

#include "spheremax/linalg.hpp"

namespace spheremax {

namespace {

void check_sizes(const CoefficientMatrix& matrix, const MultiplierPair& m) {
  const size_t n = static_cast<size_t>(matrix.order());
  if (m.lambda.size() != n || m.mu.size() != n)
    throw std::invalid_argument("multiplier lists do not match the matrix order");
}

void require_nonzero(const std::vector<double>& values, const char* name) {
  for (size_t k = 0; k < values.size(); ++k) {
    if (std::fabs(values[k]) <= kMultiplierZeroTol) {
      std::ostringstream os;
      os << name << "[" << k << "] = " << values[k]
         << " is numerically zero; the normal equations are undefined there - "
            "use stationarity_residual instead";
      throw SingularMultiplierError(os.str());
    }
  }
}

// slot(vectors, r) = (v_1r, ..., v_nr)
std::vector<double> slot(const std::vector<std::vector<double>>& blocks, int r) {
  std::vector<double> out(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) out[k] = blocks[k][r];
  return out;
}

}  // namespace

ResidualReport stationarity_residual(const ProblemInstance& instance, const Assignment& a,
                                     const MultiplierPair& m) {
  const int n = instance.order();
  const int d = instance.d;
  check_sizes(instance.matrix, m);
  if (a.blocks() != n || a.dim() != d)
    throw std::invalid_argument("stationarity_residual: assignment shape mismatch");

  ResidualReport rep;
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < d; ++r) {
      double wx = 0.0, wy = 0.0;
      for (int j = 0; j < n; ++j) {
        wx += instance.matrix(k, j) * a.y()[j][r];
        wy += instance.matrix(j, k) * a.x()[j][r];
      }
      rep.primal_x = std::max(rep.primal_x, std::fabs(wx - m.lambda[k] * a.x()[k][r]));
      rep.primal_y = std::max(rep.primal_y, std::fabs(wy - m.mu[k] * a.y()[k][r]));
    }

  double sl = 0.0, sm = 0.0;
  for (int k = 0; k < n; ++k) {
    sl += m.lambda[k];
    sm += m.mu[k];
  }
  rep.trace_gap = std::fabs(sl - sm);
  return rep;
}

double normal_residual_y(const CoefficientMatrix& matrix, const MultiplierPair& m,
                         const std::vector<double>& y) {
  const int n = matrix.order();
  check_sizes(matrix, m);
  require_nonzero(m.lambda, "lambda");
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("normal_residual_y: vector length mismatch");

  // t = Lambda^-1 A y, residual = A^T t - M y
  std::vector<double> t(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += matrix(k, j) * y[j];
    t[k] = s / m.lambda[k];
  }
  double res2 = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += matrix(k, j) * t[k];
    const double e = s - m.mu[j] * y[j];
    res2 += e * e;
  }
  return std::sqrt(res2);
}

double normal_residual_x(const CoefficientMatrix& matrix, const MultiplierPair& m,
                         const std::vector<double>& x) {
  const int n = matrix.order();
  check_sizes(matrix, m);
  require_nonzero(m.mu, "mu");
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("normal_residual_x: vector length mismatch");

  // t = M^-1 A^T x, residual = A t - Lambda x
  std::vector<double> t(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += matrix(j, k) * x[j];
    t[k] = s / m.mu[k];
  }
  double res2 = 0.0;
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += matrix(k, j) * t[j];
    const double e = s - m.lambda[k] * x[k];
    res2 += e * e;
  }
  return std::sqrt(res2);
}

ResidualReport normal_equation_residual(const CoefficientMatrix& matrix, const MultiplierPair& m,
                                        const Assignment& a) {
  if (a.blocks() != matrix.order())
    throw std::invalid_argument("normal_equation_residual: assignment shape mismatch");
  ResidualReport rep;
  double ny = 0.0, nx = 0.0;
  for (int r = 0; r < a.dim(); ++r) {
    ny = std::max(ny, normal_residual_y(matrix, m, slot(a.y(), r)));
    nx = std::max(nx, normal_residual_x(matrix, m, slot(a.x(), r)));
  }
  rep.normal_y = ny;
  rep.normal_x = nx;
  return rep;
}

std::vector<double> duality_transfer(const CoefficientMatrix& matrix, const MultiplierPair& m,
                                     const std::vector<double>& y) {
  const int n = matrix.order();
  check_sizes(matrix, m);
  require_nonzero(m.lambda, "lambda");
  require_nonzero(m.mu, "mu");
  const double ynorm = vec::norm(y);
  if (ynorm < 1e-300) throw std::invalid_argument("duality_transfer: zero input vector");

  const double input_residual = normal_residual_y(matrix, m, y);
  if (input_residual > 1e-8 * ynorm) {
    std::ostringstream os;
    os << "duality_transfer: input does not satisfy the primal normal equation (residual "
       << input_residual << " > 1e-8 * ||y|| = " << 1e-8 * ynorm << ")";
    throw std::invalid_argument(os.str());
  }

  std::vector<double> x(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += matrix(k, j) * y[j];
    x[k] = s / m.lambda[k];
  }
  const double xnorm = vec::norm(x);
  if (xnorm < 1e-300)
    throw std::invalid_argument("duality_transfer: Lambda^-1 A y vanished; transfer undefined");
  const double scale = ynorm / xnorm;
  for (double& c : x) c *= scale;
  return x;
}

BoundReport svd_bound(const ProblemInstance& instance, std::optional<double> observed,
                      bool cross_check) {
  const int n = instance.order();
  const int d = instance.d;
  const double sigma1 = largest_singular_triple(instance.matrix).sigma;

  BoundReport rep{sigma1, static_cast<double>(n) * n * d * sigma1,
                  static_cast<double>(n) * d * sigma1, observed, std::nullopt};
  if (cross_check && n * d <= 32) {
    const double kron_sigma1 = largest_singular_triple(kron_all_ones(instance.matrix, d)).sigma;
    rep.kron_gap = std::fabs(kron_sigma1 - d * sigma1);
  }
  return rep;
}

}  // namespace spheremax
