#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spheremax {

/// Input over the enumeration/oracle budget (exhaustive search would not fit).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A multiplier needed for a normal-equation residual is (numerically) zero.
class SingularMultiplierError : public std::runtime_error {
 public:
  explicit SingularMultiplierError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense n x n real coefficient matrix A = (a_kj). Entries must be finite.
class CoefficientMatrix {
 public:
  CoefficientMatrix(int n, std::vector<double> entries_row_major);
  static CoefficientMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static CoefficientMatrix identity(int n);
  static CoefficientMatrix diagonal(const std::vector<double>& diag);
  static CoefficientMatrix zero(int n);

  int order() const { return n_; }
  double operator()(int k, int j) const { return a_[static_cast<size_t>(k) * n_ + j]; }
  const std::vector<double>& entries() const { return a_; }

  CoefficientMatrix transpose() const;
  double frobenius_norm() const;
  /// Sum of |a_kj|; the Lipschitz constant used by the grid oracle.
  double abs_sum() const;
  bool is_zero() const;

  bool operator==(const CoefficientMatrix& other) const {
    return n_ == other.n_ && a_ == other.a_;
  }

 private:
  int n_;
  std::vector<double> a_;  // row-major
};

/// A coefficient matrix together with the ambient dimension d of each block vector.
struct ProblemInstance {
  CoefficientMatrix matrix;
  int d;

  ProblemInstance(CoefficientMatrix m, int dim);
  int order() const { return matrix.order(); }
};

/// Two lists of n unit vectors in R^d (the x_k and y_j blocks).
///
/// Construction renormalizes blocks whose norm deviates from 1 by at most
/// kUnitTol and rejects anything farther off.
class Assignment {
 public:
  static constexpr double kUnitTol = 1e-9;

  Assignment(std::vector<std::vector<double>> x, std::vector<std::vector<double>> y);

  /// All 2n blocks equal to e1; the deterministic start of the multistart solver.
  static Assignment all_e1(int n, int d);
  /// Embed an assignment into a higher dimension by zero-padding every block.
  Assignment embedded(int new_d) const;

  int blocks() const { return static_cast<int>(x_.size()); }
  int dim() const { return x_.empty() ? 0 : static_cast<int>(x_[0].size()); }
  const std::vector<std::vector<double>>& x() const { return x_; }
  const std::vector<std::vector<double>>& y() const { return y_; }

 private:
  Assignment() = default;
  std::vector<std::vector<double>> x_, y_;
};

/// Diagonal Lagrange multipliers Lambda = diag(lambda_1..lambda_n), M = diag(mu_1..mu_n).
struct MultiplierPair {
  std::vector<double> lambda;
  std::vector<double> mu;
};

/// Outcome of a solver run: the point, its multipliers and residual, and run metadata.
struct SolveReport {
  double value;
  Assignment assignment;
  MultiplierPair multipliers;
  double stationarity_residual;
  int iterations;
  bool converged;
  int starts_used;
};

namespace vec {

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& a);
/// Returns v / |v|; throws std::invalid_argument on (near-)zero input.
std::vector<double> normalized(std::vector<double> v);

}  // namespace vec

}  // namespace spheremax
