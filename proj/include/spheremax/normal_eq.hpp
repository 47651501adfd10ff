#pragma once

#include <optional>
#include <vector>

#include "spheremax/types.hpp"

namespace spheremax {

/// Residuals of the stationarity system and of the normal equations.
/// primal_* are entrywise max-abs residuals of the two Lagrange systems
/// (no inversion, defined even with zero multipliers); normal_* are the
/// max over coordinate slots r of ||(A^T Lambda^-1 A - M) y_r|| and
/// ||(A M^-1 A^T - Lambda) x_r||, and require nonzero multipliers.
struct ResidualReport {
  double primal_x = 0.0;
  double primal_y = 0.0;
  std::optional<double> normal_y;
  std::optional<double> normal_x;
  double trace_gap = 0.0;  // |sum(lambda) - sum(mu)|
};

/// Multipliers smaller than this in magnitude make the normal equations singular.
constexpr double kMultiplierZeroTol = 1e-12;

/// Inversion-free residuals of sum_j a_kj y_jr = lambda_k x_kr and
/// sum_j a_jk x_jr = mu_k y_kr, plus the trace gap.
ResidualReport stationarity_residual(const ProblemInstance& instance, const Assignment& a,
                                     const MultiplierPair& m);

/// ||(A^T Lambda^-1 A - M) y|| for a single n-vector slot.
double normal_residual_y(const CoefficientMatrix& matrix, const MultiplierPair& m,
                         const std::vector<double>& y);
/// ||(A M^-1 A^T - Lambda) x|| for a single n-vector slot.
double normal_residual_x(const CoefficientMatrix& matrix, const MultiplierPair& m,
                         const std::vector<double>& x);

/// Normal-equation residuals over all coordinate slots of an assignment.
/// Throws SingularMultiplierError when any multiplier is within
/// kMultiplierZeroTol of zero; use stationarity_residual in that case.
ResidualReport normal_equation_residual(const CoefficientMatrix& matrix, const MultiplierPair& m,
                                        const Assignment& a);

/// Transfer a solution slot of (A^T Lambda^-1 A - M) y = 0 to the dual system:
/// returns x proportional to Lambda^-1 A y, scaled so ||x|| = ||y||. The input
/// must satisfy the primal slot equation to 1e-8 * ||y||.
std::vector<double> duality_transfer(const CoefficientMatrix& matrix, const MultiplierPair& m,
                                     const std::vector<double>& y);

/// SVD-based upper bounds on the sphere-constrained bilinear maximum.
struct BoundReport {
  double sigma1;
  double paper_bound;    // n^2 * d * sigma_1(A)
  double derived_bound;  // n * d * sigma_1(A), the operative (tighter) bound
  std::optional<double> observed;
  std::optional<double> kron_gap;  // |sigma_1(A kron J) - d * sigma_1(A)| when cross-checked
};

/// Computes sigma_1(A) and both bound variants; optionally records a solver
/// value and cross-checks sigma_1(A kron J_d) = d * sigma_1(A) by explicit
/// Kronecker construction (only honored for n*d <= 32).
BoundReport svd_bound(const ProblemInstance& instance,
                      std::optional<double> observed = std::nullopt, bool cross_check = false);

}  // namespace spheremax
