#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spheremax/types.hpp"

namespace spheremax {

struct SolverConfig {
  double tol = 1e-12;      // stop when a full sweep improves the objective by less than this
  int max_iters = 10000;   // sweep cap, polishing included
  int starts = 64;         // multistart count (start 0 is the deterministic all-e1 start)
  std::uint64_t seed = 0;  // seeds the counter-based start generator

  void validate() const;
};

/// Called with the objective value after each half-step (y-update, then x-update).
using HalfStepObserver = std::function<void(double)>;

/// Blockwise alternating maximization: y_j <- normalize(sum_k a_kj x_k), then
/// x_k <- normalize(sum_j a_kj y_j). Each half-step is the exact blockwise
/// maximizer given the other side, so the objective never decreases. A zero
/// combination leaves the block unchanged.
///
/// Iteration stops on the objective-improvement criterion (improvement < tol);
/// after the objective stalls, sweeps continue until the stationarity residual
/// settles, since the iterates keep contracting well past the point where the
/// objective can resolve progress. converged=false only when max_iters is hit.
SolveReport alternating_ascent(const ProblemInstance& instance, const Assignment& start,
                               const SolverConfig& config,
                               const HalfStepObserver& observer = nullptr);

/// Best alternating_ascent result over `starts` starting points: start 0 is
/// all blocks e1, the rest draw every block uniformly on the sphere from the
/// stream keyed by (seed, start_index, block_index); x-blocks use block
/// indices 0..n-1, y-blocks n..2n-1. Ties within 1e-12 keep the lowest start.
SolveReport multistart(const ProblemInstance& instance, const SolverConfig& config);

struct SignOptimum {
  double value;
  std::vector<int> x_signs;  // entries +1/-1
  std::vector<int> y_signs;
};

/// Exact d=1 optimum max over x, y in {-1,+1}^n of x^T A y, as
/// max_x sum_j |sum_k a_kj x_k| (the inner maximum over y is a coordinatewise
/// sign choice). Enumeration over x uses a Gray code; n <= 24.
SignOptimum sign_enumeration(const CoefficientMatrix& matrix);

struct OracleResult {
  double value;
  std::int64_t grid_points;
  double resolution;   // angular step in radians
  double error_bound;  // sum_{k,j} |a_kj| * resolution
};

/// Brute-force certified maximum for tiny instances (n <= 3, d <= 2): x-blocks
/// range over an angular grid with the given step (d=1 degenerates to the
/// exact sign enumeration); each grid point is scored with the exact inner
/// maximization sum_j |sum_k a_kj x_k|.
OracleResult grid_oracle(const ProblemInstance& instance, double resolution);

}  // namespace spheremax
