#include "spheremax/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

#include "spheremax/core.hpp"
#include "spheremax/rng.hpp"

namespace spheremax {

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be positive");
  if (max_iters < 1) throw std::invalid_argument("SolverConfig: max_iters must be >= 1");
  if (starts < 1) throw std::invalid_argument("SolverConfig: starts must be >= 1");
}

namespace {

// Flat n*d block storage used inside the iteration; Assignment is rebuilt at the end.
struct Blocks {
  int n, d;
  std::vector<double> x, y;

  explicit Blocks(const Assignment& a)
      : n(a.blocks()), d(a.dim()), x(static_cast<size_t>(n) * d), y(x.size()) {
    for (int k = 0; k < n; ++k)
      for (int r = 0; r < d; ++r) {
        x[static_cast<size_t>(k) * d + r] = a.x()[k][r];
        y[static_cast<size_t>(k) * d + r] = a.y()[k][r];
      }
  }

  Assignment to_assignment() const {
    std::vector<std::vector<double>> xs(static_cast<size_t>(n)), ys(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      xs[k].assign(x.begin() + static_cast<size_t>(k) * d, x.begin() + static_cast<size_t>(k + 1) * d);
      ys[k].assign(y.begin() + static_cast<size_t>(k) * d, y.begin() + static_cast<size_t>(k + 1) * d);
    }
    return Assignment(std::move(xs), std::move(ys));
  }
};

double objective(const CoefficientMatrix& a, const Blocks& b) {
  double total = 0.0;
  for (int k = 0; k < b.n; ++k)
    for (int j = 0; j < b.n; ++j) {
      const double akj = a(k, j);
      if (akj == 0.0) continue;
      double dp = 0.0;
      for (int r = 0; r < b.d; ++r)
        dp += b.x[static_cast<size_t>(k) * b.d + r] * b.y[static_cast<size_t>(j) * b.d + r];
      total += akj * dp;
    }
  return total;
}

// y_j <- normalize(sum_k a_kj x_k); zero combinations retain the previous block.
void update_y(const CoefficientMatrix& a, Blocks& b, std::vector<double>& scratch) {
  for (int j = 0; j < b.n; ++j) {
    double norm2 = 0.0;
    for (int r = 0; r < b.d; ++r) {
      double s = 0.0;
      for (int k = 0; k < b.n; ++k) s += a(k, j) * b.x[static_cast<size_t>(k) * b.d + r];
      scratch[r] = s;
      norm2 += s * s;
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (int r = 0; r < b.d; ++r) b.y[static_cast<size_t>(j) * b.d + r] = scratch[r] * inv;
    }
  }
}

void update_x(const CoefficientMatrix& a, Blocks& b, std::vector<double>& scratch) {
  for (int k = 0; k < b.n; ++k) {
    double norm2 = 0.0;
    for (int r = 0; r < b.d; ++r) {
      double s = 0.0;
      for (int j = 0; j < b.n; ++j) s += a(k, j) * b.y[static_cast<size_t>(j) * b.d + r];
      scratch[r] = s;
      norm2 += s * s;
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (int r = 0; r < b.d; ++r) b.x[static_cast<size_t>(k) * b.d + r] = scratch[r] * inv;
    }
  }
}

// max over blocks of |sum_j a_kj y_j - lambda_k x_k| and |sum_j a_jk x_j - mu_k y_k|
// (Euclidean block norms) with the multipliers extracted at the current point.
double primal_residual(const CoefficientMatrix& a, const Blocks& b) {
  double worst = 0.0;
  std::vector<double> comb(static_cast<size_t>(b.d));
  for (int k = 0; k < b.n; ++k) {
    double lambda = 0.0;
    for (int r = 0; r < b.d; ++r) {
      double s = 0.0;
      for (int j = 0; j < b.n; ++j) s += a(k, j) * b.y[static_cast<size_t>(j) * b.d + r];
      comb[r] = s;
      lambda += s * b.x[static_cast<size_t>(k) * b.d + r];
    }
    double res2 = 0.0;
    for (int r = 0; r < b.d; ++r) {
      const double e = comb[r] - lambda * b.x[static_cast<size_t>(k) * b.d + r];
      res2 += e * e;
    }
    worst = std::max(worst, std::sqrt(res2));
  }
  for (int k = 0; k < b.n; ++k) {
    double mu = 0.0;
    for (int r = 0; r < b.d; ++r) {
      double s = 0.0;
      for (int j = 0; j < b.n; ++j) s += a(j, k) * b.x[static_cast<size_t>(j) * b.d + r];
      comb[r] = s;
      mu += s * b.y[static_cast<size_t>(k) * b.d + r];
    }
    double res2 = 0.0;
    for (int r = 0; r < b.d; ++r) {
      const double e = comb[r] - mu * b.y[static_cast<size_t>(k) * b.d + r];
      res2 += e * e;
    }
    worst = std::max(worst, std::sqrt(res2));
  }
  return worst;
}

std::vector<double> random_sphere_block(std::uint64_t seed, std::uint64_t start_index,
                                        std::uint64_t block_index, int d) {
  CounterRng rng(seed, start_index, block_index);
  std::vector<double> v(static_cast<size_t>(d));
  while (true) {
    double norm2 = 0.0;
    for (int r = 0; r < d; ++r) {
      v[r] = rng.next_gaussian();
      norm2 += v[r] * v[r];
    }
    if (norm2 > 1e-24) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& c : v) c *= inv;
      return v;
    }
  }
}

}  // namespace

SolveReport alternating_ascent(const ProblemInstance& instance, const Assignment& start,
                               const SolverConfig& config, const HalfStepObserver& observer) {
  config.validate();
  if (start.blocks() != instance.order() || start.dim() != instance.d)
    throw std::invalid_argument("alternating_ascent: start shape does not match instance");

  const CoefficientMatrix& a = instance.matrix;
  Blocks b(start);
  std::vector<double> scratch(static_cast<size_t>(b.d));

  const double polish_target = 1e-11 * std::max(1.0, a.abs_sum());
  double f_prev = objective(a, b);
  bool converged = false;
  int iterations = 0;
  bool polishing = false;
  double best_residual = 0.0;
  int stagnant = 0;

  while (iterations < config.max_iters) {
    update_y(a, b, scratch);
    if (observer) observer(objective(a, b));
    update_x(a, b, scratch);
    const double f = objective(a, b);
    if (observer) observer(f);
    ++iterations;

    if (f - f_prev < config.tol) {
      const double r = primal_residual(a, b);
      if (r <= polish_target) {
        converged = true;
        break;
      }
      if (!polishing) {
        polishing = true;
        best_residual = r;
        stagnant = 0;
      } else if (r < 0.999 * best_residual) {
        best_residual = r;
        stagnant = 0;
      } else if (++stagnant >= 100) {
        converged = true;  // residual settled; the iterate stopped moving
        break;
      }
    } else {
      polishing = false;
    }
    f_prev = f;
  }

  SolveReport report{0.0,   b.to_assignment(), MultiplierPair{}, 0.0, iterations,
                     converged, 1};
  report.value = evaluate(instance, report.assignment);
  report.multipliers = extract_multipliers(instance, report.assignment);
  report.stationarity_residual = primal_residual(a, b);
  return report;
}

SolveReport multistart(const ProblemInstance& instance, const SolverConfig& config) {
  config.validate();
  const int n = instance.order();
  const int d = instance.d;

  SolveReport best = alternating_ascent(instance, Assignment::all_e1(n, d), config);
  for (int s = 1; s < config.starts; ++s) {
    std::vector<std::vector<double>> xs(static_cast<size_t>(n)), ys(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      xs[k] = random_sphere_block(config.seed, static_cast<std::uint64_t>(s), k, d);
      ys[k] = random_sphere_block(config.seed, static_cast<std::uint64_t>(s), n + k, d);
    }
    SolveReport report =
        alternating_ascent(instance, Assignment(std::move(xs), std::move(ys)), config);
    if (report.value > best.value + 1e-12) best = std::move(report);
  }
  best.starts_used = config.starts;
  return best;
}

SignOptimum sign_enumeration(const CoefficientMatrix& matrix) {
  const int n = matrix.order();
  if (n > 24) {
    std::ostringstream os;
    os << "sign_enumeration: n = " << n << " exceeds the enumeration budget (n <= 24)";
    throw BudgetError(os.str());
  }

  std::vector<int> x(static_cast<size_t>(n), 1);
  std::vector<double> col(static_cast<size_t>(n), 0.0);  // col[j] = sum_k a_kj x_k
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) col[j] += matrix(k, j);

  auto score = [&]() {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += std::fabs(col[j]);
    return s;
  };

  double best = score();
  std::vector<int> best_x = x;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int flip = std::countr_zero(i);  // Gray code: one sign flips per step
    x[flip] = -x[flip];
    const double twice = 2.0 * x[flip];
    for (int j = 0; j < n; ++j) col[j] += twice * matrix(flip, j);
    const double s = score();
    if (s > best) {
      best = s;
      best_x = x;
    }
  }

  // Recover the optimal y as the coordinatewise signs of the column combination.
  std::vector<double> bc(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) bc[j] += matrix(k, j) * best_x[k];
  std::vector<int> best_y(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) best_y[j] = bc[j] < 0.0 ? -1 : 1;
  return {best, std::move(best_x), std::move(best_y)};
}

namespace {

struct GridBest {
  double value = -1.0;
  std::int64_t index = -1;

  void offer(double v, std::int64_t idx) {
    if (v > value || (v == value && idx < index)) {
      value = v;
      index = idx;
    }
  }
  void merge(const GridBest& other) { offer(other.value, other.index); }
};

// d=2 kernels: u[t] = (cos, sin) of the t-th grid angle; exact inner maximization
// per point. Points are indexed lexicographically so the parallel merge matches
// sequential order.
GridBest grid_scan_2d(const CoefficientMatrix& a, const std::vector<double>& ux,
                      const std::vector<double>& uy, std::int64_t i0_begin,
                      std::int64_t i0_end) {
  const int n = a.order();
  const std::int64_t m = static_cast<std::int64_t>(ux.size());
  GridBest best;
  if (n == 1) {
    const double v = std::fabs(a(0, 0));
    for (std::int64_t i0 = i0_begin; i0 < i0_end; ++i0) best.offer(v, i0);
    return best;
  }
  if (n == 2) {
    for (std::int64_t i0 = i0_begin; i0 < i0_end; ++i0) {
      const double p0x = a(0, 0) * ux[i0], p0y = a(0, 0) * uy[i0];
      const double p1x = a(0, 1) * ux[i0], p1y = a(0, 1) * uy[i0];
      for (std::int64_t i1 = 0; i1 < m; ++i1) {
        const double v0x = p0x + a(1, 0) * ux[i1], v0y = p0y + a(1, 0) * uy[i1];
        const double v1x = p1x + a(1, 1) * ux[i1], v1y = p1y + a(1, 1) * uy[i1];
        const double s = std::sqrt(v0x * v0x + v0y * v0y) + std::sqrt(v1x * v1x + v1y * v1y);
        best.offer(s, i0 * m + i1);
      }
    }
    return best;
  }
  // n == 3
  for (std::int64_t i0 = i0_begin; i0 < i0_end; ++i0) {
    const double q0x = a(0, 0) * ux[i0], q0y = a(0, 0) * uy[i0];
    const double q1x = a(0, 1) * ux[i0], q1y = a(0, 1) * uy[i0];
    const double q2x = a(0, 2) * ux[i0], q2y = a(0, 2) * uy[i0];
    for (std::int64_t i1 = 0; i1 < m; ++i1) {
      const double p0x = q0x + a(1, 0) * ux[i1], p0y = q0y + a(1, 0) * uy[i1];
      const double p1x = q1x + a(1, 1) * ux[i1], p1y = q1y + a(1, 1) * uy[i1];
      const double p2x = q2x + a(1, 2) * ux[i1], p2y = q2y + a(1, 2) * uy[i1];
      const std::int64_t base = (i0 * m + i1) * m;
      for (std::int64_t i2 = 0; i2 < m; ++i2) {
        const double v0x = p0x + a(2, 0) * ux[i2], v0y = p0y + a(2, 0) * uy[i2];
        const double v1x = p1x + a(2, 1) * ux[i2], v1y = p1y + a(2, 1) * uy[i2];
        const double v2x = p2x + a(2, 2) * ux[i2], v2y = p2y + a(2, 2) * uy[i2];
        const double s = std::sqrt(v0x * v0x + v0y * v0y) + std::sqrt(v1x * v1x + v1y * v1y) +
                         std::sqrt(v2x * v2x + v2y * v2y);
        best.offer(s, base + i2);
      }
    }
  }
  return best;
}

}  // namespace

OracleResult grid_oracle(const ProblemInstance& instance, double resolution) {
  const int n = instance.order();
  const int d = instance.d;
  if (n > 3 || d > 2) {
    std::ostringstream os;
    os << "grid_oracle: instance (n = " << n << ", d = " << d
       << ") exceeds the oracle budget (n <= 3, d <= 2)";
    throw BudgetError(os.str());
  }
  if (!(resolution > 0.0)) throw std::invalid_argument("grid_oracle: resolution must be positive");

  const CoefficientMatrix& a = instance.matrix;
  const double error_bound = a.abs_sum() * resolution;

  if (d == 1) {
    const SignOptimum s = sign_enumeration(a);
    return {s.value, static_cast<std::int64_t>(1) << n, resolution, error_bound};
  }

  const std::int64_t m = static_cast<std::int64_t>(std::ceil(2.0 * M_PI / resolution));
  if (m > 20'000'000 || std::pow(static_cast<double>(m), n) > 2e10) {
    std::ostringstream os;
    os << "grid_oracle: resolution " << resolution << " yields " << m
       << " angles per block, over the enumeration budget";
    throw BudgetError(os.str());
  }
  std::vector<double> ux(static_cast<size_t>(m)), uy(static_cast<size_t>(m));
  for (std::int64_t t = 0; t < m; ++t) {
    ux[t] = std::cos(static_cast<double>(t) * resolution);
    uy[t] = std::sin(static_cast<double>(t) * resolution);
  }

  std::int64_t grid_points = 1;
  for (int k = 0; k < n; ++k) grid_points *= m;

  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
  GridBest best;
  if (workers <= 1 || n == 1) {
    best = grid_scan_2d(a, ux, uy, 0, m);
  } else {
    const std::int64_t chunk = (m + workers - 1) / workers;
    std::vector<std::future<GridBest>> parts;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
      const std::int64_t hi = std::min(m, lo + chunk);
      if (lo >= hi) break;
      parts.push_back(std::async(std::launch::async,
                                 [&, lo, hi] { return grid_scan_2d(a, ux, uy, lo, hi); }));
    }
    for (auto& p : parts) best.merge(p.get());
  }

  return {best.value, grid_points, resolution, error_bound};
}

}  // namespace spheremax
