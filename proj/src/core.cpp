#include "spheremax/core.hpp"

#include <sstream>

namespace spheremax {

namespace {

void check_shape(const ProblemInstance& instance, const Assignment& a) {
  const int n = instance.order();
  if (a.blocks() != n) {
    std::ostringstream os;
    os << "assignment has " << a.blocks() << " blocks, matrix order is " << n;
    throw std::invalid_argument(os.str());
  }
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(a.x()[k].size()) != instance.d) {
      std::ostringstream os;
      os << "x block " << k << " has dimension " << a.x()[k].size() << ", instance d is "
         << instance.d;
      throw std::invalid_argument(os.str());
    }
    if (static_cast<int>(a.y()[k].size()) != instance.d) {
      std::ostringstream os;
      os << "y block " << k << " has dimension " << a.y()[k].size() << ", instance d is "
         << instance.d;
      throw std::invalid_argument(os.str());
    }
  }
}

}  // namespace

double evaluate(const ProblemInstance& instance, const Assignment& a) {
  check_shape(instance, a);
  const int n = instance.order();
  double total = 0.0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) total += instance.matrix(k, j) * vec::dot(a.x()[k], a.y()[j]);
  return total;
}

MultiplierPair extract_multipliers(const ProblemInstance& instance, const Assignment& a) {
  check_shape(instance, a);
  const int n = instance.order();
  MultiplierPair m;
  m.lambda.assign(n, 0.0);
  m.mu.assign(n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const double dp = vec::dot(a.x()[k], a.y()[j]);
      m.lambda[k] += instance.matrix(k, j) * dp;  // row k against y
      m.mu[j] += instance.matrix(k, j) * dp;      // column j against x
    }
  return m;
}

}  // namespace spheremax
