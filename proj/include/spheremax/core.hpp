#pragma once

#include "spheremax/types.hpp"

namespace spheremax {

/// Objective B(x, y) = sum_{k,j} a_kj <x_k, y_j>, evaluated as the plain double sum.
double evaluate(const ProblemInstance& instance, const Assignment& a);

/// Multipliers at an arbitrary point (not only stationary ones):
///   lambda_k = sum_j a_kj <x_k, y_j>,   mu_k = sum_j a_jk <x_j, y_k>.
/// By construction sum(lambda) = sum(mu) = B(x, y) up to rounding.
MultiplierPair extract_multipliers(const ProblemInstance& instance, const Assignment& a);

}  // namespace spheremax
