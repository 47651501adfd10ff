#include "spheremax/rng.hpp"

#include <cmath>

namespace spheremax {

double CounterRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u0 = next_unit();
  const double u1 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u0));  // 1 - u0 in (0, 1]
  const double angle = 2.0 * M_PI * u1;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

}  // namespace spheremax
