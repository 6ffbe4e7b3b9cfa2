#pragma once

#include <cstddef>

namespace berge5 {

// B(a1, a2) = ((4 - 2 a1 - a2) / 12) * sqrt((5 a1 + 3 a2 + 3) / 6), the
// coefficient of n^{3/2} in the upper bound as a function of the
// decomposition statistics.
double bound_function(double alpha1, double alpha2);

// Maximum of B over the simplex a1, a2 >= 0, a1 + a2 <= 1.
struct BoundCurve {
  double step = 0.0;
  double alpha1 = 0.0;  // maximizer after refinement
  double alpha2 = 0.0;
  double maximum = 0.0;
  double grid_alpha1 = 0.0;  // best grid point
  double grid_alpha2 = 0.0;
  double grid_maximum = 0.0;
  std::size_t grid_points = 0;
  // Certified: B <= upper_bound everywhere on the simplex, and
  // error_bound = upper_bound - maximum.
  double upper_bound = 0.0;
  double error_bound = 0.0;
  std::size_t cells = 0;  // cells examined by the certification
  // (5 a1 + 3 a2 + 3) / 6 >= 1/2 at every grid point (checked exactly).
  bool half_lower_bound_holds = false;
};

// Grid search with the given step, coordinate-wise golden-section
// refinement, then a branch-and-bound certificate of the maximum using
// monotone cell bounds. Throws std::invalid_argument unless
// 0 < step <= 0.1.
BoundCurve maximize_bound(double step = 1e-3);

}  // namespace berge5
