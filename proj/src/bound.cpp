#include "berge5/bound.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>
#include <stdexcept>
#include <vector>

namespace berge5 {

double bound_function(double alpha1, double alpha2) {
  return (4.0 - 2.0 * alpha1 - alpha2) / 12.0 * std::sqrt((5.0 * alpha1 + 3.0 * alpha2 + 3.0) / 6.0);
}

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;

template <typename F>
double golden_section_max(F f, double lo, double hi) {
  double x1 = hi - kGoldenRatio * (hi - lo);
  double x2 = lo + kGoldenRatio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGoldenRatio * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGoldenRatio * (hi - lo);
      f1 = f(x1);
    }
  }
  // The endpoints are candidates too: the maximum may sit on the boundary.
  double best = 0.5 * (lo + hi);
  for (double x : {lo, hi}) {
    if (f(x) > f(best)) best = x;
  }
  return best;
}

struct Cell {
  double x0, y0, size, upper;
  bool operator<(const Cell& o) const { return upper < o.upper; }
};

// B is decreasing in the numerator variables and increasing under the root,
// so corner values bound it on the cell.
double cell_upper(double x0, double y0, double size) {
  const double u = 4.0 - 2.0 * x0 - y0;
  const double w = 5.0 * (x0 + size) + 3.0 * (y0 + size) + 3.0;
  return u / 12.0 * std::sqrt(w / 6.0);
}

bool feasible(double a1, double a2) { return a1 >= 0.0 && a2 >= 0.0 && a1 + a2 <= 1.0; }

}  // namespace

BoundCurve maximize_bound(double step) {
  if (!(step > 0.0 && step <= 0.1)) throw std::invalid_argument("grid step must lie in (0, 0.1]");
  BoundCurve c;
  c.step = step;
  const auto steps = static_cast<long long>(std::floor(1.0 / step + 1e-9));

  c.grid_maximum = -1.0;
  c.half_lower_bound_holds = true;
  for (long long i = 0; i <= steps; ++i) {
    for (long long j = 0; i + j <= steps; ++j) {
      const double a1 = static_cast<double>(i) * step;
      const double a2 = static_cast<double>(j) * step;
      if ((5.0 * a1 + 3.0 * a2 + 3.0) / 6.0 < 0.5) c.half_lower_bound_holds = false;
      const double b = bound_function(a1, a2);
      ++c.grid_points;
      if (b > c.grid_maximum) {
        c.grid_maximum = b;
        c.grid_alpha1 = a1;
        c.grid_alpha2 = a2;
      }
    }
  }

  double a1 = c.grid_alpha1;
  double a2 = c.grid_alpha2;
  for (int round = 0; round < 60; ++round) {
    const double p1 = a1;
    const double p2 = a2;
    a1 = golden_section_max([&](double x) { return bound_function(x, a2); },
                            std::max(0.0, a1 - step), std::max(0.0, std::min(1.0 - a2, a1 + step)));
    a2 = golden_section_max([&](double y) { return bound_function(a1, y); },
                            std::max(0.0, a2 - step), std::max(0.0, std::min(1.0 - a1, a2 + step)));
    if (std::abs(a1 - p1) < 1e-15 && std::abs(a2 - p2) < 1e-15) break;
  }
  c.alpha1 = a1;
  c.alpha2 = a2;
  c.maximum = bound_function(a1, a2);
  if (c.grid_maximum > c.maximum) {
    c.alpha1 = c.grid_alpha1;
    c.alpha2 = c.grid_alpha2;
    c.maximum = c.grid_maximum;
  }

  std::priority_queue<Cell> queue;
  queue.push({0.0, 0.0, 1.0, cell_upper(0.0, 0.0, 1.0)});
  double best = c.maximum;
  const double target = 1e-9;
  for (;;) {
    const Cell cell = queue.top();
    if (cell.upper - best <= target) {
      c.upper_bound = std::max(cell.upper, best);
      break;
    }
    queue.pop();
    ++c.cells;
    const double h = cell.size / 2.0;
    for (int dx = 0; dx < 2; ++dx) {
      for (int dy = 0; dy < 2; ++dy) {
        const double x0 = cell.x0 + dx * h;
        const double y0 = cell.y0 + dy * h;
        if (x0 + y0 > 1.0) continue;  // disjoint from the simplex
        const double mx = std::min(x0 + h / 2.0, 1.0);
        const double my = std::min(y0 + h / 2.0, 1.0 - mx);
        for (const auto& [px, py] : {std::pair{mx, my}, std::pair{x0, y0}}) {
          if (!feasible(px, py)) continue;
          const double b = bound_function(px, py);
          if (b > best) {
            best = b;
            c.alpha1 = px;
            c.alpha2 = py;
          }
        }
        queue.push({x0, y0, h, cell_upper(x0, y0, h)});
      }
    }
  }
  c.maximum = best;
  c.error_bound = c.upper_bound - c.maximum;
  return c;
}

}  // namespace berge5
