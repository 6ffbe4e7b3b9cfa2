#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "berge5/bound.hpp"

using namespace berge5;

TEST_SUITE("bound") {
  TEST_CASE("bound function at corners") {
    CHECK(bound_function(0.0, 2.0 / 3.0) == doctest::Approx(10.0 / 36.0 * std::sqrt(5.0 / 6.0)));
    CHECK(bound_function(0.0, 0.0) == doctest::Approx(std::sqrt(2.0) / 6.0));
    CHECK(bound_function(1.0, 0.0) == doctest::Approx(1.0 / (3.0 * std::sqrt(3.0))));
    CHECK(bound_function(0.0, 1.0) == doctest::Approx(0.25));
  }

  TEST_CASE("maximum on the simplex") {
    const BoundCurve c = maximize_bound();
    CHECK(std::abs(c.alpha1) < 1e-4);
    CHECK(std::abs(c.alpha2 - 2.0 / 3.0) < 1e-4);
    const double exact = bound_function(0.0, 2.0 / 3.0);
    CHECK(std::abs(c.maximum - exact) < 1e-9);
    CHECK(c.upper_bound >= exact);
    CHECK(c.error_bound <= 1e-6);
    CHECK(c.grid_maximum <= c.maximum);
    CHECK(c.grid_points > 0);
    CHECK(c.half_lower_bound_holds);
  }

  TEST_CASE("stationary point on the edge alpha1 = 0") {
    // d/da B(0, a) = 0 reduces to 9a^2 - 42a + 24 = 0 once squared and the
    // root in [0, 1] is 2/3.
    const double disc = std::sqrt(42.0 * 42.0 - 4.0 * 9.0 * 24.0);
    const double r1 = (42.0 - disc) / 18.0;
    const double r2 = (42.0 + disc) / 18.0;
    CHECK(r1 == doctest::Approx(2.0 / 3.0));
    CHECK(r2 > 1.0);
    const double h = 1e-6;
    CHECK(std::abs(bound_function(0.0, r1 + h) - bound_function(0.0, r1 - h)) / (2 * h) < 1e-6);
  }

  TEST_CASE("coarse grid reaches the same maximizer") {
    const BoundCurve c = maximize_bound(0.1);
    CHECK(std::abs(c.alpha1) < 1e-4);
    CHECK(std::abs(c.alpha2 - 2.0 / 3.0) < 1e-4);
    CHECK(c.grid_alpha1 == doctest::Approx(0.0));
    CHECK(c.grid_alpha2 == doctest::Approx(0.7));
  }

  TEST_CASE("invalid steps") {
    CHECK_THROWS_AS(maximize_bound(0.0), std::invalid_argument);
    CHECK_THROWS_AS(maximize_bound(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(maximize_bound(0.5), std::invalid_argument);
  }
}
