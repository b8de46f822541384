#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/hilbert.hpp"

using namespace extremal;
using std::numbers::pi;

TEST_CASE("sharp_constants") {
  const HilbertConstants one = sharp_constants(1.0, 1.0);
  CHECK(one.lower == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(!one.upper);
  const HilbertConstants two = sharp_constants(2.0, 1.0);
  CHECK(two.lower == doctest::Approx(pi * pi / 6.0).epsilon(1e-12));
  REQUIRE(two.upper);
  CHECK(*two.upper == doctest::Approx(pi * pi / 3.0).epsilon(1e-12));
  const HilbertConstants two2 = sharp_constants(2.0, 2.0);
  CHECK(two2.lower == doctest::Approx(two.lower / 4.0).epsilon(1e-14));
  CHECK(*two2.upper == doctest::Approx(*two.upper / 4.0).epsilon(1e-14));
  // 2 eta(1/2) = 2 (1 - sqrt 2) zeta(1/2)
  CHECK(sharp_constants(0.5, 1.0).lower == doctest::Approx(2 * (1 - std::sqrt(2.0)) * -1.4603545088095868).epsilon(1e-10));
  CHECK_THROWS_AS(sharp_constants(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(sharp_constants(1.0, -1.0), DomainError);
}

TEST_CASE("form_value") {
  PointConfig two{{0.0, 1.0}, 1.0};
  const std::vector<Complex> e1{1.0, 0.0};
  CHECK(form_value(1.0, two, e1) == 0.0);
  const std::vector<Complex> minus{1.0, -1.0};
  const std::vector<Complex> plus{1.0, 1.0};
  CHECK(form_value(1.0, two, minus) == doctest::Approx(-2.0));
  CHECK(form_value(1.0, two, plus) == doctest::Approx(2.0));
  const std::vector<Complex> ci{1.0, Complex(0.0, 1.0)};
  CHECK(std::abs(form_value(1.0, two, ci)) < 1e-15);
  const std::vector<Complex> wrong{1.0};
  CHECK_THROWS_AS(form_value(1.0, two, wrong), DimensionMismatch);
}

TEST_CASE("PointConfig validation") {
  PointConfig close{{0.0, 0.5}, 1.0};
  CHECK_THROWS_AS(close.validate(), DomainError);
  PointConfig bad{{0.0, 2.0}, 0.0};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("verify_bounds on exact cases") {
  const HilbertReport r = verify_bounds(1.0, {{0.0, 1.0}, 1.0}, 20, 7);
  CHECK(r.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(r.max_eigenvalue == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.min_eigenvalue >= -std::log(4.0));
  CHECK(r.vectors_tested >= 20);

  const HilbertReport single = verify_bounds(2.0, {{3.0}, 1.0}, 5, 1);
  CHECK(single.min_eigenvalue == 0.0);

  PointConfig grid;
  for (int i = 0; i < 8; ++i) grid.xi.push_back(i);
  const HilbertReport g = verify_bounds(2.0, grid, 50, 3);
  CHECK(g.min_eigenvalue >= -pi * pi / 6.0);
  CHECK(g.max_eigenvalue <= pi * pi / 3.0);
  REQUIRE(g.upper_margin);
  CHECK(*g.upper_margin >= 0.0);
  CHECK(g.lower_margin >= 0.0);
}

TEST_CASE("verify_bounds refuses an overstated separation") {
  // With delta = 2 the bound would shrink by 2^sigma and fail; validation stops it first.
  PointConfig lie{{0.0, 1.0, 2.0, 3.0}, 2.0};
  CHECK_THROWS_AS(verify_bounds(1.0, lie, 10, 1), DomainError);
  PointConfig dense;
  for (int i = 0; i < 40; ++i) dense.xi.push_back(i);
  CHECK_NOTHROW(verify_bounds(1.0, dense, 10, 1));
  CHECK_THROWS_AS(verify_bounds(1.0, dense, 0, 1), DomainError);
}

TEST_CASE("random configurations respect the bounds") {
  for (double sigma : {0.5, 1.0, 2.0, 3.0}) {
    for (int i = 0; i < 25; ++i) {
      const PointConfig c = random_config(2 + i % 7, 0.5 + 0.5 * (i % 3), 1000 + i);
      CHECK_NOTHROW(c.validate());
      CHECK_NOTHROW(verify_bounds(sigma, c, 20, i));
    }
  }
  const PointConfig a = random_config(6, 1.0, 42);
  const PointConfig b = random_config(6, 1.0, 42);
  CHECK(a.xi == b.xi);
}

TEST_CASE("equally spaced points approach the lower constant") {
  const double e10 = equally_spaced_min_eigenvalue(1.0, 10);
  const double e80 = equally_spaced_min_eigenvalue(1.0, 80);
  CHECK(e80 < e10);
  CHECK(e80 > -std::log(4.0));
  CHECK(e80 < -0.9 * std::log(4.0));
}
