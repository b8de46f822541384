#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/numerics.hpp"

using namespace extremal;
using std::numbers::pi;

TEST_CASE("integrate_interval on elementary integrands") {
  CHECK(integrate_interval([](double) { return 1.0; }, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(integrate_interval([](double x) { return std::cos(pi * x); }, -0.5, 0.5).value ==
        doctest::Approx(2.0 / pi).epsilon(1e-14));

  // erf oracle: int_{-8}^{8} e^{-pi x^2} dx = erf(8 sqrt(pi))
  const double exact = std::erf(8.0 * std::sqrt(pi));
  const auto r = integrate_interval([](double x) { return std::exp(-pi * x * x); }, -8.0, 8.0);
  CHECK(std::abs(r.value - exact) / exact < 1e-10);
  CHECK(r.abs_error_estimate < 1e-10);
}

TEST_CASE("integrate_interval honours breakpoints at kinks") {
  const std::vector<double> bp{0.3};
  const auto r = integrate_interval([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, {}, bp);
  CHECK(r.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-14));
}

TEST_CASE("integrate_interval reports a blown budget") {
  SeriesPolicy tight;
  tight.max_terms = 50;
  tight.rel_tol = 1e-15;
  tight.abs_tol = 1e-300;
  CHECK_THROWS_AS(integrate_interval([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, tight),
                  NonConvergence);
}

TEST_CASE("integrate_semiinfinite") {
  const auto e = integrate_semiinfinite([](double l) { return std::exp(-l); }, EndpointHint::power(0.0),
                                        EndpointHint::exponential());
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-11));

  // u = 1/lambda turns this into int u^{-1/2} e^{-pi u} du = Gamma(1/2) pi^{-1/2} = 1
  const auto g = integrate_semiinfinite([](double l) { return std::pow(l, -1.5) * std::exp(-pi / l); },
                                        EndpointHint::exponential(), EndpointHint::power(1.5));
  CHECK(g.value == doctest::Approx(std::tgamma(0.5) / std::sqrt(pi)).epsilon(1e-10));

  CHECK_THROWS_AS(integrate_semiinfinite([](double l) { return 1.0 / std::sqrt(l); }, EndpointHint::power(0.5),
                                         EndpointHint::power(0.5)),
                  DivergentTail);
  CHECK_THROWS_AS(integrate_semiinfinite([](double l) { return 1.0 / l; }, EndpointHint::power(1.0),
                                         EndpointHint::exponential()),
                  DivergentTail);
}

TEST_CASE("sum_symmetric") {
  CHECK(sum_symmetric([](long) { return 0.0; }) == 0.0);
  const double three_terms = 1.0 + 2.0 * std::exp(-pi) + 2.0 * std::exp(-4.0 * pi);
  CHECK(std::abs(sum_symmetric([](long n) { return std::exp(-pi * double(n) * double(n)); }) - three_terms) <
        1e-7);
  const double alt = 1.0 - 2.0 * std::exp(-pi) + 2.0 * std::exp(-4.0 * pi);
  const double s = sum_symmetric([](long n) { return (n % 2 ? -1.0 : 1.0) * std::exp(-pi * double(n) * double(n)); });
  CHECK(std::abs(s - alt) < 1e-7);
  CHECK(s == doctest::Approx(0.9135792).epsilon(1e-7));
}

TEST_CASE("SeriesPolicy validation") {
  SeriesPolicy p;
  CHECK_NOTHROW(p.validate());
  p.rel_tol = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.max_terms = 2;
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("trigonometric helpers have exact zeros") {
  for (int n = -5; n <= 5; ++n) {
    CHECK(sin_pi(n) == 0.0);
    CHECK(cos_pi(n + 0.5) == 0.0);
    CHECK(std::abs(cos_pi(n)) == 1.0);
  }
  CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(cos_pi(1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sinc_pi(0.0) == 1.0);
  CHECK(sinc_pi(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-15));
  CHECK(sinc_pi(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
}
