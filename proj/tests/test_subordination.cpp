#include <cmath>
#include <numbers>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/numerics.hpp"
#include "extremal/special_fn.hpp"
#include "extremal/subordination.hpp"

using namespace extremal;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// int G_lambda(x) d nu(lambda), computed straight from the measure.
double mixture(const SubordinationMeasure& m, double x) {
  double s = 0.0;
  for (const Atom& a : m.atoms) s += a.weight * std::exp(-pi * a.lambda * x * x);
  if (m.density) {
    s += integrate_semiinfinite([&](double l) { return m.density(l) * std::exp(-pi * l * x * x); }, m.zero_hint,
                                EndpointHint::exponential())
             .value;
  }
  return s;
}

}  // namespace

TEST_CASE("measure_for reproduces finite-mass targets") {
  const SubordinationMeasure pk = measure_for(catalog::PoissonKernel{1.0});
  const double mass = integrate_semiinfinite(pk.density, pk.zero_hint, pk.inf_hint).value;
  CHECK(rel(mass, 2.0) < 1e-10);

  const SubordinationMeasure ed = measure_for(catalog::ExpDecay{1.0});
  CHECK(rel(integrate_semiinfinite(ed.density, ed.zero_hint, ed.inf_hint).value, 1.0) < 1e-10);
  for (double x : {0.3, 1.0, 2.0}) {
    CHECK(std::abs(mixture(ed, x) - std::exp(-x)) < 1e-8);
    CHECK(std::abs(mixture(pk, x) - 2.0 / (1.0 + 4 * pi * pi * x * x)) < 1e-8);
  }

  const SubordinationMeasure ga = measure_for(catalog::GaussianAtom{2.5});
  REQUIRE(ga.atoms.size() == 1);
  CHECK(ga.atoms[0].lambda == 2.5);
  CHECK(ga.atoms[0].weight == 1.0);
  CHECK(!ga.density);

  const SubordinationMeasure ps = measure_for(catalog::PowerSigma{1.0});
  CHECK(ps.density(4.0) == doctest::Approx(std::pow(4.0, -1.5)));
}

TEST_CASE("g_eval") {
  CHECK(g_eval(catalog::ExpDecay{1.0}, 0.0) == 1.0);
  CHECK(g_eval(catalog::LogRatio{1.0, 2.0}, 0.0) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(g_eval(catalog::PowerSigma{1.0}, 2.0) == doctest::Approx(-4.0 * pi).epsilon(1e-13));
  CHECK(g_eval(catalog::NegLogSq{2.0}, 0.0) == doctest::Approx(-std::log(4.0)));
  CHECK(g_eval(catalog::PowerLog{1}, 2.0) == doctest::Approx(4.0 * std::log(4.0)));
  CHECK_THROWS_AS(g_eval(catalog::NegLogSq{0.0}, 0.0), DomainError);
}

TEST_CASE("catalog validation") {
  CHECK_THROWS_AS(validate(catalog::PowerSigma{2.0}), PoleError);
  CHECK_THROWS_AS(validate(catalog::PowerSigma{0.0}), PoleError);
  CHECK_THROWS_AS(validate(catalog::PowerSigma{-1.5}), DomainError);
  CHECK_THROWS_AS(validate(catalog::LogRatio{2.0, 1.0}), DomainError);
  CHECK_THROWS_AS(validate(catalog::ExpDecay{0.0}), DomainError);
  CHECK_THROWS_AS(validate(catalog::PowerLog{0}), DomainError);
  CHECK_NOTHROW(validate(catalog::PowerSigma{-0.5}));
}

TEST_CASE("admissibility_check") {
  for (auto k : {ExtremalKind::BestApprox, ExtremalKind::Minorant, ExtremalKind::Majorant}) {
    CHECK(admissibility_check(measure_for(catalog::PowerSigma{0.5}), k));
    CHECK(admissibility_check(measure_for(catalog::PoissonKernel{1.0}), k));
  }
  CHECK_FALSE(admissibility_check(measure_for(catalog::PowerSigma{-0.5}), ExtremalKind::Majorant));
  CHECK(admissibility_check(measure_for(catalog::PowerSigma{-0.5}), ExtremalKind::Minorant));
  CHECK_THROWS_AS(subordinated_defect(catalog::PowerSigma{-0.5}, ExtremalKind::Majorant), InadmissibleMeasure);
}

TEST_CASE("subordinated extremals interpolate and stay one-sided") {
  const catalog::ExpDecay ed{1.0};
  for (int n = -3; n <= 3; ++n) {
    const double x = n + 0.5;
    CHECK(std::abs(subordinated_extremal(ed, ExtremalKind::Minorant, x) - std::exp(-std::abs(x))) < 1e-8);
  }
  const catalog::PoissonKernel pk{1.0};
  for (int n = -3; n <= 3; ++n) {
    CHECK(std::abs(subordinated_extremal(pk, ExtremalKind::Majorant, n) - g_eval(pk, n)) < 1e-8);
  }
  const catalog::PowerSigma ps{1.0};
  for (double x = -5.0; x <= 5.0; x += 0.37) {
    CHECK(subordinated_extremal(ps, ExtremalKind::Minorant, x) <= -2 * pi * std::abs(x) + 1e-9);
  }
  for (double x : {0.2, 0.9, 2.3}) {
    CHECK(subordinated_extremal(ed, ExtremalKind::Majorant, x) >= std::exp(-x) - 1e-9);
    CHECK(subordinated_extremal(ed, ExtremalKind::Minorant, x) <= std::exp(-x) + 1e-9);
  }
}

TEST_CASE("subordinated defects match closed forms") {
  const double e = std::numbers::e;
  struct Case {
    CatalogFunction f;
    ExtremalKind k;
    double expect;
  };
  const double zeta3 = 1.2020569031595942;
  const Case cases[] = {
      {catalog::ExpDecay{1.0}, ExtremalKind::Minorant, 2.0 - 1.0 / std::sinh(0.5)},
      {catalog::ExpDecay{1.0}, ExtremalKind::Majorant, 1.0 / std::tanh(0.5) - 2.0},
      {catalog::ExpDecay{1.0}, ExtremalKind::BestApprox, 2.0 - 2.0 / std::cosh(0.5)},
      {catalog::PoissonKernel{1.0}, ExtremalKind::Minorant, 2.0 / (e + 1.0)},
      {catalog::PoissonKernel{1.0}, ExtremalKind::Majorant, 2.0 / (e - 1.0)},
      {catalog::PoissonKernel{1.0}, ExtremalKind::BestApprox, (4.0 / pi) * std::atan(std::exp(-0.5))},
      {catalog::PowerSigma{1.0}, ExtremalKind::Minorant, pi / 6.0},
      {catalog::PowerLog{1}, ExtremalKind::Minorant, 3.0 * zeta3 / (4.0 * pi * pi)},
      {catalog::PowerLog{1}, ExtremalKind::Majorant, 2.0 * 2.0 * zeta3 / (4.0 * pi * pi)},
      {catalog::LogRatio{0.5, 2.0}, ExtremalKind::Minorant,
       2.0 * std::log((1.0 + std::exp(-pi)) / (1.0 + std::exp(-4.0 * pi)))},
      {catalog::LogRatio{0.5, 2.0}, ExtremalKind::Majorant,
       2.0 * std::log((1.0 - std::exp(-4.0 * pi)) / (1.0 - std::exp(-pi)))},
      {catalog::NegLogSq{0.5}, ExtremalKind::Minorant, 2.0 * std::log1p(std::exp(-pi))},
      {catalog::NegLogSq{0.5}, ExtremalKind::Majorant, -2.0 * std::log1p(-std::exp(-pi))},
  };
  for (const Case& c : cases) {
    CAPTURE(describe(c.f));
    CAPTURE(to_string(c.k));
    const DefectReport r = subordinated_defect(c.f, c.k);
    CHECK(rel(r.quadrature, c.expect) < 1e-6);
    REQUIRE(r.closed_form.has_value());
    CHECK(rel(*r.closed_form, c.expect) < 1e-10);
    CHECK(!r.formula.empty());
  }
  CHECK(subordinated_defect(catalog::ExpDecay{1.0}, ExtremalKind::Minorant).quadrature ==
        doctest::Approx(0.080965).epsilon(1e-5));
}

TEST_CASE("power sigma constants") {
  for (double sigma : {0.5, 1.5}) {
    const double g = gamma_factor(1 + sigma);
    const double z = zeta(1 + sigma);
    const double mn = subordinated_defect(catalog::PowerSigma{sigma}, ExtremalKind::Minorant).quadrature;
    CHECK(rel(mn, (2.0 - std::pow(2.0, 1.0 - sigma)) * g * z) < 1e-6);
    const double ba = subordinated_defect(catalog::PowerSigma{sigma}, ExtremalKind::BestApprox).quadrature;
    const double ba_form = std::pow(4.0 / pi, (3.0 + sigma) / 2.0) * std::tgamma((1.0 + sigma) / 2.0) *
                           dirichlet_L_chi4(2.0 + sigma);
    CHECK(rel(ba, ba_form) < 1e-6);
  }
  const double mj = subordinated_defect(catalog::PowerSigma{1.5}, ExtremalKind::Majorant).quadrature;
  CHECK(rel(mj, 2.0 * gamma_factor(2.5) * zeta(2.5)) < 1e-6);
}

TEST_CASE("Gaussian atom reduces to the single-parameter defects") {
  const DefectReport r = subordinated_defect(catalog::GaussianAtom{1.0}, ExtremalKind::Minorant);
  CHECK(r.quadrature == doctest::Approx(0.0864208618438832).epsilon(1e-12));
  REQUIRE(r.reference_form.has_value());
  CHECK(*r.reference_form == doctest::Approx(-r.quadrature));
}
