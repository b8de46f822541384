// One PASS/FAIL line per acceptance criterion. Each criterion runs its
// verification suite and, where a value is pinned, an inline oracle that does
// not go through the library's own series code.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/gaussian_extremal.hpp"
#include "extremal/special_fn.hpp"
#include "extremal/subordination.hpp"
#include "extremal/suites.hpp"
#include "extremal/theta.hpp"
#include "extremal/trig_extremal.hpp"

using namespace extremal;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      details.push_back(what);
    }
  }
  void near_rel(double got, double want, double tol, const std::string& what) {
    const double e = std::abs(got - want) / std::abs(want);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: got %.17g want %.17g rel err %.3g > %.1g", what.c_str(), got, want, e, tol);
    expect(e < tol, buf);
  }
  void near_abs(double got, double want, double tol, const std::string& what) {
    const double e = std::abs(got - want);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: got %.17g want %.17g abs err %.3g > %.1g", what.c_str(), got, want, e, tol);
    expect(e < tol, buf);
  }
  void suite(const std::string& name) {
    const SuiteResult r = run_suite(name);
    for (const Check& c : r.checks) {
      if (!c.passed) {
        char buf[512];
        std::snprintf(buf, sizeof buf, "%s: measured %.17g reference %.17g error %.3g > %.1g%s%s", c.name.c_str(),
                      c.measured, c.reference, c.error, c.tolerance, c.note.empty() ? "" : "; ", c.note.c_str());
        expect(false, buf);
      }
    }
  }
};

double gaussian_terms(int terms, bool alternate) {
  double s = 1.0;
  for (int n = 1; n <= terms; ++n) s += 2.0 * (alternate && n % 2 ? -1.0 : 1.0) * std::exp(-pi * n * n);
  return s;
}

Outcome criterion1() {
  Outcome o;
  o.suite("theta-transform");
  o.near_abs(theta(ThetaKind::Theta3, {0.0, 1.0}), gaussian_terms(3, false), 1e-12, "Theta3(0, i)");
  o.near_abs(theta(ThetaKind::Theta2, {0.0, 1.0}), gaussian_terms(3, true), 1e-12, "Theta2(0, i)");
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.suite("interpolation");
  o.near_abs(eval_extremal({ExtremalKind::Minorant, 1.0, 1.0}, 0.5), std::exp(-pi / 4), 1e-10, "L_1(1/2)");
  o.near_abs(eval_extremal({ExtremalKind::Majorant, 4.0, 1.0}, 1.0), std::exp(-4 * pi), 1e-10, "M_4(1)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.suite("one-sided");
  return o;
}

Outcome criterion4() {
  Outcome o;
  o.suite("defects");
  const double q = std::exp(-pi);
  const double mn = 2 * q - 2 * std::pow(q, 4) + 2 * std::pow(q, 9);
  const double mj = 2 * q + 2 * std::pow(q, 4) + 2 * std::pow(q, 9);
  const double ba = (2.0 / pi) * (2.0 * std::exp(-pi / 4) - (2.0 / 3.0) * std::exp(-9 * pi / 4) +
                                  (2.0 / 5.0) * std::exp(-25 * pi / 4));
  o.near_rel(defect_integral({ExtremalKind::Minorant, 1.0, 1.0}), mn, 1e-8, "minorant defect lambda=1");
  o.near_rel(defect_integral({ExtremalKind::Majorant, 1.0, 1.0}), mj, 1e-8, "majorant defect lambda=1");
  o.near_rel(defect_integral({ExtremalKind::BestApprox, 1.0, 1.0}), ba, 1e-8, "best-approx defect lambda=1");
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.suite("fourier");
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.suite("trig");
  o.near_abs(build_trig(ExtremalKind::Minorant, 1.0, 1).coeffs[0], 1 - 2 * std::exp(-4 * pi) + 2 * std::exp(-16 * pi),
             1e-12, "l_{1,1} mean");
  o.near_abs(build_trig(ExtremalKind::Majorant, 1.0, 1).coeffs[0], 1 + 2 * std::exp(-4 * pi) + 2 * std::exp(-16 * pi),
             1e-12, "m_{1,1} mean");
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.suite("table1");
  const double e = std::numbers::e;
  o.near_rel(subordinated_defect(catalog::ExpDecay{1.0}, ExtremalKind::Minorant).quadrature,
             2.0 - 1.0 / std::sinh(0.5), 1e-6, "e^{-|x|} minorant");
  o.near_rel(subordinated_defect(catalog::ExpDecay{1.0}, ExtremalKind::Majorant).quadrature,
             std::cosh(0.5) / std::sinh(0.5) - 2.0, 1e-6, "e^{-|x|} majorant");
  o.near_rel(subordinated_defect(catalog::ExpDecay{1.0}, ExtremalKind::BestApprox).quadrature,
             2.0 - 2.0 / std::cosh(0.5), 1e-6, "e^{-|x|} best approximation");
  o.near_rel(subordinated_defect(catalog::PoissonKernel{1.0}, ExtremalKind::Minorant).quadrature, 2.0 / (e + 1.0),
             1e-6, "Poisson minorant");
  o.near_rel(subordinated_defect(catalog::PoissonKernel{1.0}, ExtremalKind::Majorant).quadrature, 2.0 / (e - 1.0),
             1e-6, "Poisson majorant");
  o.near_rel(subordinated_defect(catalog::PoissonKernel{1.0}, ExtremalKind::BestApprox).quadrature,
             (4.0 / pi) * std::atan(std::exp(-0.5)), 1e-6, "Poisson best approximation");
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.suite("power-sigma");
  o.near_rel(subordinated_defect(catalog::PowerSigma{1.0}, ExtremalKind::Minorant).quadrature, pi / 6, 1e-6,
             "|x| minorant");
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.suite("power-log");
  const double z3 = 1.2020569031595942854;
  o.near_rel(subordinated_defect(catalog::PowerLog{1}, ExtremalKind::Minorant).quadrature, 3 * z3 / (4 * pi * pi),
             1e-6, "x^2 log x^2 minorant");
  return o;
}

Outcome criterion10() {
  Outcome o;
  o.suite("log-ratio");
  return o;
}

Outcome criterion11() {
  Outcome o;
  o.suite("hilbert");
  return o;
}

Outcome criterion12() {
  Outcome o;
  o.suite("special");
  o.near_rel(zeta(2.0), pi * pi / 6, 1e-10, "zeta(2)");
  o.near_rel(zeta(4.0), std::pow(pi, 4) / 90, 1e-10, "zeta(4)");
  o.near_rel(dirichlet_L_chi4(1.0), pi / 4, 1e-10, "L(1, chi_4)");
  o.near_rel(dirichlet_L_chi4(3.0), std::pow(pi, 3) / 32, 1e-10, "L(3, chi_4)");
  for (double s : {0.0, -2.0}) {
    bool pole = false;
    try {
      gamma_factor(s);
    } catch (const PoleError&) {
      pole = true;
    }
    o.expect(pole, "gamma(" + std::to_string(s) + ") did not raise PoleError");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"theta transformation, periodicity and shift identities", criterion1},
      {"interpolation of values and derivatives at the node sets", criterion2},
      {"one-sidedness of L, M and the sign pattern of G - K", criterion3},
      {"sharp defects by quadrature vs theta closed forms", criterion4},
      {"Fourier transforms of K, L, M and their supports", criterion5},
      {"extremal trigonometric polynomials for Theta3", criterion6},
      {"defects for e^{-|x|} and the Poisson kernel", criterion7},
      {"defects for gamma(-sigma)|x|^sigma", criterion8},
      {"defects for x^2 log x^2", criterion9},
      {"defects for the log-ratio, alpha=0.5 beta=2", criterion10},
      {"Hilbert-type bounds on random separated configurations", criterion11},
      {"special function values and gamma poles", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first);
    for (const std::string& d : o.details) std::printf("    %s\n", d.c_str());
    failed += !o.passed;
  }

  // The log-ratio majorant defect with alpha and beta exchanged inside the
  // logarithm, which is the positive quantity the quadrature measures.
  const double ea = std::exp(-pi), eb = std::exp(-4 * pi);
  const double swapped = 2.0 * std::log((1.0 - eb) / (1.0 - ea));
  const double q = subordinated_defect(catalog::LogRatio{0.5, 2.0}, ExtremalKind::Majorant).quadrature;
  std::printf("note: log-ratio majorant quadrature %.17g vs 2 log((1-e^{-2 pi beta})/(1-e^{-2 pi alpha})) %.17g, "
              "rel err %.3g\n",
              q, swapped, std::abs(q - swapped) / swapped);

  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
