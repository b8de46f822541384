#include "extremal/subordination.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "extremal/special_fn.hpp"
#include "extremal/theta.hpp"

namespace extremal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double factorial(int n) { return std::tgamma(n + 1.0); }

// (2n)! / (2 pi)^{2n}
double powerlog_scale(int n) { return factorial(2 * n) / std::pow(2.0 * M_PI, 2 * n); }

// Inf-side hint of (density x Gaussian defect).
EndpointHint defect_inf_hint(const SubordinationMeasure& m, bool bounded_defect) {
  if (m.inf_hint.kind == EndpointHint::Kind::Exponential) return m.inf_hint;
  return EndpointHint::power(m.inf_hint.rate + (bounded_defect ? 0.0 : 0.5));
}

// Pointwise Gaussian difference, signed so that it is >= 0 for the one-sided
// kinds and has the sign of cos(pi x) for BestApprox.
double gaussian_difference(ExtremalKind kind, double lambda, double x,
                           const SeriesPolicy& policy) {
  const double g = std::exp(-M_PI * lambda * x * x);
  const double f = eval_extremal({kind, lambda, 1.0}, x, policy);
  return kind == ExtremalKind::Majorant ? f - g : g - f;
}

// Below this envelope the difference is indistinguishable from rounding.
bool below_noise(ExtremalKind kind, double lambda, const SeriesPolicy& policy) {
  if (lambda >= 1.0) return false;
  const double noise = 4e-16 * (1.0 + 1.0 / std::sqrt(lambda));
  double envelope;
  if (kind == ExtremalKind::BestApprox) {
    envelope = 4.0 / std::sqrt(lambda) * std::exp(-M_PI / (4.0 * lambda)) +
               std::erfc(0.5 * std::sqrt(M_PI / lambda));
  } else {
    envelope = 2.0 * defect_integral({kind, lambda, 1.0}, policy) +
               std::erfc(std::sqrt(M_PI / lambda));
  }
  return envelope <= noise;
}

SeriesPolicy lambda_policy(const SeriesPolicy& policy) {
  SeriesPolicy p = policy;
  p.rel_tol = std::max(policy.rel_tol, 1e-10);
  p.abs_tol = std::max(policy.abs_tol, 1e-13);
  p.max_terms = std::max(policy.max_terms, 4'000'000L);
  return p;
}

void require_admissible(const CatalogFunction& f, const SubordinationMeasure& m,
                        ExtremalKind kind) {
  if (!admissibility_check(m, kind)) {
    throw InadmissibleMeasure("the " + to_string(kind) + " problem is not admissible for " +
                              describe(f));
  }
}

// sum_{k>=0} (-1)^k term(k), stopping on the Leibniz bound.
template <class F>
double alternating(F term) {
  double sum = 0.0;
  for (long k = 0; k < 10'000'000; ++k) {
    const double t = term(k);
    sum += (k % 2 == 0) ? t : -t;
    if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(sum))) return sum;
  }
  throw NonConvergence("alternating closed-form series did not converge");
}

// (2/pi) sum_{n>=0} (-1)^n (e^{-2 pi alpha (n+1/2)} - e^{-2 pi beta (n+1/2)}) / (n+1/2)^2;
// beta < 0 means the second exponential is absent.
double log_best_series(double alpha, double beta) {
  auto exp_series = [](double c) {
    return alternating([c](long n) {
      const double m = n + 0.5;
      return std::exp(-2.0 * M_PI * c * m) / (m * m);
    });
  };
  // At alpha = 0 the first series is sum (-1)^n (n+1/2)^{-2} = 4 L(2, chi_4).
  const double first = alpha == 0.0 ? 4.0 * dirichlet_L_chi4(2.0) : exp_series(alpha);
  const double second = beta < 0.0 ? 0.0 : exp_series(beta);
  return 2.0 / M_PI * (first - second);
}

struct ClosedForms {
  std::optional<double> value;
  std::optional<double> reference;
  std::string formula;
  std::string note;
};

ClosedForms closed_forms(const CatalogFunction& f, ExtremalKind kind,
                         const SeriesPolicy& policy) {
  using K = ExtremalKind;
  return std::visit(
      overloaded{
          [&](const catalog::ExpDecay& e) -> ClosedForms {
            const double a = e.a;
            switch (kind) {
              case K::Minorant: {
                const double v = 2.0 / a - 1.0 / std::sinh(a / 2.0);
                return {v, v, "2/a - csch(a/2)", ""};
              }
              case K::Majorant: {
                const double v = 1.0 / std::tanh(a / 2.0) - 2.0 / a;
                return {v, v, "coth(a/2) - 2/a", ""};
              }
              case K::BestApprox: {
                const double v = 2.0 / a - 2.0 / a / std::cosh(a / 2.0);
                return {v, v, "2/a - (2/a) sech(a/2)", ""};
              }
            }
            return {};
          },
          [&](const catalog::PoissonKernel& p) -> ClosedForms {
            const double a = p.a;
            switch (kind) {
              case K::Minorant: {
                const double v = 2.0 / (std::exp(a) + 1.0);
                return {v, v, "2/(e^a + 1)", ""};
              }
              case K::Majorant: {
                const double v = 2.0 / std::expm1(a);
                return {v, v, "2/(e^a - 1)", ""};
              }
              case K::BestApprox: {
                const double v = 4.0 / M_PI * std::atan(std::exp(-a / 2.0));
                const double series = 2.0 / M_PI * alternating([&](long n) {
                  return std::exp(-a * (n + 0.5)) / (n + 0.5);
                });
                return {v, series, "sum_n (-1)^n e^{-a|n+1/2|} / (pi (n+1/2)) = (4/pi) atan(e^{-a/2})",
                        ""};
              }
            }
            return {};
          },
          [&](const catalog::GaussianAtom& g) -> ClosedForms {
            const double lam = g.lambda;
            const double v = defect_integral({kind, lam, 1.0}, policy);
            const double root = 1.0 / std::sqrt(lam);
            switch (kind) {
              case K::Minorant: {
                // sum_{n != 0} (-1)^n lambda^{-1/2} e^{-pi n^2 / lambda}, the reference convention
                double s = 0.0;
                for (long n = 1; n < 100000; ++n) {
                  const double t = std::exp(-M_PI * n * n / lam);
                  s += (n % 2 == 0) ? t : -t;
                  if (t < 1e-20) break;
                }
                return {v, 2.0 * root * s, "sum_{n!=0} (-1)^{n+1} Ghat(n) = lambda^{-1/2}(1 - Theta2(0, i/lambda))",
                        "reference form uses (-1)^n and is the negative of the defect"};
              }
              case K::Majorant:
                return {v, v, "sum_{n!=0} Ghat(n) = lambda^{-1/2}(Theta3(0, i/lambda) - 1)", ""};
              case K::BestApprox: {
                const double s = 2.0 * root / M_PI * alternating([&](long n) {
                  const double m = n + 0.5;
                  return std::exp(-M_PI * m * m / lam) / m;
                });
                return {v, s, "sum_n (-1)^n Ghat(n+1/2) / (pi (n+1/2))", ""};
              }
            }
            return {};
          },
          [&](const catalog::PowerSigma& p) -> ClosedForms {
            const double s = p.sigma;
            const double gam = gamma_factor(1.0 + s);
            switch (kind) {
              case K::Minorant: {
                const double v = 2.0 * eta(1.0 + s) * gam;
                std::optional<double> reference;
                if (s > 0.0) reference = (2.0 - std::pow(2.0, 1.0 - s)) * gam * zeta(1.0 + s);
                return {v, reference, "(2 - 2^{1-sigma}) gamma(1+sigma) zeta(1+sigma) = 2 eta(1+sigma) gamma(1+sigma)",
                        ""};
              }
              case K::Majorant: {
                const double v = 2.0 * gam * zeta(1.0 + s);
                return {v, v, "2 gamma(1+sigma) zeta(1+sigma)", ""};
              }
              case K::BestApprox: {
                const double v = std::pow(4.0 / M_PI, (3.0 + s) / 2.0) *
                                 gamma_fn((1.0 + s) / 2.0) * dirichlet_L_chi4(2.0 + s);
                return {v, v, "(4/pi)^{(3+sigma)/2} Gamma((1+sigma)/2) L(2+sigma, chi_4)", ""};
              }
            }
            return {};
          },
          [&](const catalog::LogRatio& r) -> ClosedForms {
            const double ea = std::exp(-2.0 * M_PI * r.alpha);
            const double eb = std::exp(-2.0 * M_PI * r.beta);
            switch (kind) {
              case K::Minorant: {
                const double v = 2.0 * std::log((1.0 + ea) / (1.0 + eb));
                return {v, v, "2 log((1 + e^{-2 pi alpha}) / (1 + e^{-2 pi beta}))", ""};
              }
              case K::Majorant: {
                const double v = 2.0 * std::log((1.0 - eb) / (1.0 - ea));
                const double reference = 2.0 * std::log((1.0 - ea) / (1.0 - eb));
                return {v, reference, "2 log((1 - e^{-2 pi beta}) / (1 - e^{-2 pi alpha}))",
                        "reference form 2 log((1 - e^{-2 pi alpha}) / (1 - e^{-2 pi beta})) is the "
                        "negative of the defect"};
              }
              case K::BestApprox:
                return {log_best_series(r.alpha, r.beta), std::nullopt,
                        "(2/pi) sum_n (-1)^n (e^{-2 pi alpha (n+1/2)} - e^{-2 pi beta (n+1/2)}) / (n+1/2)^2",
                        ""};
            }
            return {};
          },
          [&](const catalog::NegLogSq& q) -> ClosedForms {
            const double ea = std::exp(-2.0 * M_PI * q.alpha);
            const double ep = std::exp(2.0 * M_PI * q.alpha);
            switch (kind) {
              case K::Minorant:
                return {2.0 * std::log1p(ea), 2.0 * std::log1p(ep), "2 log(1 + e^{-2 pi alpha})",
                        "reference form has e^{+2 pi alpha}"};
              case K::Majorant: {
                std::optional<double> reference;
                const double arg = 1.0 - ep;
                if (arg > 0.0) reference = 2.0 * std::log(arg);
                return {-2.0 * std::log1p(-ea), reference, "-2 log(1 - e^{-2 pi alpha})",
                        "reference form 2 log(1 - e^{+2 pi alpha}) is undefined for alpha > 0"};
              }
              case K::BestApprox:
                return {log_best_series(q.alpha, -1.0), std::nullopt,
                        "(2/pi) sum_n (-1)^n e^{-2 pi alpha (n+1/2)} / (n+1/2)^2", ""};
            }
            return {};
          },
          [&](const catalog::PowerLog& p) -> ClosedForms {
            const int n = p.n;
            const double c = powerlog_scale(n);
            switch (kind) {
              case K::Minorant: {
                const double v = 2.0 * c * eta(2.0 * n + 1.0);
                const double reference = (2.0 - std::pow(2.0, 1.0 - 2.0 * n)) * c * zeta(2.0 * n + 1.0);
                return {v, reference, "(2 - 2^{1-2n}) (2n)! (2 pi)^{-2n} zeta(2n+1)", ""};
              }
              case K::Majorant: {
                const double v = 2.0 * c * zeta(2.0 * n + 1.0);
                return {v, v, "2 (2n)! (2 pi)^{-2n} zeta(2n+1)", ""};
              }
              case K::BestApprox: {
                const double L = dirichlet_L_chi4(2.0 * n + 2.0);
                const double v = std::pow(2.0, 2 * n + 3) / M_PI * c * L;
                return {v, 2.0 / M_PI * c * L, "(2^{2n+3}/pi) (2n)! (2 pi)^{-2n} L(2n+2, chi_4)",
                        "reference form (2/pi) (2n)! (2 pi)^{-2n} L(2n+2, chi_4) lacks the factor "
                        "2^{2n+2}"};
              }
            }
            return {};
          },
      },
      f);
}

}  // namespace

void validate(const CatalogFunction& f) {
  std::visit(overloaded{
                 [](const catalog::ExpDecay& e) {
                   if (!(e.a > 0.0)) throw DomainError("expdecay requires a > 0");
                 },
                 [](const catalog::PoissonKernel& p) {
                   if (!(p.a > 0.0)) throw DomainError("poisson requires a > 0");
                 },
                 [](const catalog::GaussianAtom& g) {
                   if (!(g.lambda > 0.0)) throw DomainError("gaussian requires lambda > 0");
                 },
                 [](const catalog::PowerSigma& p) {
                   if (!(p.sigma > -1.0)) throw DomainError("powersigma requires sigma > -1");
                   const double nearest_even = 2.0 * std::round(p.sigma / 2.0);
                   if (nearest_even >= 0.0 && std::abs(p.sigma - nearest_even) < 1e-9) {
                     throw PoleError("powersigma: gamma(-sigma) has a pole at sigma = " +
                                     std::to_string(nearest_even));
                   }
                 },
                 [](const catalog::LogRatio& r) {
                   if (!(r.alpha >= 0.0 && r.alpha < r.beta)) {
                     throw DomainError("logratio requires 0 <= alpha < beta");
                   }
                 },
                 [](const catalog::NegLogSq& q) {
                   if (!(q.alpha >= 0.0)) throw DomainError("neglogsq requires alpha >= 0");
                 },
                 [](const catalog::PowerLog& p) {
                   if (p.n < 1) throw DomainError("powerlog requires n >= 1");
                 },
             },
             f);
}

std::string describe(const CatalogFunction& f) {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const catalog::ExpDecay& e) { os << "expdecay(a=" << e.a << ")"; },
                 [&](const catalog::PoissonKernel& p) { os << "poisson(a=" << p.a << ")"; },
                 [&](const catalog::GaussianAtom& g) { os << "gaussian(lambda=" << g.lambda << ")"; },
                 [&](const catalog::PowerSigma& p) { os << "powersigma(sigma=" << p.sigma << ")"; },
                 [&](const catalog::LogRatio& r) {
                   os << "logratio(alpha=" << r.alpha << ", beta=" << r.beta << ")";
                 },
                 [&](const catalog::NegLogSq& q) { os << "neglogsq(alpha=" << q.alpha << ")"; },
                 [&](const catalog::PowerLog& p) { os << "powerlog(n=" << p.n << ")"; },
             },
             f);
  return os.str();
}

SubordinationMeasure measure_for(const CatalogFunction& f) {
  validate(f);
  return std::visit(
      overloaded{
          [](const catalog::ExpDecay& e) {
            const double a = e.a;
            SubordinationMeasure m;
            m.density = [a](double lam) {
              return a / (2.0 * M_PI) * std::pow(lam, -1.5) * std::exp(-a * a / (4.0 * M_PI * lam));
            };
            m.zero_hint = EndpointHint::exponential(a * a / (4.0 * M_PI));
            m.inf_hint = EndpointHint::power(1.5);
            return m;
          },
          [](const catalog::PoissonKernel& p) {
            const double a = p.a;
            SubordinationMeasure m;
            m.density = [a](double lam) {
              return a / (2.0 * M_PI) * std::exp(-a * a * lam / (4.0 * M_PI));
            };
            m.zero_hint = EndpointHint::power(0.0);
            m.inf_hint = EndpointHint::exponential(a * a / (4.0 * M_PI));
            return m;
          },
          [](const catalog::GaussianAtom& g) {
            SubordinationMeasure m;
            m.atoms.push_back({g.lambda, 1.0});
            return m;
          },
          [](const catalog::PowerSigma& p) {
            const double s = p.sigma;
            SubordinationMeasure m;
            m.density = [s](double lam) { return std::pow(lam, -s / 2.0 - 1.0); };
            m.zero_hint = EndpointHint::power(s / 2.0 + 1.0);
            m.inf_hint = EndpointHint::power(s / 2.0 + 1.0);
            return m;
          },
          [](const catalog::LogRatio& r) {
            const double a2 = r.alpha * r.alpha;
            const double b2 = r.beta * r.beta;
            SubordinationMeasure m;
            m.density = [a2, b2](double lam) {
              return -std::expm1(-M_PI * lam * (b2 - a2)) * std::exp(-M_PI * lam * a2) / lam;
            };
            m.zero_hint = EndpointHint::power(0.0);
            m.inf_hint = r.alpha > 0.0 ? EndpointHint::exponential(M_PI * a2) : EndpointHint::power(1.0);
            return m;
          },
          [](const catalog::NegLogSq& q) {
            const double a2 = q.alpha * q.alpha;
            SubordinationMeasure m;
            m.density = [a2](double lam) { return std::exp(-M_PI * lam * a2) / lam; };
            m.zero_hint = EndpointHint::power(1.0);
            m.inf_hint = q.alpha > 0.0 ? EndpointHint::exponential(M_PI * a2) : EndpointHint::power(1.0);
            return m;
          },
          [](const catalog::PowerLog& p) {
            const int n = p.n;
            const double scale = powerlog_scale(n) / gamma_factor(2.0 * n + 1.0);
            SubordinationMeasure m;
            m.density = [n, scale](double lam) { return scale * std::pow(lam, -n - 1.0); };
            m.zero_hint = EndpointHint::power(n + 1.0);
            m.inf_hint = EndpointHint::power(n + 1.0);
            return m;
          },
      },
      f);
}

double g_eval(const CatalogFunction& f, double x) {
  validate(f);
  return std::visit(
      overloaded{
          [x](const catalog::ExpDecay& e) { return std::exp(-e.a * std::abs(x)); },
          [x](const catalog::PoissonKernel& p) {
            return 2.0 * p.a / (p.a * p.a + 4.0 * M_PI * M_PI * x * x);
          },
          [x](const catalog::GaussianAtom& g) { return std::exp(-M_PI * g.lambda * x * x); },
          [x](const catalog::PowerSigma& p) {
            if (x == 0.0) {
              if (p.sigma < 0.0) throw DomainError("powersigma with sigma < 0 is singular at x = 0");
              return 0.0;
            }
            return gamma_factor(-p.sigma) * std::pow(std::abs(x), p.sigma);
          },
          [x](const catalog::LogRatio& r) {
            if (x == 0.0 && r.alpha == 0.0) throw DomainError("logratio with alpha = 0 is singular at x = 0");
            return -std::log((x * x + r.alpha * r.alpha) / (x * x + r.beta * r.beta));
          },
          [x](const catalog::NegLogSq& q) {
            if (x == 0.0 && q.alpha == 0.0) throw DomainError("neglogsq with alpha = 0 is singular at x = 0");
            return -std::log(x * x + q.alpha * q.alpha);
          },
          [x](const catalog::PowerLog& p) {
            if (x == 0.0) throw DomainError("powerlog is not evaluated at x = 0");
            const double sign = (p.n % 2 == 1) ? 1.0 : -1.0;
            return sign * std::pow(x * x, p.n) * std::log(x * x);
          },
      },
      f);
}

bool admissibility_check(const SubordinationMeasure& m, ExtremalKind kind) {
  if (!m.density) return true;
  if (m.inf_hint.kind == EndpointHint::Kind::Exponential) return true;
  const double p = m.inf_hint.rate;
  return kind == ExtremalKind::Majorant ? p > 1.0 : p > 0.5;
}

double subordinated_extremal(const CatalogFunction& f, ExtremalKind kind, double x,
                             const SeriesPolicy& policy) {
  const SubordinationMeasure m = measure_for(f);
  require_admissible(f, m, kind);
  const double g = g_eval(f, x);

  double d = 0.0;
  for (const Atom& a : m.atoms) d += a.weight * gaussian_difference(kind, a.lambda, x, policy);
  if (m.density) {
    RealFunction integrand = [&](double lam) {
      if (below_noise(kind, lam, policy)) return 0.0;
      return gaussian_difference(kind, lam, x, policy) * m.density(lam);
    };
    // Away from x = 0 the Minorant and BestApprox differences decay like
    // e^{-pi lambda x^2}; the Majorant difference tends to sinc^2(x).
    const bool bounded = kind == ExtremalKind::Majorant || x == 0.0;
    const EndpointHint at_inf =
        bounded ? defect_inf_hint(m, true) : EndpointHint::exponential(M_PI * x * x);
    d += integrate_semiinfinite(integrand, EndpointHint::exponential(), at_inf,
                                lambda_policy(policy))
             .value;
  }
  return kind == ExtremalKind::Majorant ? g + d : g - d;
}

DefectReport subordinated_defect(const CatalogFunction& f, ExtremalKind kind,
                                 const SeriesPolicy& policy) {
  const SubordinationMeasure m = measure_for(f);
  require_admissible(f, m, kind);
  DefectReport r;
  for (const Atom& a : m.atoms) r.quadrature += a.weight * defect_integral({kind, a.lambda, 1.0}, policy);
  if (m.density) {
    RealFunction integrand = [&](double lam) {
      return defect_integral({kind, lam, 1.0}, policy) * m.density(lam);
    };
    const QuadratureResult q =
        integrate_semiinfinite(integrand, EndpointHint::exponential(),
                               defect_inf_hint(m, kind == ExtremalKind::Majorant),
                               lambda_policy(policy));
    r.quadrature += q.value;
    r.abs_error_estimate = q.abs_error_estimate;
  }
  ClosedForms c = closed_forms(f, kind, policy);
  r.closed_form = c.value;
  r.reference_form = c.reference;
  r.formula = std::move(c.formula);
  r.note = std::move(c.note);
  return r;
}

}  // namespace extremal
