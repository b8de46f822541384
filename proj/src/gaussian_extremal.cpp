#include "extremal/gaussian_extremal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "extremal/theta.hpp"

namespace extremal {

namespace {

// Weights below this are dropped from the node sums.
double node_tolerance(const SeriesPolicy& policy) { return 1e-2 * std::min(policy.abs_tol, 1e-16); }

double alternating_gaussian_tail(double mu, double scale, bool alternate, long start,
                                 double shift, const SeriesPolicy& policy) {
  // sum_{n>=start} s_n e^{-pi mu (n+shift)^2} / scale
  double sum = 0.0;
  for (long n = start; n < policy.max_terms; ++n) {
    const double m = n + shift;
    const double w = std::exp(-M_PI * mu * m * m / scale);
    sum += (alternate && (n - start) % 2 == 1) ? -w : w;
    if (w == 0.0 || w < 1e-2 * std::min(policy.abs_tol, policy.rel_tol * std::abs(sum))) {
      return sum;
    }
  }
  throw NonConvergence("defect series did not converge");
}

double base_defect(ExtremalKind kind, double mu, const SeriesPolicy& policy) {
  const double root = 1.0 / std::sqrt(mu);
  switch (kind) {
    case ExtremalKind::Minorant:
      if (mu <= 1.0) {
        // 2 mu^{-1/2} sum_{n>=1} (-1)^{n+1} e^{-pi n^2 / mu}
        return 2.0 * root * alternating_gaussian_tail(1.0, mu, true, 1, 0.0, policy);
      }
      return root - 2.0 * alternating_gaussian_tail(mu, 1.0, false, 0, 0.5, policy);
    case ExtremalKind::Majorant:
      if (mu <= 1.0) {
        return 2.0 * root * alternating_gaussian_tail(1.0, mu, false, 1, 0.0, policy);
      }
      return 1.0 + 2.0 * alternating_gaussian_tail(mu, 1.0, false, 1, 0.0, policy) - root;
    case ExtremalKind::BestApprox:
      return root * theta1_mean(1.0 / mu, policy);
  }
  return 0.0;
}

double base_hat(ExtremalKind kind, double mu, double t, const SeriesPolicy& policy) {
  const double at = std::abs(t);
  if (kind == ExtremalKind::BestApprox) {
    if (at > 0.5) return 0.0;
    return theta(ThetaKind::Theta1, {t, mu}, policy);
  }
  if (at >= 1.0) return 0.0;
  const ThetaKind th = kind == ExtremalKind::Minorant ? ThetaKind::Theta1 : ThetaKind::Theta3;
  const double sgn = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
  return (1.0 - at) * theta(th, {t, mu}, policy) -
         mu / (2.0 * M_PI) * sgn * theta_dv(th, {t, mu}, policy);
}

}  // namespace

void GaussianParam::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be > 0, got " + std::to_string(lambda));
  }
}

void ExtremalSpec::validate() const {
  GaussianParam{lambda}.validate();
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError("delta must be > 0, got " + std::to_string(delta));
  }
}

std::string to_string(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::BestApprox:
      return "bestapprox";
    case ExtremalKind::Minorant:
      return "minorant";
    case ExtremalKind::Majorant:
      return "majorant";
  }
  return "?";
}

ExtremalKind parse_extremal_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "bestapprox" || s == "best" || s == "best-approx") return ExtremalKind::BestApprox;
  if (s == "minorant" || s == "min") return ExtremalKind::Minorant;
  if (s == "majorant" || s == "maj") return ExtremalKind::Majorant;
  throw UsageError("unknown extremal kind '" + s + "' (expected bestapprox, minorant or majorant)");
}

double gaussian(const GaussianParam& p, double x) {
  p.validate();
  return std::exp(-M_PI * p.lambda * x * x);
}

double gaussian_hat(const GaussianParam& p, double t) {
  p.validate();
  return std::exp(-M_PI * t * t / p.lambda) / std::sqrt(p.lambda);
}

long node_count(double mu, const SeriesPolicy& policy) {
  const double tol = node_tolerance(policy);
  const double n = std::ceil(std::sqrt(std::log(1.0 / tol) / (M_PI * mu))) + 2.0;
  if (n > static_cast<double>(policy.max_terms)) {
    throw NonConvergence("extremal series needs more than max_terms nodes at lambda = " +
                         std::to_string(mu));
  }
  return static_cast<long>(n);
}

double eval_extremal(const ExtremalSpec& spec, double x, const SeriesPolicy& policy) {
  spec.validate();
  policy.validate();
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  const double mu = spec.mu();
  const double y = spec.delta * x;
  const long n_max = node_count(mu, policy);

  if (spec.kind == ExtremalKind::Majorant) {
    // sinc^2(y-n) = sin^2(pi y) / (pi (y-n))^2
    const double s = sin_pi(y);
    const double s2 = s * s / (M_PI * M_PI);
    double sum = 0.0;
    for (long n = -n_max; n <= n_max; ++n) {
      const double c = static_cast<double>(n);
      const double d = y - c;
      const double g = std::exp(-M_PI * mu * c * c);
      if (d == 0.0) {
        sum += g;
        continue;
      }
      const double dg = -2.0 * M_PI * mu * c * g;
      sum += s2 / (d * d) * (g + d * dg);
    }
    return sum;
  }

  // Half-integer nodes c = n + 1/2; sin(pi (y-c)) = (-1)^{n+1} cos(pi y).
  const double co = cos_pi(y);
  double sum = 0.0;
  for (long n = -n_max - 1; n <= n_max; ++n) {
    const double c = n + 0.5;
    const double d = y - c;
    const double g = std::exp(-M_PI * mu * c * c);
    if (d == 0.0) {
      sum += g;
      continue;
    }
    if (spec.kind == ExtremalKind::BestApprox) {
      const double sgn = (n % 2 == 0) ? -1.0 : 1.0;
      sum += g * sgn * co / (M_PI * d);
    } else {
      const double dg = -2.0 * M_PI * mu * c * g;
      sum += co * co / (M_PI * M_PI * d * d) * (g + d * dg);
    }
  }
  return sum;
}

double eval_K_via_fourier(double lambda, double x, const SeriesPolicy& policy) {
  GaussianParam{lambda}.validate();
  RealFunction f = [&](double t) {
    return theta(ThetaKind::Theta1, {t, lambda}, policy) * std::cos(2.0 * M_PI * x * t);
  };
  SeriesPolicy quad = policy;
  quad.rel_tol = std::max(policy.rel_tol, 1e-13);
  return 2.0 * integrate_interval(f, 0.0, 0.5, quad).value;
}

double hat_extremal(const ExtremalSpec& spec, double t, const SeriesPolicy& policy) {
  spec.validate();
  return base_hat(spec.kind, spec.mu(), t / spec.delta, policy) / spec.delta;
}

double defect_integral(const ExtremalSpec& spec, const SeriesPolicy& policy) {
  spec.validate();
  policy.validate();
  return base_defect(spec.kind, spec.mu(), policy) / spec.delta;
}

}  // namespace extremal
