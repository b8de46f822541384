#include "extremal/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace extremal {

namespace {

// Below this lambda the q-series is replaced by the transformed lattice sum.
constexpr double kCrossover = 0.05;

struct Reduced {
  double r;
  double sign;
};

// Theta1 is antiperiodic with period 1, the other two are periodic.
Reduced reduce(ThetaKind kind, double v) {
  const double r = std::remainder(v, 1.0);
  double sign = 1.0;
  if (kind == ThetaKind::Theta1) {
    const double k = std::round(v - r);
    if (std::fmod(std::abs(k), 2.0) == 1.0) sign = -1.0;
  }
  return {r, sign};
}

double stop_threshold(const SeriesPolicy& policy, double sum) {
  return 1e-2 * std::min(policy.abs_tol, policy.rel_tol * std::abs(sum));
}

// q-series in cosine form. `derivative` selects d/dv.
double q_series(ThetaKind kind, double r, double lambda, bool derivative,
                const SeriesPolicy& policy) {
  const double half = kind == ThetaKind::Theta1 ? 0.5 : 0.0;
  double sum = (kind == ThetaKind::Theta1 || derivative) ? 0.0 : 1.0;
  const long start = kind == ThetaKind::Theta1 ? 0 : 1;
  for (long n = start; n < policy.max_terms; ++n) {
    const double m = n + half;
    const double w = std::exp(-M_PI * lambda * m * m);
    const double sgn = (kind == ThetaKind::Theta2 && n % 2 == 1) ? -1.0 : 1.0;
    double term;
    if (derivative) {
      term = -2.0 * sgn * w * 2.0 * M_PI * m * sin_pi(2.0 * m * r);
    } else {
      term = 2.0 * sgn * w * cos_pi(2.0 * m * r);
    }
    sum += term;
    const double bound = 2.0 * w * (derivative ? 2.0 * M_PI * m : 1.0);
    if (bound < stop_threshold(policy, sum) || w == 0.0) return sum;
  }
  throw NonConvergence("theta q-series did not converge for lambda = " + std::to_string(lambda));
}

// sum_n s_n f(n + offset - v) with f(x) = e^{-pi mu x^2} or its v-derivative,
// summed outward from the lattice point nearest to v.
double lattice_sum(ThetaKind kind, double v, double mu, bool derivative,
                   const SeriesPolicy& policy) {
  const double offset = kind == ThetaKind::Theta2 ? 0.5 : 0.0;
  const double alternating = kind == ThetaKind::Theta1;
  const long center = static_cast<long>(std::llround(v - offset));
  auto term = [&](long n) {
    const double x = static_cast<double>(n) + offset - v;
    const double g = std::exp(-M_PI * mu * x * x);
    double t = derivative ? 2.0 * M_PI * mu * x * g : g;
    if (alternating && (n % 2 != 0)) t = -t;
    return t;
  };
  double sum = term(center);
  for (long k = 1; k < policy.max_terms; ++k) {
    const double a = term(center + k);
    const double b = term(center - k);
    sum += a + b;
    // Distance of the nearer of the two points is at least k - 1/2.
    const double d = k - 0.5;
    const double bound =
        2.0 * std::exp(-M_PI * mu * d * d) * (derivative ? 2.0 * M_PI * mu * (d + 1.0) : 1.0);
    if (bound < stop_threshold(policy, sum) || bound == 0.0) return sum;
  }
  throw NonConvergence("lattice sum did not converge for lambda = " + std::to_string(mu));
}

double evaluate(ThetaKind kind, const ThetaParams& p, bool derivative,
                const SeriesPolicy& policy) {
  policy.validate();
  p.validate();
  const Reduced red = reduce(kind, p.v);
  double value;
  if (p.lambda >= kCrossover) {
    value = q_series(kind, red.r, p.lambda, derivative, policy);
  } else {
    // theta(v, i lambda) = lambda^{-1/2} * lattice sum with G_{1/lambda}.
    value = lattice_sum(kind, red.r, 1.0 / p.lambda, derivative, policy) / std::sqrt(p.lambda);
  }
  return red.sign * value;
}

}  // namespace

void ThetaParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("theta requires lambda > 0, got " + std::to_string(lambda));
  }
  if (!std::isfinite(v)) throw DomainError("theta requires finite v");
}

double ThetaParams::nome() const { return std::exp(-M_PI * lambda); }

double theta(ThetaKind kind, const ThetaParams& p, const SeriesPolicy& policy) {
  return evaluate(kind, p, false, policy);
}

double theta_dv(ThetaKind kind, const ThetaParams& p, const SeriesPolicy& policy) {
  return evaluate(kind, p, true, policy);
}

double theta1_mean(double lambda, const SeriesPolicy& policy) {
  policy.validate();
  ThetaParams{0.0, lambda}.validate();
  if (lambda >= kCrossover) {
    // (2/pi) sum_{n>=0} (-1)^n e^{-pi lambda (n+1/2)^2} / (n+1/2)
    double sum = 0.0;
    for (long n = 0; n < policy.max_terms; ++n) {
      const double m = n + 0.5;
      const double w = std::exp(-M_PI * lambda * m * m) / m;
      sum += (n % 2 == 0 ? w : -w);
      if (w < stop_threshold(policy, sum) || w == 0.0) return 2.0 / M_PI * sum;
    }
    throw NonConvergence("theta1_mean did not converge");
  }
  // Integrate the transformed lattice sum cell by cell.
  const double a = std::sqrt(M_PI / lambda);
  double sum = std::erf(0.5 * a);
  for (long n = 1; n < policy.max_terms; ++n) {
    const double cell = std::erfc(a * (n - 0.5)) - std::erfc(a * (n + 0.5));
    sum += (n % 2 == 0 ? cell : -cell);
    if (std::abs(cell) < stop_threshold(policy, sum) || cell == 0.0) return sum;
  }
  throw NonConvergence("theta1_mean did not converge");
}

double periodized_gaussian(ThetaKind kind, double v, double lambda, const SeriesPolicy& policy) {
  policy.validate();
  ThetaParams{v, lambda}.validate();
  return lattice_sum(kind, v, lambda, false, policy);
}

}  // namespace extremal
