#include "extremal/trig_extremal.hpp"

#include <cmath>
#include <string>

#include "extremal/theta.hpp"

namespace extremal {

namespace {

void check_degree(int N) {
  if (N < 0) throw DomainError("degree N must be >= 0, got " + std::to_string(N));
}

}  // namespace

int trig_scale(ExtremalKind kind, int N) {
  check_degree(N);
  return kind == ExtremalKind::BestApprox ? 2 * N + 2 : N + 1;
}

double theta3_target(double x, double lambda, const SeriesPolicy& policy) {
  GaussianParam{lambda}.validate();
  return theta(ThetaKind::Theta3, {x, 1.0 / lambda}, policy);
}

TrigPoly build_trig(ExtremalKind kind, double lambda, int N, const SeriesPolicy& policy) {
  GaussianParam{lambda}.validate();
  const double s = trig_scale(kind, N);
  const ExtremalSpec base{kind, lambda / (s * s), 1.0};
  TrigPoly p;
  p.degree = N;
  p.coeffs.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    p.coeffs[n] = std::sqrt(lambda) / s * hat_extremal(base, n / s, policy);
  }
  return p;
}

double eval_trig(const TrigPoly& p, double x) {
  if (p.coeffs.empty()) return 0.0;
  double sum = p.coeffs[0];
  for (std::size_t n = 1; n < p.coeffs.size(); ++n) {
    sum += 2.0 * p.coeffs[n] * cos_pi(2.0 * static_cast<double>(n) * std::remainder(x, 1.0));
  }
  return sum;
}

double trig_sharp_integral(ExtremalKind kind, double lambda, int N, const SeriesPolicy& policy) {
  GaussianParam{lambda}.validate();
  const double s = trig_scale(kind, N);
  const double arg = s * s / lambda;
  switch (kind) {
    case ExtremalKind::Minorant:
      return theta(ThetaKind::Theta2, {0.0, arg}, policy);
    case ExtremalKind::Majorant:
      return theta(ThetaKind::Theta3, {0.0, arg}, policy);
    case ExtremalKind::BestApprox:
      return theta1_mean(arg, policy);
  }
  return 0.0;
}

}  // namespace extremal
