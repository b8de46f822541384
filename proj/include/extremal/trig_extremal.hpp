#pragma once

#include <vector>

#include "extremal/gaussian_extremal.hpp"

namespace extremal {

/// Even real trigonometric polynomial sum_{|n|<=N} c_n e(nx), c_n = c_{-n}.
struct TrigPoly {
  int degree = 0;
  std::vector<double> coeffs;  // c_0 .. c_N
};

/// Theta3(x, i/lambda), the periodic target.
double theta3_target(double x, double lambda, const SeriesPolicy& policy = {});

/// Extremal polynomial of degree N for theta3_target(., lambda):
/// c_n = lambda^{1/2} s^{-1} Fhat_{lambda/s^2}(n/s), with s = 2N+2 for
/// BestApprox and s = N+1 for the one-sided kinds.
TrigPoly build_trig(ExtremalKind kind, double lambda, int N, const SeriesPolicy& policy = {});

double eval_trig(const TrigPoly& p, double x);

/// Minorant   Theta2(0, i(N+1)^2/lambda)
/// Majorant   Theta3(0, i(N+1)^2/lambda)
/// BestApprox int_{-1/2}^{1/2} Theta1(u, i(2N+2)^2/lambda) du
double trig_sharp_integral(ExtremalKind kind, double lambda, int N,
                           const SeriesPolicy& policy = {});

/// Scale s used by build_trig.
int trig_scale(ExtremalKind kind, int N);

}  // namespace extremal
