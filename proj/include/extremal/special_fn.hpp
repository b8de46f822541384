#pragma once

#include "extremal/errors.hpp"

namespace extremal {

/// Euler gamma function for real s (Lanczos, g = 7). Throws PoleError at
/// s = 0, -1, -2, ...
double gamma_fn(double s);

/// gamma(s) = pi^{-s/2} Gamma(s/2). Throws PoleError at s = 0, -2, -4, ...
double gamma_factor(double s);

/// Dirichlet eta function sum_{n>=1} (-1)^{n-1} n^{-s}, s > 0.
double eta(double s);

/// Riemann zeta for s > 1, computed as eta(s) / (1 - 2^{1-s}).
double zeta(double s);

/// L(s, chi_4) = sum_{n>=0} (-1)^n (2n+1)^{-s}, s > 0.
double dirichlet_L_chi4(double s);

struct SiCi {
  double si = 0.0;
  double ci = 0.0;
};

/// Sine and cosine integrals Si(x), Ci(x) for x > 0.
SiCi sine_cosine_integral(double x);

}  // namespace extremal
