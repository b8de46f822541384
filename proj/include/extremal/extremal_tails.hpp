#pragma once

#include "extremal/gaussian_extremal.hpp"

namespace extremal {

// Direct real-line integrals of the unscaled extremals K, L, M. These decay
// only like x^{-2} (K like x^{-1} with oscillation), so the integral over
// [-T, T] is computed by adaptive quadrature and the two tails beyond |x| = T
// are added in closed form through the sine and cosine integrals.
struct TailedIntegral {
  double value = 0.0;      // quadrature over [-T, T] plus both tails
  double truncated = 0.0;  // quadrature over [-T, T] alone
  double abs_error_estimate = 0.0;
};

/// int F(x) cos(2 pi t x) dx for F = K, L or M with parameter lambda.
TailedIntegral fourier_by_quadrature(ExtremalKind kind, double lambda, double t, double T = 12.0,
                                     const SeriesPolicy& policy = {});

/// int (G - L), int (M - G) or int |G - K| over the real line.
TailedIntegral defect_by_quadrature(ExtremalKind kind, double lambda, double T = 12.0,
                                    const SeriesPolicy& policy = {});

/// Cutoff actually used: max(T, largest node + 1), rounded up to an integer.
double tail_cutoff(ExtremalKind kind, double lambda, double T, const SeriesPolicy& policy = {});

}  // namespace extremal
