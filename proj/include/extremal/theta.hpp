#pragma once

#include "extremal/numerics.hpp"

namespace extremal {

// Labels follow the convention with q = e^{pi i tau}:
//   Theta1(v) = sum_n q^{(n+1/2)^2} e((n+1/2)v)   (classically theta_2)
//   Theta2(v) = sum_n (-1)^n q^{n^2} e(nv)         (classically theta_4)
//   Theta3(v) = sum_n q^{n^2} e(nv)                (classically theta_3)
// with e(z) = e^{2 pi i z}. Only tau = i*lambda and real v are supported.
enum class ThetaKind { Theta1, Theta2, Theta3 };

struct ThetaParams {
  double v = 0.0;
  double lambda = 1.0;

  /// Throws DomainError unless lambda > 0 and v is finite.
  void validate() const;
  double nome() const;
};

double theta(ThetaKind kind, const ThetaParams& p, const SeriesPolicy& policy = {});

/// d/dv of theta(kind, (v, lambda)).
double theta_dv(ThetaKind kind, const ThetaParams& p, const SeriesPolicy& policy = {});

/// Integral of Theta1(u, i lambda) over u in [-1/2, 1/2].
double theta1_mean(double lambda, const SeriesPolicy& policy = {});

/// Lattice sums of G_lambda(x) = e^{-pi lambda x^2}:
///   Theta1: sum (-1)^n G(n - v),  Theta2: sum G(n + 1/2 - v),  Theta3: sum G(n - v).
/// Each equals lambda^{-1/2} theta(kind, (v, 1/lambda)).
double periodized_gaussian(ThetaKind kind, double v, double lambda,
                           const SeriesPolicy& policy = {});

}  // namespace extremal
