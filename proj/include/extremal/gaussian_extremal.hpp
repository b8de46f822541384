#pragma once

#include <string>
#include <string_view>

#include "extremal/numerics.hpp"

namespace extremal {

struct GaussianParam {
  double lambda = 1.0;
  void validate() const;
};

enum class ExtremalKind { BestApprox, Minorant, Majorant };

std::string to_string(ExtremalKind kind);
/// Accepts "bestapprox"/"best", "minorant"/"min", "majorant"/"maj".
ExtremalKind parse_extremal_kind(std::string_view name);

/// BestApprox has exponential type pi*delta, the one-sided kinds 2*pi*delta.
struct ExtremalSpec {
  ExtremalKind kind = ExtremalKind::BestApprox;
  double lambda = 1.0;
  double delta = 1.0;

  void validate() const;
  /// Parameter of the unscaled function: lambda / delta^2.
  double mu() const { return lambda / (delta * delta); }
};

/// e^{-pi lambda x^2}
double gaussian(const GaussianParam& p, double x);
/// lambda^{-1/2} e^{-pi t^2 / lambda}
double gaussian_hat(const GaussianParam& p, double t);

/// Half-width of the node set used for parameter mu: nodes c with |c| <= N
/// carry all weights above the truncation tolerance.
long node_count(double mu, const SeriesPolicy& policy = {});

/// K, L or M for parameter lambda/delta^2, evaluated at delta*x.
///
/// K(x) = sum_{c in Z+1/2} G(c) sinc(x-c)
/// L(x) = sum_{c in Z+1/2} sinc^2(x-c) [G(c) + (x-c) G'(c)]
/// M(x) = sum_{n in Z}     sinc^2(x-n) [G(n) + (x-n) G'(n)]
/// where sinc(u) = sin(pi u)/(pi u).
double eval_extremal(const ExtremalSpec& spec, double x, const SeriesPolicy& policy = {});

/// K_lambda(x) as 2 * int_0^{1/2} Theta1(t, i lambda) cos(2 pi x t) dt.
double eval_K_via_fourier(double lambda, double x, const SeriesPolicy& policy = {});

/// Closed-form Fourier transform of the scaled extremal; zero outside
/// [-delta/2, delta/2] (BestApprox) or [-delta, delta] (Minorant, Majorant).
double hat_extremal(const ExtremalSpec& spec, double t, const SeriesPolicy& policy = {});

/// Sharp L1 distance between G_lambda and the scaled extremal:
///   Minorant   int (G - L),  Majorant  int (M - G),  BestApprox  int |G - K|.
double defect_integral(const ExtremalSpec& spec, const SeriesPolicy& policy = {});

}  // namespace extremal
