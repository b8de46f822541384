#pragma once

#include <functional>
#include <span>

#include "extremal/errors.hpp"

namespace extremal {

/// Truncation tolerances shared by every infinite series and quadrature.
struct SeriesPolicy {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  long max_terms = 1'000'000;

  /// Throws DomainError unless rel_tol > 0, abs_tol > 0 and max_terms >= 8.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

/// Leading behaviour of an integrand at an endpoint of (0, inf).
///
/// At zero, Power(p) means f ~ lambda^-p (integrable iff p < 1); at infinity
/// it means f ~ lambda^-p (integrable iff p > 1). Exponential decay is always
/// integrable.
struct EndpointHint {
  enum class Kind { Exponential, Power };
  Kind kind = Kind::Exponential;
  double rate = 1.0;

  static EndpointHint exponential(double rate = 1.0) { return {Kind::Exponential, rate}; }
  static EndpointHint power(double p) { return {Kind::Power, p}; }
};

using RealFunction = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (10/21) quadrature of f over [a, b].
///
/// `breakpoints` lists interior points where f may have a kink; the interval
/// is split there before refinement starts. Throws NonConvergence when the
/// evaluation budget (policy.max_terms) runs out.
QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const SeriesPolicy& policy = {},
                                    std::span<const double> breakpoints = {});

/// Integral of f over (0, inf).
///
/// The range is split at 1; lambda = e^{-s} and lambda = e^{s} map the two
/// halves onto s in (0, inf), which is then integrated in growing chunks
/// until the contributions fall below tolerance. Throws DivergentTail when
/// the hints describe a non-integrable endpoint.
QuadratureResult integrate_semiinfinite(const RealFunction& f, EndpointHint at_zero,
                                        EndpointHint at_inf, const SeriesPolicy& policy = {});

/// Sum of term(n) over all integers, pairing n with -n.
double sum_symmetric(const std::function<double(long)>& term, const SeriesPolicy& policy = {});

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);
/// cos(pi x) with exact zeros at the half-integers.
double cos_pi(double x);
/// sin(pi x) / (pi x), equal to 1 at x = 0.
double sinc_pi(double x);

}  // namespace extremal
