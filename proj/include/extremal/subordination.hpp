#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extremal/gaussian_extremal.hpp"

namespace extremal {

namespace catalog {
/// e^{-a|x|}
struct ExpDecay {
  double a = 1.0;
};
/// 2a / (a^2 + 4 pi^2 x^2)
struct PoissonKernel {
  double a = 1.0;
};
/// e^{-pi lambda x^2}
struct GaussianAtom {
  double lambda = 1.0;
};
/// gamma(-sigma) |x|^sigma, sigma > -1, sigma not in {0, 2, 4, ...}
struct PowerSigma {
  double sigma = 1.0;
};
/// -log((x^2 + alpha^2) / (x^2 + beta^2)), 0 <= alpha < beta
struct LogRatio {
  double alpha = 0.0;
  double beta = 1.0;
};
/// -log(x^2 + alpha^2), alpha >= 0
struct NegLogSq {
  double alpha = 0.0;
};
/// (-1)^{n+1} x^{2n} log(x^2), n >= 1
struct PowerLog {
  int n = 1;
};
}  // namespace catalog

using CatalogFunction =
    std::variant<catalog::ExpDecay, catalog::PoissonKernel, catalog::GaussianAtom,
                 catalog::PowerSigma, catalog::LogRatio, catalog::NegLogSq, catalog::PowerLog>;

/// Throws DomainError when parameters are out of range.
void validate(const CatalogFunction& f);
std::string describe(const CatalogFunction& f);

struct Atom {
  double lambda = 1.0;
  double weight = 1.0;
};

/// nu = sum of atoms + density(lambda) d lambda on (0, inf). The hints give
/// the leading behaviour of the density alone at each end.
struct SubordinationMeasure {
  std::vector<Atom> atoms;
  RealFunction density;  // empty when the measure is purely atomic
  EndpointHint zero_hint = EndpointHint::exponential();
  EndpointHint inf_hint = EndpointHint::exponential();
};

SubordinationMeasure measure_for(const CatalogFunction& f);

/// Closed form of the target. Throws DomainError at x = 0 where g is
/// singular.
double g_eval(const CatalogFunction& f, double x);

/// True iff int defect_integral(kind, lambda) d nu(lambda) is finite. Decided
/// from the density's behaviour at infinity: the Gaussian defects are
/// O(lambda^{-1/2}) for Minorant/BestApprox and O(1) for Majorant there, and
/// decay like e^{-c/lambda} at zero.
bool admissibility_check(const SubordinationMeasure& m, ExtremalKind kind);

/// Minorant g - int (G-L) d nu, Majorant g + int (M-G) d nu,
/// BestApprox g - int (G-K) d nu.
double subordinated_extremal(const CatalogFunction& f, ExtremalKind kind, double x,
                             const SeriesPolicy& policy = {});

struct DefectReport {
  double quadrature = 0.0;
  double abs_error_estimate = 0.0;
  /// Value derived from the Fourier transform of g off the window.
  std::optional<double> closed_form;
  /// The constant in its reference form, when that differs in shape.
  std::optional<double> reference_form;
  std::string formula;
  std::string note;
};

DefectReport subordinated_defect(const CatalogFunction& f, ExtremalKind kind,
                                 const SeriesPolicy& policy = {});

}  // namespace extremal
