#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

using Complex = std::complex<double>;

/// Raised by verify_bounds; carries the offending coefficient vector.
class BoundViolation : public Error {
 public:
  BoundViolation(const std::string& what, std::vector<Complex> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<Complex>& witness() const { return witness_; }

 private:
  std::vector<Complex> witness_;
};

/// Points with pairwise separation at least delta.
struct PointConfig {
  std::vector<double> xi;
  double delta = 1.0;

  /// Throws DomainError if delta <= 0 or two points are closer than delta.
  void validate() const;
};

/// Bounds  -lower * |a|^2 <= form <= upper * |a|^2  (upper only for sigma > 1).
struct HilbertConstants {
  double sigma = 1.0;
  double lower = 0.0;  // magnitude of the lower bound, 2 eta(sigma) / delta^sigma
  std::optional<double> upper;
};

HilbertConstants sharp_constants(double sigma, double delta);

/// sum_{m != n} a_m conj(a_n) |xi_m - xi_n|^{-sigma}
double form_value(double sigma, const PointConfig& config, std::span<const Complex> a);

struct HilbertReport {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  /// Smallest (form / |a|^2 + lower) / lower over all tested vectors.
  double lower_margin = 0.0;
  /// Smallest (upper - form / |a|^2) / upper, when an upper bound exists.
  std::optional<double> upper_margin;
  int vectors_tested = 0;
};

/// Tests `trials` seeded random unit vectors plus both extreme eigenvectors
/// of the kernel matrix against sharp_constants(sigma, config.delta). Throws
/// BoundViolation when a relative margin drops below -1e-10.
HilbertReport verify_bounds(double sigma, const PointConfig& config, int trials,
                            std::uint64_t seed);

/// N points with gaps drawn uniformly from [delta, 2 delta].
PointConfig random_config(int n, double delta, std::uint64_t seed);

/// Smallest eigenvalue of the kernel on {0, 1, ..., n-1}; tends to
/// -2 eta(sigma) from above as n grows.
double equally_spaced_min_eigenvalue(double sigma, int n);

}  // namespace extremal
