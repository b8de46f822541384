#include "extremal/hilbert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "extremal/special_fn.hpp"

namespace extremal {

namespace {

constexpr double kSlack = -1e-10;

Eigen::MatrixXd kernel(double sigma, const std::vector<double>& xi) {
  const auto n = static_cast<Eigen::Index>(xi.size());
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = std::pow(std::abs(xi[i] - xi[j]), -sigma);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

void check_sigma(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be > 0, got " + std::to_string(sigma));
}

}  // namespace

void PointConfig::validate() const {
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  std::vector<double> s = xi;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] - s[i - 1] < delta * (1.0 - 1e-12)) {
      std::ostringstream os;
      os << "points " << s[i - 1] << " and " << s[i] << " are closer than delta = " << delta;
      throw DomainError(os.str());
    }
  }
}

HilbertConstants sharp_constants(double sigma, double delta) {
  check_sigma(sigma);
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  HilbertConstants c;
  c.sigma = sigma;
  const double scale = std::pow(delta, -sigma);
  c.lower = 2.0 * eta(sigma) * scale;
  if (sigma > 1.0) c.upper = 2.0 * zeta(sigma) * scale;
  return c;
}

double form_value(double sigma, const PointConfig& config, std::span<const Complex> a) {
  check_sigma(sigma);
  if (a.size() != config.xi.size()) {
    throw DimensionMismatch("form_value: " + std::to_string(a.size()) + " coefficients for " +
                            std::to_string(config.xi.size()) + " points");
  }
  double sum = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t n = m + 1; n < a.size(); ++n) {
      const double k = std::pow(std::abs(config.xi[m] - config.xi[n]), -sigma);
      // a_m conj(a_n) + a_n conj(a_m) = 2 Re(a_m conj(a_n))
      sum += 2.0 * k * (a[m] * std::conj(a[n])).real();
    }
  }
  return sum;
}

HilbertReport verify_bounds(double sigma, const PointConfig& config, int trials,
                            std::uint64_t seed) {
  check_sigma(sigma);
  config.validate();
  if (trials < 1) throw DomainError("trials must be >= 1");
  const HilbertConstants c = sharp_constants(sigma, config.delta);
  const std::size_t n = config.xi.size();

  HilbertReport report;
  report.lower_margin = std::numeric_limits<double>::infinity();
  if (c.upper) report.upper_margin = std::numeric_limits<double>::infinity();

  auto check = [&](const std::vector<Complex>& a) {
    double norm2 = 0.0;
    for (const Complex& z : a) norm2 += std::norm(z);
    if (norm2 == 0.0) return;
    const double q = form_value(sigma, config, a) / norm2;
    ++report.vectors_tested;
    const double lower_margin = (q + c.lower) / c.lower;
    report.lower_margin = std::min(report.lower_margin, lower_margin);
    if (lower_margin < kSlack) {
      throw BoundViolation("lower bound violated: quotient " + std::to_string(q) + " < -" +
                               std::to_string(c.lower),
                           a);
    }
    if (c.upper) {
      const double upper_margin = (*c.upper - q) / *c.upper;
      report.upper_margin = std::min(*report.upper_margin, upper_margin);
      if (upper_margin < kSlack) {
        throw BoundViolation("upper bound violated: quotient " + std::to_string(q) + " > " +
                                 std::to_string(*c.upper),
                             a);
      }
    }
  };

  if (n >= 2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel(sigma, config.xi));
    const Eigen::VectorXd& ev = solver.eigenvalues();
    report.min_eigenvalue = ev(0);
    report.max_eigenvalue = ev(ev.size() - 1);
    for (Eigen::Index col : {Eigen::Index{0}, ev.size() - 1}) {
      std::vector<Complex> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i), col);
      check(a);
    }
  }

  for (int t = 0; t < trials; ++t) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    std::vector<Complex> a(n);
    for (Complex& z : a) z = {normal(rng), normal(rng)};
    check(a);
  }
  if (report.vectors_tested == 0) report.lower_margin = 1.0;
  return report;
}

PointConfig random_config(int n, double delta, std::uint64_t seed) {
  if (n < 1) throw DomainError("random_config needs n >= 1");
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gap(delta, 2.0 * delta);
  std::uniform_real_distribution<double> start(-10.0 * delta, 10.0 * delta);
  PointConfig c;
  c.delta = delta;
  double x = start(rng);
  for (int i = 0; i < n; ++i) {
    c.xi.push_back(x);
    x += gap(rng);
  }
  std::shuffle(c.xi.begin(), c.xi.end(), rng);
  return c;
}

double equally_spaced_min_eigenvalue(double sigma, int n) {
  check_sigma(sigma);
  if (n < 2) return 0.0;
  std::vector<double> xi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xi[i] = i;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel(sigma, xi), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

}  // namespace extremal
