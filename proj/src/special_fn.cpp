#include "extremal/special_fn.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "extremal/numerics.hpp"

namespace extremal {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double s) { return s <= 0.0 && s == std::floor(s); }

// Cohen, Rodriguez Villegas and Zagier, algorithm 1: sum_{k>=0} (-1)^k a(k)
// for a completely monotone sequence a.
double alternating_sum(const std::function<double(int)>& a) {
  constexpr int n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

}  // namespace

double gamma_fn(double s) {
  if (is_nonpositive_integer(s)) {
    throw PoleError("Gamma has a pole at s = " + std::to_string(s));
  }
  if (s < 0.5) {
    return M_PI / (sin_pi(s) * gamma_fn(1.0 - s));
  }
  const double z = s - 1.0;
  double x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double gamma_factor(double s) {
  if (is_nonpositive_integer(0.5 * s)) {
    throw PoleError("gamma(s) has a pole at s = " + std::to_string(s));
  }
  return std::pow(M_PI, -0.5 * s) * gamma_fn(0.5 * s);
}

double eta(double s) {
  if (!(s > 0.0)) throw DomainError("eta(s) requires s > 0");
  return alternating_sum([s](int k) { return std::pow(k + 1.0, -s); });
}

double zeta(double s) {
  if (!(s > 1.0)) throw DomainError("zeta(s) requires s > 1");
  return eta(s) / -std::expm1((1.0 - s) * std::log(2.0));
}

double dirichlet_L_chi4(double s) {
  if (!(s > 0.0)) throw DomainError("L(s, chi_4) requires s > 0");
  return alternating_sum([s](int k) { return std::pow(2.0 * k + 1.0, -s); });
}

SiCi sine_cosine_integral(double x) {
  if (!(x > 0.0)) throw DomainError("Si/Ci require x > 0");
  constexpr double kEps = 1e-17;
  if (x <= 4.0) {
    // Power series; terms peak near 4^8/8! so there is no serious cancellation.
    double si = 0.0;
    double ci = 0.0;
    double term = x;  // x^{m} / m!
    for (int m = 1; m < 200; ++m) {
      if (m > 1) term *= x / m;
      const double contrib = term / m;
      if (m % 2 == 1) {
        si += ((m / 2) % 2 == 0 ? contrib : -contrib);
      } else {
        ci += ((m / 2) % 2 == 1 ? -contrib : contrib);
      }
      if (contrib < kEps * (std::abs(si) + std::abs(ci) + 1e-300)) break;
    }
    return {si, kEulerGamma + std::log(x) + ci};
  }
  // Continued fraction for E1(ix), modified Lentz.
  using cd = std::complex<double>;
  constexpr double kTiny = 1e-300;
  cd b(1.0, x);
  cd c(1.0 / kTiny, 0.0);
  cd d = 1.0 / b;
  cd h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cd del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) {
      h *= cd(std::cos(x), -std::sin(x));
      return {M_PI / 2 + h.imag(), -h.real()};
    }
  }
  throw NonConvergence("sine_cosine_integral: continued fraction failed at x = " +
                       std::to_string(x));
}

}  // namespace extremal
