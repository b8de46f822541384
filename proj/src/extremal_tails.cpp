#include "extremal/extremal_tails.hpp"

#include <cmath>
#include <vector>

#include "extremal/special_fn.hpp"

namespace extremal {

namespace {

double sgn(double k) { return k > 0.0 ? 1.0 : (k < 0.0 ? -1.0 : 0.0); }

// int_a^inf cos(k u)/u du. The k = 0 case diverges; -log(a) keeps only the
// a-dependent part, and the dropped constant cancels in every sum below
// because the node weights it multiplies add up to zero.
double c1(double k, double a) {
  if (k == 0.0) return -std::log(a);
  return -sine_cosine_integral(std::abs(k) * a).ci;
}

// int_a^inf sin(k u)/u du
double s1(double k, double a) {
  if (k == 0.0) return 0.0;
  return sgn(k) * (M_PI / 2 - sine_cosine_integral(std::abs(k) * a).si);
}

// int_a^inf cos(k u)/u^2 du
double c2(double k, double a) {
  const double ak = std::abs(k);
  return std::cos(ak * a) / a - ak * s1(ak, a);
}

// int_a^inf sin(k u)/u^2 du
double s2(double k, double a) {
  if (k == 0.0) return 0.0;
  const double ak = std::abs(k);
  return sgn(k) * (std::sin(ak * a) / a + ak * c1(ak, a));
}

struct Node {
  double c;
  double weight;
  double slope;
};

std::vector<Node> nodes(ExtremalKind kind, double lambda, const SeriesPolicy& policy) {
  const long n_max = node_count(lambda, policy);
  std::vector<Node> out;
  const double shift = kind == ExtremalKind::Majorant ? 0.0 : 0.5;
  const long lo = kind == ExtremalKind::Majorant ? -n_max : -n_max - 1;
  for (long n = lo; n <= n_max; ++n) {
    const double c = n + shift;
    const double g = std::exp(-M_PI * lambda * c * c);
    out.push_back({c, g, -2.0 * M_PI * lambda * c * g});
  }
  return out;
}

// int_T^inf F(x) cos(omega x) dx from the node expansion of F.
double right_tail(ExtremalKind kind, const std::vector<Node>& ns, double omega, double T) {
  double sum = 0.0;
  for (const Node& nd : ns) {
    const double a = T - nd.c;
    double ic;
    double is;
    if (kind == ExtremalKind::BestApprox) {
      ic = (s1(M_PI + omega, a) + s1(M_PI - omega, a)) / (2.0 * M_PI);
      is = (c1(omega - M_PI, a) - c1(omega + M_PI, a)) / (2.0 * M_PI);
      sum += nd.weight * (std::cos(omega * nd.c) * ic - std::sin(omega * nd.c) * is);
      continue;
    }
    const double tp = 2.0 * M_PI;
    const double k = 1.0 / (2.0 * M_PI * M_PI);
    // sinc^2 part, weight G(c)
    ic = k * (c2(omega, a) - 0.5 * c2(omega + tp, a) - 0.5 * c2(omega - tp, a));
    is = k * (s2(omega, a) - 0.5 * s2(omega + tp, a) - 0.5 * s2(omega - tp, a));
    sum += nd.weight * (std::cos(omega * nd.c) * ic - std::sin(omega * nd.c) * is);
    // u sinc^2 part, weight G'(c)
    ic = k * (c1(omega, a) - 0.5 * c1(omega + tp, a) - 0.5 * c1(omega - tp, a));
    is = k * (s1(omega, a) - 0.5 * s1(omega + tp, a) - 0.5 * s1(omega - tp, a));
    sum += nd.slope * (std::cos(omega * nd.c) * ic - std::sin(omega * nd.c) * is);
  }
  return sum;
}

// int_a^inf |sin(pi u)|/u du with the log divergence replaced by -(2/pi) log a.
double abs_sin_tail(double a) {
  double sum = 0.0;
  for (int k = 1; k <= 4000; ++k) {
    sum += sine_cosine_integral(2.0 * M_PI * k * a).ci / (4.0 * k * k - 1.0);
  }
  return -2.0 / M_PI * std::log(a) + 4.0 / M_PI * sum;
}

// int_u^inf e^{-pi lambda x^2} dx
double gaussian_tail(double lambda, double u) {
  return std::erfc(u * std::sqrt(M_PI * lambda)) / (2.0 * std::sqrt(lambda));
}

// int_T^inf sgn(cos pi x) G(x) dx for integer T, cell by cell.
double signed_gaussian_tail(double lambda, double T) {
  double sum = 0.0;
  double sign = std::fmod(T, 2.0) == 0.0 ? 1.0 : -1.0;
  double lo = T;
  double hi = T + 0.5;
  for (int i = 0; i < 1000000; ++i) {
    const double piece = gaussian_tail(lambda, lo) - gaussian_tail(lambda, hi);
    sum += sign * piece;
    if (gaussian_tail(lambda, hi) == 0.0) break;
    sign = -sign;
    lo = hi;
    hi += 1.0;
  }
  return sum;
}

SeriesPolicy quad_policy(const SeriesPolicy& policy) {
  SeriesPolicy q = policy;
  q.rel_tol = std::max(policy.rel_tol, 1e-13);
  q.abs_tol = std::max(policy.abs_tol, 1e-15);
  q.max_terms = std::max(policy.max_terms, 4'000'000L);
  return q;
}

std::vector<double> half_integer_breaks(double T) {
  std::vector<double> b;
  for (double c = 0.5; c < T; c += 1.0) b.push_back(c);
  return b;
}

}  // namespace

double tail_cutoff(ExtremalKind kind, double lambda, double T, const SeriesPolicy& policy) {
  const double c_max = node_count(lambda, policy) + (kind == ExtremalKind::Majorant ? 0.0 : 0.5);
  return std::ceil(std::max(T, c_max + 1.0));
}

TailedIntegral fourier_by_quadrature(ExtremalKind kind, double lambda, double t, double T,
                                     const SeriesPolicy& policy) {
  GaussianParam{lambda}.validate();
  const double cut = tail_cutoff(kind, lambda, T, policy);
  const ExtremalSpec spec{kind, lambda, 1.0};
  const double omega = 2.0 * M_PI * t;
  RealFunction f = [&](double x) { return eval_extremal(spec, x, policy) * std::cos(omega * x); };
  const auto breaks = half_integer_breaks(cut);
  const QuadratureResult inner = integrate_interval(f, 0.0, cut, quad_policy(policy), breaks);
  const double tail = right_tail(kind, nodes(kind, lambda, policy), omega, cut);
  return {2.0 * (inner.value + tail), 2.0 * inner.value, 2.0 * inner.abs_error_estimate};
}

TailedIntegral defect_by_quadrature(ExtremalKind kind, double lambda, double T,
                                    const SeriesPolicy& policy) {
  GaussianParam{lambda}.validate();
  const double cut = tail_cutoff(kind, lambda, T, policy);
  const ExtremalSpec spec{kind, lambda, 1.0};
  const GaussianParam gp{lambda};
  RealFunction f = [&](double x) {
    const double diff = gaussian(gp, x) - eval_extremal(spec, x, policy);
    switch (kind) {
      case ExtremalKind::Minorant:
        return diff;
      case ExtremalKind::Majorant:
        return -diff;
      case ExtremalKind::BestApprox:
        return std::abs(diff);
    }
    return 0.0;
  };
  const auto breaks = half_integer_breaks(cut);
  const QuadratureResult inner = integrate_interval(f, 0.0, cut, quad_policy(policy), breaks);
  const auto ns = nodes(kind, lambda, policy);

  double tail = 0.0;
  if (kind == ExtremalKind::BestApprox) {
    // sgn(cos pi x) K(x) = -(|cos pi x| / pi) sum_n (-1)^n G(c_n) / (x - c_n)
    double k_tail = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const long n = static_cast<long>(std::floor(ns[i].c));
      const double s = (n % 2 == 0) ? 1.0 : -1.0;
      k_tail += s * ns[i].weight * abs_sin_tail(cut - ns[i].c);
    }
    k_tail *= -1.0 / M_PI;
    tail = signed_gaussian_tail(lambda, cut) - k_tail;
  } else {
    const double f_tail = right_tail(kind, ns, 0.0, cut);
    const double g_tail = gaussian_tail(lambda, cut);
    tail = kind == ExtremalKind::Minorant ? g_tail - f_tail : f_tail - g_tail;
  }
  return {2.0 * (inner.value + tail), 2.0 * inner.value, 2.0 * inner.abs_error_estimate};
}

}  // namespace extremal
