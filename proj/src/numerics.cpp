#include "extremal/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace extremal {

void SeriesPolicy::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_terms < 8) {
    throw DomainError("SeriesPolicy requires rel_tol > 0, abs_tol > 0 and max_terms >= 8");
  }
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod 21-point abscissae (descending) and weights; the odd-indexed
// abscissae are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980940989, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool at_roundoff = false;
};

struct ByError {
  bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.error < rhs.error; }
};

Panel gauss_kronrod21(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 21> fv{};
  fv[10] = f(center);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[20 - j] = f(center + dx);
  }

  double resk = kWgk[10] * fv[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (int j = 0; j < 10; ++j) {
    const double pair = fv[j] + fv[20 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[20 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fv[10] - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[20 - j] - mean));
  }

  const double scale = std::abs(half);
  resabs *= scale;
  resasc *= scale;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double floor = 50.0 * kEps * resabs;
  bool roundoff = false;
  if (err <= floor) {
    err = floor;
    roundoff = true;
  }
  for (double v : fv) {
    if (!std::isfinite(v)) {
      throw NonConvergence("integrand is not finite on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    }
  }
  return {a, b, resk * half, err, roundoff};
}

}  // namespace

QuadratureResult integrate_interval(const RealFunction& f, double a, double b,
                                    const SeriesPolicy& policy,
                                    std::span<const double> breakpoints) {
  policy.validate();
  if (!(a < b)) throw DomainError("integrate_interval requires a < b");

  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> settled;
  long evaluations = 0;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = gauss_kronrod21(f, cuts[i], cuts[i + 1]);
    evaluations += 21;
    total += p.value;
    total_err += p.error;
    open.push(p);
  }

  const double min_width = 64.0 * kEps * std::max(std::abs(a), std::abs(b));
  while (!open.empty()) {
    const double tol = std::max(policy.abs_tol, policy.rel_tol * std::abs(total));
    if (total_err <= tol) break;
    if (evaluations + 42 > policy.max_terms) {
      throw NonConvergence("integrate_interval: evaluation budget exhausted (error estimate " +
                           std::to_string(total_err) + ")");
    }
    Panel worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.at_roundoff || worst.b - worst.a <= min_width) {
      settled.push_back(worst);
      continue;
    }
    const Panel left = gauss_kronrod21(f, worst.a, mid);
    const Panel right = gauss_kronrod21(f, mid, worst.b);
    evaluations += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
  }

  // Re-sum from the panels to avoid drift in the running totals.
  double value = 0.0;
  double error = 0.0;
  for (const Panel& p : settled) {
    value += p.value;
    error += p.error;
  }
  while (!open.empty()) {
    value += open.top().value;
    error += open.top().error;
    open.pop();
  }
  return {value, error, evaluations};
}

QuadratureResult integrate_semiinfinite(const RealFunction& f, EndpointHint at_zero,
                                        EndpointHint at_inf, const SeriesPolicy& policy) {
  policy.validate();
  if (at_zero.kind == EndpointHint::Kind::Power && at_zero.rate >= 1.0) {
    throw DivergentTail("integrand ~ lambda^-" + std::to_string(at_zero.rate) +
                        " is not integrable at 0");
  }
  if (at_inf.kind == EndpointHint::Kind::Power && at_inf.rate <= 1.0) {
    throw DivergentTail("integrand ~ lambda^-" + std::to_string(at_inf.rate) +
                        " is not integrable at infinity");
  }

  // lambda = e^{sign * s}, d lambda = lambda ds.
  auto half_line = [&](double sign) {
    RealFunction mapped = [&f, sign](double s) {
      const double lambda = std::exp(sign * s);
      if (lambda == 0.0 || !std::isfinite(lambda)) return 0.0;
      return f(lambda) * lambda;
    };
    QuadratureResult acc;
    double lo = 0.0;
    double width = 1.0;
    int quiet_chunks = 0;
    constexpr double kMaxS = 700.0;
    while (lo < kMaxS) {
      const double hi = std::min(lo + width, kMaxS);
      SeriesPolicy chunk_policy = policy;
      chunk_policy.abs_tol = 0.25 * std::max(policy.abs_tol, policy.rel_tol * std::abs(acc.value));
      const QuadratureResult part = integrate_interval(mapped, lo, hi, chunk_policy);
      acc.value += part.value;
      acc.abs_error_estimate += part.abs_error_estimate;
      acc.evaluations += part.evaluations;
      const double tol = std::max(policy.abs_tol, policy.rel_tol * std::abs(acc.value));
      const double edge = std::abs(mapped(hi)) * width;
      quiet_chunks = (std::abs(part.value) <= tol && edge <= tol) ? quiet_chunks + 1 : 0;
      if (quiet_chunks >= 2) return acc;
      lo = hi;
      width *= 2.0;
    }
    throw NonConvergence("integrate_semiinfinite: tail did not settle before lambda = e^700");
  };

  QuadratureResult lower = half_line(-1.0);
  QuadratureResult upper = half_line(1.0);
  return {lower.value + upper.value, lower.abs_error_estimate + upper.abs_error_estimate,
          lower.evaluations + upper.evaluations};
}

double sum_symmetric(const std::function<double(long)>& term, const SeriesPolicy& policy) {
  policy.validate();
  double sum = term(0);
  for (long n = 1; n <= policy.max_terms; ++n) {
    const double pair = term(n) + term(-n);
    sum += pair;
    if (std::abs(pair) < policy.abs_tol && std::abs(pair) <= policy.rel_tol * std::abs(sum)) {
      return sum;
    }
    if (pair == 0.0 && sum == 0.0 && n >= 4) return sum;
  }
  throw NonConvergence("sum_symmetric: no convergence within " +
                       std::to_string(policy.max_terms) + " terms");
}

double sin_pi(double x) {
  // Reduce to r in [-1, 1] with sin(pi x) = sin(pi r); the subtraction 1 - |r|
  // is exact, so integers map to an exact zero.
  double r = std::remainder(x, 2.0);
  const double sign = r < 0.0 ? -1.0 : 1.0;
  r = std::abs(r);
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(M_PI * r);
}

double cos_pi(double x) { return sin_pi(0.5 - std::abs(std::remainder(x, 2.0))); }

double sinc_pi(double x) {
  if (x == 0.0) return 1.0;
  return sin_pi(x) / (M_PI * x);
}

}  // namespace extremal
