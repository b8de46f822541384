#include "extremal/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "extremal/hilbert.hpp"
#include "extremal/suites.hpp"
#include "extremal/trig_extremal.hpp"

namespace extremal::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

ThetaKind parse_theta_kind(const std::string& name) {
  const std::string s = lower(name);
  if (s == "theta1" || s == "1") return ThetaKind::Theta1;
  if (s == "theta2" || s == "2") return ThetaKind::Theta2;
  if (s == "theta3" || s == "3") return ThetaKind::Theta3;
  throw UsageError("--kind: unknown theta kind '" + name + "' (expected theta1, theta2 or theta3)");
}

std::string theta_label(ThetaKind k) {
  switch (k) {
    case ThetaKind::Theta1:
      return "theta1";
    case ThetaKind::Theta2:
      return "theta2";
    case ThetaKind::Theta3:
      return "theta3";
  }
  return "?";
}

void require_positive(double v, const std::string& flag) {
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(flag + " must be > 0");
}

Grid make_grid(const std::vector<double>& g) {
  if (g.size() != 3) throw UsageError("--grid takes START STOP STEP");
  Grid grid{g[0], g[1], g[2]};
  if (!(grid.start < grid.stop)) throw UsageError("--grid requires START < STOP");
  if (!(grid.step > 0.0)) throw UsageError("--grid requires STEP > 0");
  return grid;
}

// Either explicit values or a grid, not both.
std::vector<double> points_from(const std::vector<double>& explicit_values,
                                const std::vector<double>& grid, const std::string& flag,
                                bool required) {
  if (!explicit_values.empty() && !grid.empty()) {
    throw UsageError(flag + " and --grid are mutually exclusive");
  }
  if (!grid.empty()) return make_grid(grid).points();
  if (explicit_values.empty() && required) throw UsageError("one of " + flag + " or --grid is required");
  return explicit_values;
}

CatalogFunction make_catalog(const std::string& name, double a, double lambda, double sigma,
                             double alpha, double beta, int n) {
  const std::string s = lower(name);
  if (s == "expdecay") return catalog::ExpDecay{a};
  if (s == "poisson") return catalog::PoissonKernel{a};
  if (s == "gaussian") return catalog::GaussianAtom{lambda};
  if (s == "powersigma") return catalog::PowerSigma{sigma};
  if (s == "logratio") return catalog::LogRatio{alpha, beta};
  if (s == "neglogsq") return catalog::NegLogSq{alpha};
  if (s == "powerlog") return catalog::PowerLog{n};
  throw UsageError("--fn: unknown function '" + name +
                   "' (expected expdecay, poisson, gaussian, powersigma, logratio, neglogsq, powerlog)");
}

std::string defect_formula(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::Minorant:
      return "int (G - L) = lambda^{-1/2}(1 - Theta2(0, i/lambda))";
    case ExtremalKind::Majorant:
      return "int (M - G) = lambda^{-1/2}(Theta3(0, i/lambda) - 1)";
    case ExtremalKind::BestApprox:
      return "int |G - K| = lambda^{-1/2} int Theta1(u, i/lambda) du";
  }
  return "";
}

std::string extremal_formula(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::Minorant:
      return "L = sum_{c in Z+1/2} sinc^2(x-c)[G(c) + (x-c)G'(c)]";
    case ExtremalKind::Majorant:
      return "M = sum_{n in Z} sinc^2(x-n)[G(n) + (x-n)G'(n)]";
    case ExtremalKind::BestApprox:
      return "K = sum_{c in Z+1/2} G(c) sinc(x-c)";
  }
  return "";
}

std::string subordinate_formula(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::Minorant:
      return "l = g - int (G - L) d nu";
    case ExtremalKind::Majorant:
      return "m = g + int (M - G) d nu";
    case ExtremalKind::BestApprox:
      return "k = g - int (G - K) d nu";
  }
  return "";
}

std::vector<double> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--points: cannot open '" + path + "'");
  std::vector<double> pts;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      pts.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--points: '" + tok + "' is not a number");
    }
  }
  if (pts.empty()) throw UsageError("--points: file has no numbers");
  return pts;
}

constexpr ExtremalKind kKinds[] = {ExtremalKind::Minorant, ExtremalKind::Majorant,
                                   ExtremalKind::BestApprox};

int run_verify(const VerifyCmd& c, RowWriter& w, std::ostream& err) {
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(c.suite);
  }
  bool ok = true;
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, c.seed);
    for (const Check& ch : r.checks) {
      ReportRow row;
      row.label("suite", r.name).label("check", ch.name).label("status", ch.passed ? "pass" : "fail");
      row.value("measured", ch.measured)
          .value("reference", ch.reference)
          .value("error", ch.error)
          .value("tolerance", ch.tolerance);
      row.provenance = r.summary;
      w.write(row);
      if (!ch.passed) {
        err << "verify: " << r.name << ": " << ch.name << " failed (error " << format_double(ch.error)
            << ", tolerance " << format_double(ch.tolerance) << ")"
            << (ch.note.empty() ? "" : "; " + ch.note) << '\n';
      }
    }
    ok = ok && r.passed();
  }
  return ok ? 0 : 2;
}

int run_hilbert(const HilbertCmd& c, RowWriter& w, std::ostream& err) {
  PointConfig cfg;
  if (!c.points.empty()) {
    cfg.xi = c.points;
    if (c.delta) {
      cfg.delta = *c.delta;
    } else {
      std::vector<double> s = c.points;
      std::sort(s.begin(), s.end());
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i < s.size(); ++i) gap = std::min(gap, s[i] - s[i - 1]);
      if (!(gap > 0.0)) throw DomainError("points must be distinct");
      cfg.delta = std::isfinite(gap) ? gap : 1.0;
    }
  } else {
    cfg.delta = c.delta.value_or(1.0);
    for (int i = 0; i < c.count; ++i) cfg.xi.push_back(i * cfg.delta);
  }
  const HilbertConstants k = sharp_constants(c.sigma, cfg.delta);
  try {
    const HilbertReport rep = verify_bounds(c.sigma, cfg, c.trials, c.seed);
    ReportRow row;
    row.value("sigma", c.sigma)
        .value("delta", cfg.delta)
        .value("points", static_cast<double>(cfg.xi.size()))
        .value("lower_bound", -k.lower)
        .value("min_eigenvalue", rep.min_eigenvalue)
        .value("max_eigenvalue", rep.max_eigenvalue)
        .value("lower_margin", rep.lower_margin);
    if (k.upper) row.value("upper_bound", *k.upper).value("upper_margin", *rep.upper_margin);
    row.value("vectors_tested", rep.vectors_tested);
    row.provenance = k.upper ? "-2 eta(sigma)/delta^sigma <= Q/|a|^2 <= 2 zeta(sigma)/delta^sigma"
                             : "-2 eta(sigma)/delta^sigma <= Q/|a|^2";
    w.write(row);
    return 0;
  } catch (const BoundViolation& v) {
    err << "hilbert: " << v.what() << '\n';
    return 2;
  }
}

int run_table1(const Table1Cmd& c, RowWriter& w) {
  for (double lam : c.lambdas) {
    const CatalogFunction fns[] = {catalog::GaussianAtom{lam}, catalog::ExpDecay{lam},
                                   catalog::PoissonKernel{lam}};
    const char* names[] = {"gaussian", "expdecay", "poisson"};
    for (int i = 0; i < 3; ++i) {
      for (ExtremalKind k : kKinds) {
        const DefectReport d = subordinated_defect(fns[i], k);
        ReportRow row;
        row.label("function", names[i]).label("kind", to_string(k));
        row.value("lambda", lam)
            .value("closed_form", d.closed_form.value_or(d.quadrature))
            .value("reference_form", d.reference_form.value_or(d.closed_form.value_or(d.quadrature)))
            .value("quadrature", d.quadrature);
        row.label("note", d.note);
        row.provenance = d.formula;
        w.write(row);
      }
    }
  }
  return 0;
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double x = start + static_cast<double>(i) * step;
    if (x >= stop + 0.5 * step) break;
    out.push_back(x);
  }
  return out;
}

Command parse(const std::vector<std::string>& args) {
  CLI::App app{"Extremal band-limited approximations of Gaussians and subordinated functions"};
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--format", format, "csv or json (JSON lines)")->check(CLI::IsMember({"csv", "json"}));

  std::string kind_name;
  double lambda = 1.0;
  double delta = 1.0;
  std::vector<double> xs;
  std::vector<double> grid;
  std::vector<double> lambdas;
  bool flag = false;

  auto* th = app.add_subcommand("theta", "evaluate Theta1/Theta2/Theta3 at tau = i*lambda");
  th->add_option("--kind", kind_name, "theta1, theta2 or theta3")->required();
  th->add_option("--lambda", lambda, "lambda > 0")->required();
  th->add_option("--v", xs, "argument(s) v");
  th->add_option("--grid", grid, "START STOP STEP")->expected(3);
  th->add_flag("--derivative", flag, "d/dv instead of the value");

  auto* ex = app.add_subcommand("extremal", "evaluate K, L or M");
  ex->add_option("--kind", kind_name, "bestapprox, minorant or majorant")->required();
  ex->add_option("--lambda", lambda, "lambda > 0")->required();
  ex->add_option("--delta", delta, "type scale delta > 0");
  ex->add_option("--x", xs, "point(s) x");
  ex->add_option("--grid", grid, "START STOP STEP")->expected(3);

  auto* de = app.add_subcommand("defects", "sharp L1 defects of the three extremals");
  de->add_option("--lambda", lambdas, "one or more lambda values")->required();
  de->add_option("--delta", delta, "type scale delta > 0");

  int degree = 0;
  auto* tp = app.add_subcommand("trigpoly", "extremal trigonometric polynomials for Theta3(x, i/lambda)");
  tp->add_option("--kind", kind_name, "bestapprox, minorant or majorant")->required();
  tp->add_option("--lambda", lambda, "lambda > 0")->required();
  tp->add_option("--N", degree, "degree N >= 0")->required();
  tp->add_option("--grid", grid, "START STOP STEP (default 0 1 0.01)")->expected(3);
  tp->add_flag("--coefficients", flag, "print c_0..c_N instead of values");

  std::string fn;
  double a = 1.0;
  double sigma = 1.0;
  double alpha = 0.0;
  double beta = 1.0;
  int n = 1;
  auto* su = app.add_subcommand("subordinate", "extremals and defects of subordinated functions");
  su->add_option("--fn", fn, "expdecay, poisson, gaussian, powersigma, logratio, neglogsq, powerlog")->required();
  su->add_option("--kind", kind_name, "bestapprox, minorant or majorant")->required();
  su->add_option("--a", a, "parameter a (expdecay, poisson)");
  su->add_option("--lambda", lambda, "parameter lambda (gaussian)");
  su->add_option("--sigma", sigma, "parameter sigma (powersigma)");
  su->add_option("--alpha", alpha, "parameter alpha (logratio, neglogsq)");
  su->add_option("--beta", beta, "parameter beta (logratio)");
  su->add_option("--n", n, "parameter n (powerlog)");
  su->add_option("--x", xs, "point(s) x");
  su->add_option("--grid", grid, "START STOP STEP")->expected(3);
  su->add_flag("--defect", flag, "print the integrated defect");

  std::string points_file;
  int count = 0;
  int trials = 100;
  std::uint64_t seed = 1;
  std::optional<double> hdelta;
  auto* hi = app.add_subcommand("hilbert", "check the Hilbert-type bounds for a point set");
  hi->add_option("--sigma", sigma, "sigma > 0")->required();
  hi->add_option("--delta", hdelta, "separation (default: smallest gap)");
  hi->add_option("--points", points_file, "file of whitespace-separated points");
  hi->add_option("--N", count, "use N equally spaced points");
  hi->add_option("--trials", trials, "random test vectors");
  hi->add_option("--seed", seed, "random seed");

  std::string suite;
  std::uint64_t vseed = 20240601;
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--suite", suite, "suite name or 'all'")->required();
  ve->add_option("--seed", vseed, "seed for randomized suites");

  auto* t1 = app.add_subcommand("table1", "defect table for the Gaussian, e^{-a|x|} and the Poisson kernel");
  t1->add_option("--lambda", lambdas, "one or more parameter values")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  cmd.format = format == "json" ? OutputFormat::JsonLines : OutputFormat::Csv;

  if (th->parsed()) {
    require_positive(lambda, "lambda");
    cmd.action = ThetaCmd{parse_theta_kind(kind_name), lambda, points_from(xs, grid, "--v", true), flag};
  } else if (ex->parsed()) {
    require_positive(lambda, "lambda");
    require_positive(delta, "delta");
    cmd.action = ExtremalCmd{parse_extremal_kind(kind_name), lambda, delta, points_from(xs, grid, "--x", true)};
  } else if (de->parsed()) {
    for (double l : lambdas) require_positive(l, "lambda");
    require_positive(delta, "delta");
    cmd.action = DefectsCmd{lambdas, delta};
  } else if (tp->parsed()) {
    require_positive(lambda, "lambda");
    if (degree < 0) throw UsageError("N must be >= 0");
    std::vector<double> pts = grid.empty() ? Grid{0.0, 1.0, 0.01}.points() : make_grid(grid).points();
    cmd.action = TrigCmd{parse_extremal_kind(kind_name), lambda, degree, pts, flag};
  } else if (su->parsed()) {
    SubordinateCmd s;
    s.fn = make_catalog(fn, a, lambda, sigma, alpha, beta, n);
    s.kind = parse_extremal_kind(kind_name);
    s.defect = flag;
    s.x = points_from(xs, grid, "--x", !flag);
    cmd.action = s;
  } else if (hi->parsed()) {
    require_positive(sigma, "sigma");
    if (hdelta) require_positive(*hdelta, "delta");
    HilbertCmd h;
    h.sigma = sigma;
    h.delta = hdelta;
    if (!points_file.empty() && count > 0) throw UsageError("--points and --N are mutually exclusive");
    if (!points_file.empty()) {
      h.points = read_points(points_file);
    } else if (count >= 1) {
      h.count = count;
    } else {
      throw UsageError("one of --points or --N (>= 1) is required");
    }
    if (trials < 1) throw UsageError("trials must be >= 1");
    h.trials = trials;
    h.seed = seed;
    cmd.action = h;
  } else if (ve->parsed()) {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
      throw UsageError("--suite: unknown suite '" + suite + "'");
    }
    cmd.action = VerifyCmd{suite, vseed};
  } else if (t1->parsed()) {
    for (double l : lambdas) require_positive(l, "lambda");
    cmd.action = Table1Cmd{lambdas};
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  RowWriter w(out, cmd.format);
  return std::visit(
      overloaded{
          [&](const ThetaCmd& c) {
            for (double v : c.v) {
              const ThetaParams p{v, c.lambda};
              ReportRow row;
              row.label("kind", theta_label(c.kind));
              row.value("v", v).value("lambda", c.lambda);
              row.value(c.derivative ? "derivative" : "value",
                        c.derivative ? theta_dv(c.kind, p) : theta(c.kind, p));
              row.provenance = c.kind == ThetaKind::Theta1
                                   ? "sum_n q^{(n+1/2)^2} e((n+1/2)v), q = e^{-pi lambda}"
                                   : (c.kind == ThetaKind::Theta2 ? "sum_n (-1)^n q^{n^2} e(nv)"
                                                                  : "sum_n q^{n^2} e(nv)");
              w.write(row);
            }
            return 0;
          },
          [&](const ExtremalCmd& c) {
            const ExtremalSpec spec{c.kind, c.lambda, c.delta};
            for (double x : c.x) {
              const double g = gaussian({c.lambda}, x);
              const double f = eval_extremal(spec, x);
              ReportRow row;
              row.label("kind", to_string(c.kind));
              row.value("lambda", c.lambda).value("delta", c.delta).value("x", x);
              row.value("gaussian", g).value("extremal", f).value("difference", g - f);
              row.provenance = extremal_formula(c.kind);
              w.write(row);
            }
            return 0;
          },
          [&](const DefectsCmd& c) {
            for (double lam : c.lambdas) {
              for (ExtremalKind k : kKinds) {
                ReportRow row;
                row.label("kind", to_string(k));
                row.value("lambda", lam).value("delta", c.delta);
                row.value("defect", defect_integral({k, lam, c.delta}));
                row.provenance = defect_formula(k);
                w.write(row);
              }
            }
            return 0;
          },
          [&](const TrigCmd& c) {
            const TrigPoly p = build_trig(c.kind, c.lambda, c.degree);
            if (c.coefficients) {
              for (int i = 0; i <= c.degree; ++i) {
                ReportRow row;
                row.label("kind", to_string(c.kind));
                row.value("lambda", c.lambda).value("N", c.degree).value("n", i).value("c_n", p.coeffs[i]);
                row.provenance = "c_n = lambda^{1/2} s^{-1} Fhat_{lambda/s^2}(n/s)";
                w.write(row);
              }
              return 0;
            }
            for (double x : c.x) {
              ReportRow row;
              row.label("kind", to_string(c.kind));
              row.value("lambda", c.lambda).value("N", c.degree).value("x", x);
              row.value("theta3", theta3_target(x, c.lambda)).value("polynomial", eval_trig(p, x));
              row.provenance = "c_n = lambda^{1/2} s^{-1} Fhat_{lambda/s^2}(n/s)";
              w.write(row);
            }
            return 0;
          },
          [&](const SubordinateCmd& c) {
            if (c.defect) {
              const DefectReport d = subordinated_defect(c.fn, c.kind);
              ReportRow row;
              row.label("function", describe(c.fn)).label("kind", to_string(c.kind));
              row.value("quadrature", d.quadrature).value("error_estimate", d.abs_error_estimate);
              if (d.closed_form) row.value("closed_form", *d.closed_form);
              if (d.reference_form && std::isfinite(*d.reference_form)) row.value("reference_form", *d.reference_form);
              if (!d.note.empty()) row.label("note", d.note);
              row.provenance = d.formula;
              w.write(row);
              return 0;
            }
            for (double x : c.x) {
              ReportRow row;
              row.label("function", describe(c.fn)).label("kind", to_string(c.kind));
              row.value("x", x).value("g", g_eval(c.fn, x)).value("extremal", subordinated_extremal(c.fn, c.kind, x));
              row.provenance = subordinate_formula(c.kind);
              w.write(row);
            }
            return 0;
          },
          [&](const HilbertCmd& c) { return run_hilbert(c, w, err); },
          [&](const VerifyCmd& c) { return run_verify(c, w, err); },
          [&](const Table1Cmd& c) { return run_table1(c, w); },
      },
      cmd.action);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const Command cmd = parse(args);
    return run(cmd, out, err);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace extremal::cli
