#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "extremal/gaussian_extremal.hpp"
#include "extremal/report.hpp"
#include "extremal/subordination.hpp"
#include "extremal/theta.hpp"

namespace extremal::cli {

/// start, start + step, ... while below stop + step/2.
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.1;
  std::vector<double> points() const;
};

struct ThetaCmd {
  ThetaKind kind = ThetaKind::Theta3;
  double lambda = 1.0;
  std::vector<double> v;
  bool derivative = false;
};

struct ExtremalCmd {
  ExtremalKind kind = ExtremalKind::BestApprox;
  double lambda = 1.0;
  double delta = 1.0;
  std::vector<double> x;
};

struct DefectsCmd {
  std::vector<double> lambdas;
  double delta = 1.0;
};

struct TrigCmd {
  ExtremalKind kind = ExtremalKind::Majorant;
  double lambda = 1.0;
  int degree = 0;
  std::vector<double> x;
  bool coefficients = false;
};

struct SubordinateCmd {
  CatalogFunction fn;
  ExtremalKind kind = ExtremalKind::Minorant;
  std::vector<double> x;
  bool defect = false;
};

struct HilbertCmd {
  double sigma = 1.0;
  std::optional<double> delta;
  std::vector<double> points;  // empty means equally spaced with `count` points
  int count = 0;
  int trials = 100;
  std::uint64_t seed = 1;
};

struct VerifyCmd {
  std::string suite;
  std::uint64_t seed = 20240601;
};

struct Table1Cmd {
  std::vector<double> lambdas;
};

using Action = std::variant<ThetaCmd, ExtremalCmd, DefectsCmd, TrigCmd, SubordinateCmd,
                            HilbertCmd, VerifyCmd, Table1Cmd>;

struct Command {
  OutputFormat format = OutputFormat::Csv;
  Action action;
};

/// Thrown by parse for --help; what() is the help text.
class HelpRequested : public std::exception {
 public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const char* what() const noexcept override { return text_.c_str(); }

 private:
  std::string text_;
};

/// Parses arguments (without the program name). Throws UsageError naming the
/// offending flag, or HelpRequested.
Command parse(const std::vector<std::string>& args);

/// Executes a parsed command. Returns 0 on success, 1 on a validation or
/// numerical error, 2 when a verification fails.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse + run with every error mapped to an exit code and a one-line
/// diagnostic on `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
