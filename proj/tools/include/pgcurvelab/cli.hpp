#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pgcurvelab {

enum class Command { Eval, Classify, Bertrand, ZooList, Figure };
enum class Format { Csv, Json };

/// start:stop:count, or a single point when count == 1.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;
};

/// Unset entries default by jet kind: analytic curves use 1e-8 (classify,
/// zero) and 1e-6 (constant), finite-difference curves 1e-5 and 1e-4.
struct Tolerances {
  std::optional<double> classify;
  std::optional<double> zero;
  std::optional<double> constant;
  double light = 1e-10;
};

struct RunConfig {
  Command command = Command::ZooList;
  std::string curve;
  std::optional<double> a, b;
  std::optional<std::string> input;
  std::optional<GridSpec> grid;
  std::optional<double> lambda;
  Tolerances tol;
  std::string out = "-";
  Format format = Format::Csv;
  int figure = 0;
};

enum ExitCode : int { kOk = 0, kValidation = 2, kInadmissible = 3 };

/// Parses "start:stop:count" or a single number.
[[nodiscard]] GridSpec parse_grid(const std::string& text);

/// Throws pgcurve::Error(InvalidArgument) on a malformed command line.
[[nodiscard]] RunConfig parse_args(const std::vector<std::string>& args);

/// Executes one command. Output goes to config.out ("-" is `out`),
/// diagnostics as JSON lines to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with error mapping to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, shortest exponent form.
[[nodiscard]] std::string format_double(double v);

}  // namespace pgcurvelab
