#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgcurve/aw.hpp"
#include "pgcurve/curve.hpp"
#include "pgcurve/vector.hpp"

namespace pgcurve {

using ScalarFn = std::function<double(double)>;

/// Closed forms for the invariants of a fixture, as functions of s.
struct ZooOracle {
  ScalarFn kappa, tau, K, Tq;
  int epsilon = 1;
  PositionFn e1, e2, e3;
  PositionFn T, N, B;

  /// Reference values that disagree with the definitions, when the source
  /// formulas carry a sign slip; empty otherwise.
  ScalarFn Tq_reference;
  PositionFn e3_reference;
};

struct ZooEntry {
  std::string name;
  std::string description;
  double a = 0.0;
  double b = 0.0;
  Interval domain;
  PositionFn position;
  CurveJet curve;
  ZooOracle oracle;
  std::vector<std::string> notes;
  /// Types the reference literature assigns to the curve, if stated.
  std::optional<std::vector<AwType>> reference_aw;
};

struct FixtureInfo {
  std::string name;
  std::string description;
  std::string constraints;
  double default_a = 1.0;
  double default_b = 1.0;
};

[[nodiscard]] const std::vector<FixtureInfo>& list_fixtures();

/// Default domain for a fixture and parameters. Throws UnknownName.
[[nodiscard]] Interval default_domain(std::string_view name, double a, double b);

/// Throws UnknownName or ParamConstraintViolated.
[[nodiscard]] ZooEntry get_example(std::string_view name, double a, double b,
                                   std::optional<Interval> domain = std::nullopt);

/// (s, (a/b^2) cosh bs, (a/b^2) sinh bs): kappa = a, tau = b. Requires a > 0.
[[nodiscard]] ZooEntry bertrand_fixture(double a, double b,
                                        std::optional<Interval> domain = std::nullopt);

/// (s, a s^2 / 2, 0): kappa = a, tau = 0. Requires a > 0.
[[nodiscard]] ZooEntry isotropic_circle(double a, std::optional<Interval> domain = std::nullopt);

struct FigureSpec {
  std::string name;
  double a = 1.0;
  double b = 1.0;
};

/// Fixture and parameters behind figure n (1..5). Throws InvalidArgument.
[[nodiscard]] FigureSpec figure_spec(int n);

/// Compares computed invariants with the reference closed forms on the
/// grid and describes each field that disagrees.
[[nodiscard]] std::vector<std::string> reference_discrepancies(const ZooEntry& e,
                                                               std::span<const double> grid);

/// Describes each AW type whose computed verdict differs from the
/// reference classification.
[[nodiscard]] std::vector<std::string> classification_discrepancies(const ZooEntry& e,
                                                                    const AWReport& r);

}  // namespace pgcurve
