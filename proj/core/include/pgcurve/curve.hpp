#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgcurve/vector.hpp"

namespace pgcurve {

/// Closed parameter interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] constexpr double length() const noexcept { return hi - lo; }
  [[nodiscard]] constexpr bool contains(double s) const noexcept { return lo <= s && s <= hi; }
};

/// Uniform grid of n points over [lo, hi], endpoints included. n == 1 yields {lo}.
[[nodiscard]] std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Position and derivatives of orders 1..4 at one parameter value.
using Jet = std::array<PGVector, 5>;
using PositionFn = std::function<PGVector(double)>;
using JetFn = std::function<Jet(double)>;

enum class JetKind { AnalyticJets, FiniteDifference };

inline constexpr int kMaxJetOrder = 4;

/// An admissible-curve candidate seen through its jets. Instances are
/// immutable and cheap to copy; evaluation is pure.
///
/// eval(s, 0) is the point, eval(s, k) the k-th derivative in s. The domain
/// is the interval on which analyses are run; evaluation slightly outside it
/// (finite-difference stencils, residual probes) is allowed when the
/// underlying functions are defined there.
class CurveJet {
 public:
  /// arc_length, when given, replaces probing the jets for x(s) = s.
  CurveJet(JetFn jets, Interval domain, JetKind kind, int max_order = kMaxJetOrder,
           std::vector<std::string> warnings = {},
           std::optional<bool> arc_length = std::nullopt);

  [[nodiscard]] PGVector eval(double s, int order) const;
  [[nodiscard]] Jet jets(double s) const { return (*jets_)(s); }

  [[nodiscard]] const Interval& domain() const noexcept { return domain_; }
  [[nodiscard]] JetKind kind() const noexcept { return kind_; }
  /// Highest derivative order backed by real data (finite-difference curves
  /// may be built without 4th-order support).
  [[nodiscard]] int max_order() const noexcept { return max_order_; }
  /// True when x(s) = s on the probed points, i.e. s is the arc length.
  [[nodiscard]] bool arc_length() const noexcept { return arc_length_; }
  [[nodiscard]] const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  std::shared_ptr<const JetFn> jets_;
  Interval domain_;
  JetKind kind_;
  int max_order_;
  bool arc_length_ = false;
  std::vector<std::string> warnings_;
};

struct JetFunctions {
  PositionFn position;
  PositionFn d1, d2, d3, d4;
};

/// Curve from closed-form derivative functions. At five pseudo-random
/// interior points each supplied d_k is compared with a central difference
/// of d_{k-1}; mismatches beyond 1e-4 relative are recorded as warnings.
/// A constant offset in x(s) = s + c is removed.
[[nodiscard]] CurveJet make_analytic_curve(JetFunctions fns, Interval domain);

/// Step layout used by the finite-difference constructor. Samples are taken
/// on the lattice s + n*h; the order-k derivative uses a fourth-order central
/// stencil with steps 2*m_k*h and m_k*h combined by one Richardson step.
struct StencilPlan {
  double h = 0.0;
  std::array<int, 5> multiples{};  // m_k, index 0 unused

  /// Largest |offset| from s touched by any stencil.
  [[nodiscard]] double reach() const noexcept;
};

[[nodiscard]] StencilPlan stencil_plan(double h);

/// eps^(1/6) * max(1, |lo|, |hi|).
[[nodiscard]] double default_fd_step(Interval domain);

/// Curve whose derivatives are rebuilt from positions by central finite
/// differences. The position must be evaluable on the domain widened by
/// stencil_plan(h).reach().
[[nodiscard]] CurveJet make_sampled_curve(PositionFn position, Interval domain, double h,
                                          int max_order = kMaxJetOrder);
[[nodiscard]] CurveJet make_sampled_curve(PositionFn position, Interval domain);

/// Finite-difference curve over uniformly spaced samples (s_i, p_i). The
/// returned domain is the sample range shrunk by the stencil reach; jets can
/// only be evaluated at lattice parameters.
[[nodiscard]] CurveJet make_lattice_curve(std::span<const double> params,
                                          std::span<const PGVector> points,
                                          int max_order = kMaxJetOrder);

inline constexpr double kDefaultLightTol = 1e-10;
inline constexpr double kInflectionTol = 1e-12;

struct AdmissibilityReport {
  bool admissible = false;
  double worst_inflection_margin = 0.0;
  double worst_lightlike_margin = 0.0;
  std::vector<double> failing_params;
};

[[nodiscard]] AdmissibilityReport check_admissibility(const CurveJet& c,
                                                      std::span<const double> grid,
                                                      double tol_light = kDefaultLightTol);

/// Homothety with centre at the origin, re-expressed in the new arc length:
/// s' = mu s, jets of order k scale by mu^(1-k).
[[nodiscard]] CurveJet apply_homothety(const CurveJet& c, double mu);

}  // namespace pgcurve
