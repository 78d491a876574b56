#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pgcurve/curve.hpp"
#include "pgcurve/frenet.hpp"
#include "pgcurve/vector.hpp"

namespace pgcurve {

/// Similarity-invariant description at one arc-length parameter.
///
/// rho = 1 / kappa, T = rho e1, N = rho e2, B = rho e3, K = d rho / ds,
/// Tq = tau / kappa. Kp and Tqp are arc-length derivatives of K and Tq; the
/// derivatives in the equiform parameter sigma are rho times these.
struct EquiformData {
  double s = 0.0;
  double rho = 0.0;
  double K = 0.0;
  double Tq = 0.0;
  double Kp = 0.0;
  double Tqp = 0.0;
  PGVector T, N, B;
  FrenetData frenet;

  [[nodiscard]] double K_sigma() const noexcept { return rho * Kp; }
  [[nodiscard]] double Tq_sigma() const noexcept { return rho * Tqp; }
};

/// Needs fourth-order jets (JetOrderTooLow otherwise).
[[nodiscard]] EquiformData equiform_data(const CurveJet& c, double s,
                                         double tol_light = kDefaultLightTol);

/// Equiform data over a grid. Throws Inadmissible if epsilon changes sign
/// between grid points, EmptyGrid for an empty grid.
[[nodiscard]] std::vector<EquiformData> equiform_sweep(const CurveJet& c,
                                                       std::span<const double> grid,
                                                       double tol_light = kDefaultLightTol);

/// Sup-norm defect of T' = K T + N, N' = K N + Tq B, B' = Tq N + K B where
/// ' = rho d/ds and the frame derivative is a central difference of step h.
/// Normalised by rho * max(1, |K|, |Tq|).
[[nodiscard]] double equiform_residual(const CurveJet& c, double s, double h);

enum class NaturalTag { IsotropicLogSpiral, CircularHelix, IsotropicCircle, Other };

[[nodiscard]] std::string_view to_string(NaturalTag t) noexcept;

/// K_var and Tq_var are max - min over the grid.
struct NaturalClass {
  NaturalTag tag = NaturalTag::Other;
  double K_mean = 0.0;
  double Tq_mean = 0.0;
  double K_var = 0.0;
  double Tq_var = 0.0;
};

/// A quantity is zero when its sup-norm is below tol_zero, and constant
/// non-zero when max - min < tol_const * max(1, mean |.|) with
/// mean |.| >= tol_zero. Grids need >= 5 points.
[[nodiscard]] NaturalClass natural_class(const CurveJet& c, std::span<const double> grid,
                                         double tol_const = 1e-6, double tol_zero = 1e-8);

}  // namespace pgcurve
