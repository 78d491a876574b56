#pragma once

#include "pgcurve/curve.hpp"
#include "pgcurve/vector.hpp"

namespace pgcurve {

/// Curvature, torsion and trihedron at one arc-length parameter.
///
/// e2 = (0, y'', z'') / kappa and e3 = epsilon (0, z'', y'') / kappa with
/// epsilon = sign(y''^2 - z''^2), which makes det(e1, e2, e3) = 1,
/// <e2, e2> = epsilon and <e3, e3> = -epsilon.
struct FrenetData {
  double s = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  int epsilon = 1;
  PGVector e1, e2, e3;
};

/// Frenet data straight from an arc-length jet (orders 1..3 are read).
[[nodiscard]] FrenetData frenet_from_jet(const Jet& jet, double s,
                                         double tol_light = kDefaultLightTol);

/// Throws NotArcLength for curves not parametrised by x(s) = s and
/// Inadmissible where the normal projection is (near) lightlike.
[[nodiscard]] FrenetData frenet_data(const CurveJet& c, double s,
                                     double tol_light = kDefaultLightTol);

struct CurvatureTorsion {
  double kappa = 0.0;
  double tau = 0.0;
};

/// Curvature and torsion from derivatives with respect to an arbitrary
/// parameter t (d1 = dγ/dt, ...). Only orientation-preserving parameters
/// (dx/dt > 0) are accepted.
[[nodiscard]] CurvatureTorsion invariants_general(const PGVector& d1, const PGVector& d2,
                                                  const PGVector& d3,
                                                  double tol_light = kDefaultLightTol);

/// Sup-norm defect of e1' = kappa e2, e2' = tau e3, e3' = tau e2 with frame
/// derivatives by central difference of step h, over max(1, kappa, |tau|).
[[nodiscard]] double frenet_residual(const CurveJet& c, double s, double h);

/// Integral of kappa from s0 to s1 (adaptive Simpson, absolute tolerance
/// 1e-10); antisymmetric in its bounds.
[[nodiscard]] double equiform_parameter(const CurveJet& c, double s0, double s1);

}  // namespace pgcurve
