#include "pgcurve/frenet.hpp"

#include <algorithm>
#include <cmath>

#include "pgcurve/error.hpp"

namespace pgcurve {

namespace {

// Shared guard for the (y'', z'') pair of an arc-length jet.
double checked_kappa_sq(double ypp, double zpp, double tol_light, double s) {
  const double ysq = ypp * ypp;
  const double zsq = zpp * zpp;
  const double q = ysq - zsq;
  if (!(std::abs(q) > tol_light * (ysq + zsq)) || q == 0.0)
    throw Error(ErrorCode::Inadmissible, "normal projection is lightlike or vanishes", s);
  return q;
}

double kappa_at(const CurveJet& c, double s) { return frenet_data(c, s).kappa; }

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const CurveJet& c, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = kappa_at(c, lm);
  const double frm = kappa_at(c, rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(c, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(c, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

FrenetData frenet_from_jet(const Jet& jet, double s, double tol_light) {
  const PGVector& d1 = jet[1];
  const PGVector& d2 = jet[2];
  const PGVector& d3 = jet[3];
  const double q = checked_kappa_sq(d2.x2, d2.x3, tol_light, s);

  FrenetData f;
  f.s = s;
  f.epsilon = q > 0.0 ? 1 : -1;
  f.kappa = std::sqrt(std::abs(q));
  const double k2 = f.kappa * f.kappa;
  // No absolute value on the numerator: torsion keeps its sign.
  f.tau = (d2.x2 * d3.x3 - d3.x2 * d2.x3) / k2;
  f.e1 = PGVector{1.0, d1.x2, d1.x3};
  f.e2 = PGVector{0.0, d2.x2, d2.x3} / f.kappa;
  f.e3 = PGVector{0.0, f.epsilon * d2.x3, f.epsilon * d2.x2} / f.kappa;
  return f;
}

FrenetData frenet_data(const CurveJet& c, double s, double tol_light) {
  if (!c.arc_length())
    throw Error(ErrorCode::NotArcLength, "Frenet data needs an arc-length parametrised curve");
  const Jet jet = c.jets(s);
  if (jet[1].x1 == 0.0) throw Error(ErrorCode::IsotropicTangent, "isotropic tangent", s);
  if (max_abs(pg_cross(jet[1], jet[2])) <=
      kInflectionTol * std::max(1.0, max_abs(jet[1]) * max_abs(jet[2])))
    throw Error(ErrorCode::Inadmissible, "inflection point", s);
  return frenet_from_jet(jet, s, tol_light);
}

CurvatureTorsion invariants_general(const PGVector& d1, const PGVector& d2, const PGVector& d3,
                                    double tol_light) {
  const double xd = d1.x1;
  if (xd == 0.0) throw Error(ErrorCode::IsotropicTangent, "dx/dt vanishes");
  if (xd < 0.0)
    throw Error(ErrorCode::InvalidArgument, "parameter must preserve orientation (dx/dt > 0)");
  const double xdd = d2.x1;
  const double xddd = d3.x1;

  // Arc-length derivatives (s = x) by the chain rule; with xdd = xddd = 0 this
  // reduces to y'' = ydd / xd^2 and y''' = yddd / xd^3.
  auto second = [&](double fd, double fdd) { return (fdd * xd - fd * xdd) / (xd * xd * xd); };
  auto third = [&](double fd, double fdd, double fddd) {
    const double num = (fddd * xd - fd * xddd) / (xd * xd * xd) -
                       3.0 * xdd * (fdd * xd - fd * xdd) / (xd * xd * xd * xd);
    return num / xd;
  };
  const double ypp = second(d1.x2, d2.x2);
  const double zpp = second(d1.x3, d2.x3);
  const double yppp = third(d1.x2, d2.x2, d3.x2);
  const double zppp = third(d1.x3, d2.x3, d3.x3);

  const double q = checked_kappa_sq(ypp, zpp, tol_light, 0.0);
  CurvatureTorsion out;
  out.kappa = std::sqrt(std::abs(q));
  out.tau = (ypp * zppp - yppp * zpp) / (out.kappa * out.kappa);
  return out;
}

double frenet_residual(const CurveJet& c, double s, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "residual step must be positive");
  const FrenetData mid = frenet_data(c, s);
  const FrenetData lo = frenet_data(c, s - h);
  const FrenetData hi = frenet_data(c, s + h);
  if (lo.epsilon != mid.epsilon || hi.epsilon != mid.epsilon)
    throw Error(ErrorCode::Inadmissible, "causal character changes within the stencil", s);

  const double inv = 1.0 / (2.0 * h);
  const double r1 = max_abs((hi.e1 - lo.e1) * inv - mid.kappa * mid.e2);
  const double r2 = max_abs((hi.e2 - lo.e2) * inv - mid.tau * mid.e3);
  const double r3 = max_abs((hi.e3 - lo.e3) * inv - mid.tau * mid.e2);
  return std::max({r1, r2, r3}) / std::max({1.0, mid.kappa, std::abs(mid.tau)});
}

double equiform_parameter(const CurveJet& c, double s0, double s1) {
  if (s0 == s1) return 0.0;
  if (s1 < s0) return -equiform_parameter(c, s1, s0);
  if (!c.domain().contains(s0) || !c.domain().contains(s1))
    throw Error(ErrorCode::OutOfDomain, "integration bounds outside curve domain");
  const double fa = kappa_at(c, s0);
  const double fb = kappa_at(c, s1);
  const double fm = kappa_at(c, 0.5 * (s0 + s1));
  const double whole = simpson(s0, s1, fa, fm, fb);
  return adaptive_simpson(c, s0, s1, fa, fm, fb, whole, 1e-10, 40);
}

}  // namespace pgcurve
