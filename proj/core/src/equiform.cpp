#include "pgcurve/equiform.hpp"

#include <algorithm>
#include <cmath>

#include "pgcurve/error.hpp"

namespace pgcurve {

EquiformData equiform_data(const CurveJet& c, double s, double tol_light) {
  if (c.max_order() < 4)
    throw Error(ErrorCode::JetOrderTooLow, "equiform data needs fourth-order jets");
  const FrenetData f = frenet_data(c, s, tol_light);
  const Jet jet = c.jets(s);
  const double p2 = jet[2].x2, q2 = jet[2].x3;
  const double p3 = jet[3].x2, q3 = jet[3].x3;
  const double p4 = jet[4].x2, q4 = jet[4].x3;
  const double k = f.kappa;
  const double eps = f.epsilon;

  const double k1 = eps * (p2 * p3 - q2 * q3) / k;
  const double k2 = (eps * (p3 * p3 - q3 * q3 + p2 * p4 - q2 * q4) - k1 * k1) / k;
  const double n = p2 * q3 - p3 * q2;
  const double n1 = p2 * q4 - p4 * q2;
  const double tau1 = n1 / (k * k) - 2.0 * n * k1 / (k * k * k);

  EquiformData e;
  e.s = s;
  e.frenet = f;
  e.rho = 1.0 / k;
  e.K = -k1 / (k * k);
  e.Tq = f.tau / k;
  e.Kp = -k2 / (k * k) + 2.0 * k1 * k1 / (k * k * k);
  e.Tqp = tau1 / k - f.tau * k1 / (k * k);
  e.T = e.rho * f.e1;
  e.N = e.rho * f.e2;
  e.B = e.rho * f.e3;
  return e;
}

std::vector<EquiformData> equiform_sweep(const CurveJet& c, std::span<const double> grid,
                                         double tol_light) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "grid is empty");
  std::vector<EquiformData> out;
  out.reserve(grid.size());
  for (double s : grid) {
    out.push_back(equiform_data(c, s, tol_light));
    if (out.back().frenet.epsilon != out.front().frenet.epsilon)
      throw Error(ErrorCode::Inadmissible, "epsilon changes sign on the grid", s);
  }
  return out;
}

double equiform_residual(const CurveJet& c, double s, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "residual step must be positive");
  const EquiformData m = equiform_data(c, s);
  const FrenetData lo = frenet_data(c, s - h);
  const FrenetData hi = frenet_data(c, s + h);
  if (lo.epsilon != m.frenet.epsilon || hi.epsilon != m.frenet.epsilon)
    throw Error(ErrorCode::Inadmissible, "causal character changes within the stencil", s);

  const double scale = m.rho / (2.0 * h);
  auto d = [&](const FrenetData& a, const FrenetData& b, PGVector FrenetData::*e) {
    return scale * (b.*e / b.kappa - a.*e / a.kappa);
  };
  const double r1 = max_abs(d(lo, hi, &FrenetData::e1) - (m.K * m.T + m.N));
  const double r2 = max_abs(d(lo, hi, &FrenetData::e2) - (m.K * m.N + m.Tq * m.B));
  const double r3 = max_abs(d(lo, hi, &FrenetData::e3) - (m.Tq * m.N + m.K * m.B));
  return std::max({r1, r2, r3}) / (m.rho * std::max({1.0, std::abs(m.K), std::abs(m.Tq)}));
}

std::string_view to_string(NaturalTag t) noexcept {
  switch (t) {
    case NaturalTag::IsotropicLogSpiral: return "IsotropicLogSpiral";
    case NaturalTag::CircularHelix: return "CircularHelix";
    case NaturalTag::IsotropicCircle: return "IsotropicCircle";
    case NaturalTag::Other: return "Other";
  }
  return "Other";
}

NaturalClass natural_class(const CurveJet& c, std::span<const double> grid, double tol_const,
                           double tol_zero) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "grid is empty");
  if (grid.size() < 5)
    throw Error(ErrorCode::InvalidArgument, "natural classification needs at least 5 points");
  const auto data = equiform_sweep(c, grid);

  struct Stats {
    double mean = 0.0, mean_abs = 0.0, lo = 0.0, hi = 0.0, sup = 0.0;
  };
  auto stats = [&](double EquiformData::*field) {
    Stats st;
    st.lo = st.hi = data.front().*field;
    for (const auto& e : data) {
      const double v = e.*field;
      st.mean += v;
      st.mean_abs += std::abs(v);
      st.lo = std::min(st.lo, v);
      st.hi = std::max(st.hi, v);
      st.sup = std::max(st.sup, std::abs(v));
    }
    st.mean /= static_cast<double>(data.size());
    st.mean_abs /= static_cast<double>(data.size());
    return st;
  };
  const Stats k = stats(&EquiformData::K);
  const Stats t = stats(&EquiformData::Tq);

  NaturalClass out;
  out.K_mean = k.mean;
  out.Tq_mean = t.mean;
  out.K_var = k.hi - k.lo;
  out.Tq_var = t.hi - t.lo;

  auto zero = [&](const Stats& st) { return st.sup < tol_zero; };
  auto constant_nonzero = [&](const Stats& st) {
    return st.mean_abs >= tol_zero && st.hi - st.lo < tol_const * std::max(1.0, st.mean_abs);
  };
  if (zero(k) && zero(t))
    out.tag = NaturalTag::IsotropicCircle;
  else if (constant_nonzero(k) && zero(t))
    out.tag = NaturalTag::IsotropicLogSpiral;
  else if (zero(k) && constant_nonzero(t))
    out.tag = NaturalTag::CircularHelix;
  return out;
}

}  // namespace pgcurve
