#include "pgcurve/aw.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pgcurve/error.hpp"

namespace pgcurve {

namespace {

constexpr double kDegenerateRel = 1e-14;

PGVector projection(const PGVector& v, const PGVector& u) {
  return (pg_dot(v, u) / pg_dot(u, u)) * u;
}

// Coefficients of v in {e2, e3} where e2 = N / rho, e3 = B / rho; boost
// invariant, unlike the raw components.
double frame_norm(const PGVector& v, const QVectors& q) {
  return std::max(std::abs(pg_dot(v, q.N)), std::abs(pg_dot(v, q.B))) / q.scalars.rho;
}

}  // namespace

QVectors q_vectors_from(const EquiformScalars& sc, const PGVector& N, const PGVector& B,
                        double s) {
  QVectors q;
  q.s = s;
  q.scalars = sc;
  q.N = N;
  q.B = B;
  const double r = sc.rho;
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double r4 = r2 * r2;
  q.a11 = -sc.K / r3;
  q.a12 = sc.Tq / r3;
  q.a21 = (2.0 * sc.K * sc.K + sc.Tq * sc.Tq - sc.K_sigma) / r4;
  q.a22 = (sc.Tq_sigma - 3.0 * sc.K * sc.Tq) / r4;
  q.alpha = q.a21;
  q.beta = q.a22;
  q.Q1 = N / r2;
  q.Q2 = q.a11 * N + q.a12 * B;
  q.Q3 = q.a21 * N + q.a22 * B;
  return q;
}

QVectors q_vectors_from(const EquiformData& e) {
  const EquiformScalars sc{e.rho, e.K, e.Tq, e.K_sigma(), e.Tq_sigma(), e.frenet.epsilon};
  return q_vectors_from(sc, e.N, e.B, e.s);
}

QVectors q_vectors(const CurveJet& c, double s) { return q_vectors_from(equiform_data(c, s)); }

StarVectors star_vectors(const QVectors& q) {
  const double n1 = pg_dot(q.Q1, q.Q1);
  if (n1 == 0.0) throw Error(ErrorCode::Q1Lightlike, "Q1 is lightlike", q.s);
  StarVectors out;
  out.Q1star = q.Q1 / std::sqrt(std::abs(n1));
  const PGVector rest = q.Q2 - projection(q.Q2, out.Q1star);
  const double n2 = pg_dot(rest, rest);
  const double scale = max_abs(q.Q2);
  if (!(std::abs(n2) > kDegenerateRel * scale * scale)) return out;
  out.Q2star = rest / std::sqrt(std::abs(n2));
  return out;
}

std::string_view to_string(AwType t) noexcept {
  switch (t) {
    case AwType::AW1: return "AW1";
    case AwType::AW2: return "AW2";
    case AwType::AW3: return "AW3";
    case AwType::WeakAW2: return "WeakAW2";
    case AwType::WeakAW3: return "WeakAW3";
  }
  return "AW?";
}

std::optional<AwType> aw_type_from_string(std::string_view name) noexcept {
  for (AwType t : kAllAwTypes)
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::vector<AwType> AWReport::holding() const {
  std::vector<AwType> out;
  for (AwType t : kAllAwTypes)
    if (entries[t].holds) out.push_back(t);
  return out;
}

double aw_scale(const EquiformScalars& sc) noexcept {
  return std::max({sc.K * sc.K, sc.Tq * sc.Tq, std::abs(sc.K_sigma), std::abs(sc.Tq_sigma), 1.0});
}

AwArray<double> aw_conditions(const QVectors& q) {
  const EquiformScalars& sc = q.scalars;
  const double omega = aw_scale(sc);
  const double n_part = std::abs(2.0 * sc.K * sc.K + sc.Tq * sc.Tq - sc.K_sigma);
  const double b_part = std::abs(sc.Tq_sigma - 3.0 * sc.K * sc.Tq);
  const double det = sc.K * sc.K * sc.Tq - sc.K * sc.Tq_sigma + sc.Tq * sc.K_sigma -
                     sc.Tq * sc.Tq * sc.Tq;
  AwArray<double> r;
  r[AwType::AW1] = std::max(n_part, b_part) / omega;
  r[AwType::AW2] = std::abs(det) / std::pow(omega, 1.5);
  r[AwType::AW3] = b_part / omega;
  r[AwType::WeakAW2] = n_part / omega;
  r[AwType::WeakAW3] = b_part / omega;
  return r;
}

AwArray<std::optional<double>> aw_vector_defects(const QVectors& q) {
  const double r = q.scalars.rho;
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double omega = aw_scale(q.scalars);
  const StarVectors star = star_vectors(q);

  AwArray<std::optional<double>> d;
  d[AwType::AW1] = r3 * frame_norm(q.Q3, q) / omega;

  const PGVector aw2 = pg_dot(q.Q2, q.Q2) * q.Q3 - pg_dot(q.Q3, q.Q2) * q.Q2;
  const double q2n = frame_norm(q.Q2, q);
  d[AwType::AW2] = q2n > 0.0 ? r3 * r2 * frame_norm(aw2, q) / (q2n * std::pow(omega, 1.5)) : 0.0;

  const PGVector aw3 = pg_dot(q.Q1, q.Q1) * q.Q3 - pg_dot(q.Q3, q.Q1) * q.Q1;
  d[AwType::AW3] = r3 * r2 * frame_norm(aw3, q) / omega;

  d[AwType::WeakAW3] = r3 * frame_norm(q.Q3 - projection(q.Q3, star.Q1star), q) / omega;

  if (star.Q2star) {
    d[AwType::WeakAW2] = r3 * frame_norm(q.Q3 - projection(q.Q3, *star.Q2star), q) / omega;
  } else if (q.Q3 == PGVector{}) {
    d[AwType::WeakAW2] = 0.0;
  }
  return d;
}

double default_aw_tolerance(JetKind kind) noexcept {
  return kind == JetKind::AnalyticJets ? 1e-8 : 1e-5;
}

AWReport classify(const CurveJet& c, std::span<const double> grid, std::optional<double> tol) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "grid is empty");
  AWReport rep;
  rep.tolerance = tol.value_or(default_aw_tolerance(c.kind()));
  if (!(rep.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  const auto data = equiform_sweep(c, grid);
  AwArray<std::size_t> disagreements;
  AwArray<double> first_disagreement;
  for (const EquiformData& e : data) {
    const QVectors q = q_vectors_from(e);
    const auto scalar = aw_conditions(q);
    const auto vec = aw_vector_defects(q);
    if (!star_vectors(q).Q2star) rep.degenerate_points.push_back(e.s);
    for (AwType t : kAllAwTypes) {
      AwEntry& entry = rep.entries[t];
      entry.sup_residual = std::max(entry.sup_residual, scalar[t]);
      if (vec[t] && ((scalar[t] < rep.tolerance) != (*vec[t] < rep.tolerance))) {
        if (disagreements[t]++ == 0) first_disagreement[t] = e.s;
      }
    }
  }
  for (AwType t : kAllAwTypes) {
    AwEntry& entry = rep.entries[t];
    entry.grid_size = grid.size();
    entry.holds = entry.sup_residual < rep.tolerance;
    if (disagreements[t] > 0) {
      std::ostringstream os;
      os << to_string(t) << ": scalar and vector tests disagree at " << disagreements[t]
         << " point(s), first at s=" << first_disagreement[t];
      rep.diagnostics.push_back(os.str());
    }
  }
  if (!rep.degenerate_points.empty()) {
    std::ostringstream os;
    os << "Q2* degenerate at " << rep.degenerate_points.size()
       << " point(s); WeakAW2 vector form checked only where Q3 = 0";
    rep.diagnostics.push_back(os.str());
  }
  return rep;
}

}  // namespace pgcurve
