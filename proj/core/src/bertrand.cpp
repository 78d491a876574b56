#include "pgcurve/bertrand.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pgcurve/equiform.hpp"
#include "pgcurve/error.hpp"
#include "pgcurve/frenet.hpp"

namespace pgcurve {

namespace {

struct Range {
  double lo = 0.0, hi = 0.0, sum = 0.0, sup = 0.0;
  std::size_t n = 0;

  void add(double v) {
    if (n == 0) lo = hi = v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sup = std::max(sup, std::abs(v));
    sum += v;
    ++n;
  }
  [[nodiscard]] double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  [[nodiscard]] double spread() const { return hi - lo; }
  [[nodiscard]] bool constant(double tol) const {
    return spread() < tol * std::max(1.0, std::abs(mean()));
  }
};

// gamma'' * g = N with g = eps / (y''^2 - z''^2); returns the mate jets of
// orders 0..2.
std::array<PGVector, 3> mate_low_jets(const Jet& j, double lambda) {
  const double y2 = j[2].x2, z2 = j[2].x3, y3 = j[3].x2, z3 = j[3].x3;
  const double y4 = j[4].x2, z4 = j[4].x3;
  const double q = y2 * y2 - z2 * z2;
  if (q == 0.0) throw Error(ErrorCode::Inadmissible, "lightlike normal projection");
  const double eps = q > 0.0 ? 1.0 : -1.0;
  const double q1 = 2.0 * (y2 * y3 - z2 * z3);
  const double q2 = 2.0 * (y3 * y3 + y2 * y4 - z3 * z3 - z2 * z4);
  const double g = eps / q;
  const double g1 = -eps * q1 / (q * q);
  const double g2 = eps * (2.0 * q1 * q1 / (q * q * q) - q2 / (q * q));
  return {j[0] + lambda * g * j[2], j[1] + lambda * (g * j[3] + g1 * j[2]),
          j[2] + lambda * (g * j[4] + 2.0 * g1 * j[3] + g2 * j[2])};
}

void check_mate(const CurveJet& mate) {
  const Interval d = mate.domain();
  for (double s : linspace(d.lo, d.hi, 33)) {
    try {
      (void)frenet_data(mate, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Inadmissible) throw;
      throw Error(ErrorCode::MateInadmissible, "mate is not admissible", s);
    }
  }
}

}  // namespace

std::string_view to_string(BertrandNature n) noexcept {
  switch (n) {
    case BertrandNature::CircularHelix: return "CircularHelix";
    case BertrandNature::IsotropicCircle: return "IsotropicCircle";
    case BertrandNature::NotBertrand: return "NotBertrand";
  }
  return "NotBertrand";
}

CurveJet bertrand_mate(const CurveJet& c, double lambda) {
  if (!c.arc_length()) throw Error(ErrorCode::NotArcLength, "base curve must be in arc length");
  if (c.max_order() < 4) throw Error(ErrorCode::JetOrderTooLow, "mate needs fourth-order jets");
  if (lambda == 0.0) return c;

  const double scale = std::max({1.0, std::abs(c.domain().lo), std::abs(c.domain().hi)});
  const double H = 8e-3 * scale;
  JetFn jets = [c, lambda, H](double s) {
    const auto low = mate_low_jets(c.jets(s), lambda);
    auto second = [&](double t) { return mate_low_jets(c.jets(t), lambda)[2]; };
    // Fourth-order central stencils for the first and second derivative of
    // the exact second derivative, each with one Richardson step.
    std::array<PGVector, 9> f;
    for (int i = -4; i <= 4; ++i) f[static_cast<std::size_t>(i + 4)] = i == 0 ? low[2] : second(s + i * 0.5 * H);
    auto at = [&](int i) { return f[static_cast<std::size_t>(i + 4)]; };
    auto d1 = [&](int m, double step) {
      return (at(-2 * m) - 8.0 * at(-m) + 8.0 * at(m) - at(2 * m)) / (12.0 * step);
    };
    auto d2 = [&](int m, double step) {
      return (-1.0 * at(-2 * m) + 16.0 * at(-m) - 30.0 * at(0) + 16.0 * at(m) - at(2 * m)) /
             (12.0 * step * step);
    };
    Jet out;
    out[0] = low[0];
    out[1] = low[1];
    out[2] = low[2];
    out[3] = (16.0 * d1(1, 0.5 * H) - d1(2, H)) / 15.0;
    out[4] = (16.0 * d2(1, 0.5 * H) - d2(2, H)) / 15.0;
    return out;
  };
  CurveJet mate(std::move(jets), c.domain(), JetKind::FiniteDifference, kMaxJetOrder, {}, true);
  check_mate(mate);
  return mate;
}

CurveJet offset_curve(const CurveJet& c, std::function<double(double)> lambda) {
  if (!lambda) throw Error(ErrorCode::InvalidArgument, "empty offset function");
  if (!c.arc_length()) throw Error(ErrorCode::NotArcLength, "base curve must be in arc length");
  PositionFn pos = [c, lambda = std::move(lambda)](double s) {
    const FrenetData f = frenet_data(c, s);
    return c.eval(s, 0) + (lambda(s) / f.kappa) * f.e2;
  };
  CurveJet mate = make_sampled_curve(std::move(pos), c.domain());
  check_mate(mate);
  return mate;
}

BertrandPair verify_bertrand_pair(const CurveJet& base, const CurveJet& mate,
                                  std::span<const double> grid, double tol,
                                  std::optional<std::function<double(double)>> lambda_fn) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "grid is empty");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  BertrandPair out{.base = base, .mate = mate};
  const auto eb = equiform_sweep(base, grid);
  const auto em = equiform_sweep(mate, grid);

  Range k, km, lam, tp;
  double parallel = 0.0, lambda_mismatch = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    k.add(eb[i].K);
    km.add(em[i].K);
    const PGVector& n = eb[i].N;
    const PGVector& nm = em[i].N;
    const double nn = std::hypot(n.x2, n.x3);
    const double nmn = std::hypot(nm.x2, nm.x3);
    parallel = std::max(parallel, std::abs(n.x2 * nm.x3 - n.x3 * nm.x2) / (nn * nmn));

    const PGVector diff = mate.eval(s, 0) - base.eval(s, 0);
    const double l = (diff.x2 * n.x2 + diff.x3 * n.x3) / (nn * nn);
    lam.add(l);
    if (lambda_fn) lambda_mismatch = std::max(lambda_mismatch, std::abs(l - (*lambda_fn)(s)));
    tp.add(pg_dot(em[i].T, eb[i].T));
  }

  out.K_sup = k.sup;
  out.K_mate_sup = km.sup;
  out.normal_parallel_sup = parallel;
  out.lambda = lam.mean();
  out.lambda_spread = lam.spread();
  out.tangent_product_mean = tp.mean();
  out.tangent_product_var = tp.spread();

  auto note = [&](const std::string& msg) { out.diagnostics.push_back(msg); };
  const bool k_zero = k.sup < tol && km.sup < tol;
  if (!k_zero) note("K does not vanish on both curves");
  const bool par = parallel < tol;
  if (!par) note("principal normals are not parallel");
  const bool lam_const = lam.constant(tol);
  if (!lam_const) note("offset is not constant");
  const bool tp_const = tp.constant(tol);
  if (!tp_const) note("tangent product is not constant");
  bool lam_match = true;
  if (lambda_fn && !(lambda_mismatch < tol * std::max(1.0, lam.sup))) {
    std::ostringstream os;
    os << "recovered offset differs from the given one by " << lambda_mismatch;
    note(os.str());
    lam_match = false;
  }
  out.is_pair = k_zero && par && lam_const && tp_const && lam_match;
  out.nature = bertrand_nature(base, grid, tol);
  return out;
}

BertrandNature bertrand_nature(const CurveJet& c, std::span<const double> grid, double tol) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "grid is empty");
  Range k, t;
  for (const auto& e : equiform_sweep(c, grid)) {
    k.add(e.K);
    t.add(e.Tq);
  }
  if (!(k.sup < tol)) return BertrandNature::NotBertrand;
  if (t.sup < tol) return BertrandNature::IsotropicCircle;
  if (t.constant(tol)) return BertrandNature::CircularHelix;
  return BertrandNature::NotBertrand;
}

}  // namespace pgcurve
