#include "pgcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "pgcurve/error.hpp"

namespace pgcurve {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Fourth-order central stencils on offsets -3..3, normalised by step^k.
constexpr std::array<std::array<double, 7>, 5> kStencil{{
    {0, 0, 0, 1, 0, 0, 0},
    {0, 1.0 / 12, -8.0 / 12, 0, 8.0 / 12, -1.0 / 12, 0},
    {0, -1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12, 0},
    {1.0 / 8, -8.0 / 8, 13.0 / 8, 0, -13.0 / 8, 8.0 / 8, -1.0 / 8},
    {-1.0 / 6, 12.0 / 6, -39.0 / 6, 56.0 / 6, -39.0 / 6, 12.0 / 6, -1.0 / 6},
}};

// Preferred coarse step 2*m_k*h per order. Round-off in double grows like
// eps/step^k, truncation of the Richardson-combined stencil like step^6;
// these sit near the crossover for O(1)-scaled curves.
constexpr std::array<double, 5> kTargetStep{0.0, 8e-3, 8e-3, 1.6e-2, 3.2e-2};

constexpr int stencil_half_width(int order) { return order <= 2 ? 2 : 3; }

bool probe_arc_length(const JetFn& jets, Interval domain) {
  for (int i = 0; i < 5; ++i) {
    const double s = domain.lo + (i + 0.5) / 5.0 * domain.length();
    const Jet j = jets(s);
    if (std::abs(j[1].x1 - 1.0) > 1e-8) return false;
    if (std::abs(j[0].x1 - s) > 1e-9 * std::max(1.0, std::abs(s))) return false;
  }
  return true;
}

// If x(s) = s + c for a constant c, returns c; otherwise 0.
double arc_length_offset(const JetFn& jets, Interval domain) {
  const double mid = 0.5 * (domain.lo + domain.hi);
  const double c = jets(mid)[0].x1 - mid;
  if (c == 0.0) return 0.0;
  for (int i = 0; i < 5; ++i) {
    const double s = domain.lo + (i + 0.5) / 5.0 * domain.length();
    const Jet j = jets(s);
    if (std::abs(j[1].x1 - 1.0) > 1e-8) return 0.0;
    if (std::abs(j[0].x1 - s - c) > 1e-9 * std::max({1.0, std::abs(s), std::abs(c)})) return 0.0;
  }
  return c;
}

JetFn shift_x(JetFn jets, double c) {
  return [jets = std::move(jets), c](double s) {
    Jet j = jets(s);
    j[0].x1 -= c;
    return j;
  };
}

void validate_domain(Interval domain) {
  if (!(domain.lo < domain.hi)) {
    std::ostringstream os;
    os << "domain [" << domain.lo << ", " << domain.hi << "] is empty";
    throw Error(ErrorCode::DomainEmpty, os.str());
  }
}

// Finite-difference jets from a sampler taking integer lattice offsets.
template <typename Sampler>
Jet fd_jets(const StencilPlan& plan, int max_order, Sampler&& sample) {
  // Small memo over integer offsets; at most a few dozen distinct entries.
  std::vector<std::pair<int, PGVector>> memo;
  memo.reserve(48);
  auto at = [&](int n) -> const PGVector& {
    for (const auto& [k, v] : memo)
      if (k == n) return v;
    memo.emplace_back(n, sample(n));
    return memo.back().second;
  };

  Jet out{};
  out[0] = at(0);
  for (int k = 1; k <= max_order; ++k) {
    const int m = plan.multiples[k];
    const int w = stencil_half_width(k);
    auto diff = [&](int step_mult) {
      PGVector acc{};
      for (int j = -w; j <= w; ++j) {
        const double c = kStencil[k][j + 3];
        if (c != 0.0) acc += c * at(j * step_mult);
      }
      return acc / std::pow(step_mult * plan.h, k);
    };
    const PGVector fine = diff(m);
    const PGVector coarse = diff(2 * m);
    out[k] = (16.0 * fine - coarse) / 15.0;
  }
  return out;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 0) return out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  out.back() = hi;
  return out;
}

CurveJet::CurveJet(JetFn jets, Interval domain, JetKind kind, int max_order,
                   std::vector<std::string> warnings, std::optional<bool> arc_length)
    : jets_(std::make_shared<const JetFn>(std::move(jets))),
      domain_(domain),
      kind_(kind),
      max_order_(max_order),
      warnings_(std::move(warnings)) {
  validate_domain(domain_);
  if (!*jets_) throw Error(ErrorCode::InvalidArgument, "empty jet function");
  if (max_order_ < 2 || max_order_ > kMaxJetOrder)
    throw Error(ErrorCode::InvalidArgument, "max_order must lie in [2, 4]");
  arc_length_ = arc_length ? *arc_length : probe_arc_length(*jets_, domain_);
}

PGVector CurveJet::eval(double s, int order) const {
  if (order < 0 || order > kMaxJetOrder)
    throw Error(ErrorCode::InvalidArgument, "jet order must lie in [0, 4]");
  if (order > max_order_)
    throw Error(ErrorCode::JetOrderTooLow, "curve carries jets up to order " +
                                               std::to_string(max_order_));
  return jets(s)[static_cast<std::size_t>(order)];
}

CurveJet make_analytic_curve(JetFunctions fns, Interval domain) {
  validate_domain(domain);
  const std::array<PositionFn, 5> f{fns.position, fns.d1, fns.d2, fns.d3, fns.d4};
  for (const auto& fn : f)
    if (!fn) throw Error(ErrorCode::InvalidArgument, "all five jet functions are required");

  std::vector<std::string> warnings;
  std::mt19937_64 rng(0x5eed'c0de'2024ULL);
  std::uniform_real_distribution<double> pick(domain.lo, domain.hi);
  for (int probe = 0; probe < 5; ++probe) {
    const double s = pick(rng);
    const double d = 1e-3 * std::max(1.0, std::abs(s));
    for (int k = 1; k <= kMaxJetOrder; ++k) {
      const auto& lower = f[static_cast<std::size_t>(k - 1)];
      const PGVector fd =
          (lower(s - 2 * d) - 8.0 * lower(s - d) + 8.0 * lower(s + d) - lower(s + 2 * d)) /
          (12.0 * d);
      const PGVector given = f[static_cast<std::size_t>(k)](s);
      const double dev = max_abs(given - fd);
      const double bound = 1e-4 * std::max(max_abs(given), max_abs(fd)) +
                           1e-8 * std::max(1.0, max_abs(lower(s)));
      if (!(dev <= bound)) {
        std::ostringstream os;
        os << "d" << k << " inconsistent with d" << (k - 1) << " at s=" << s
           << " (deviation " << dev << ")";
        warnings.push_back(os.str());
      }
    }
  }

  JetFn jets = [f](double s) {
    return Jet{f[0](s), f[1](s), f[2](s), f[3](s), f[4](s)};
  };
  if (const double c = arc_length_offset(jets, domain); c != 0.0) jets = shift_x(std::move(jets), c);
  return CurveJet(std::move(jets), domain, JetKind::AnalyticJets, kMaxJetOrder,
                  std::move(warnings));
}

double StencilPlan::reach() const noexcept {
  double r = 0.0;
  for (int k = 1; k <= kMaxJetOrder; ++k)
    r = std::max(r, stencil_half_width(k) * 2.0 * multiples[k] * h);
  return r;
}

StencilPlan stencil_plan(double h) {
  StencilPlan plan;
  plan.h = h;
  plan.multiples[0] = 0;
  for (int k = 1; k <= kMaxJetOrder; ++k)
    plan.multiples[k] =
        std::max(1, static_cast<int>(std::lround(kTargetStep[k] / (2.0 * h))));
  return plan;
}

double default_fd_step(Interval domain) {
  return std::pow(kEps, 1.0 / 6.0) *
         std::max({1.0, std::abs(domain.lo), std::abs(domain.hi)});
}

CurveJet make_sampled_curve(PositionFn position, Interval domain, double h, int max_order) {
  validate_domain(domain);
  if (!position) throw Error(ErrorCode::InvalidArgument, "empty position function");
  const double scale = std::max({1.0, std::abs(domain.lo), std::abs(domain.hi)});
  if (!(h >= 64.0 * kEps * scale)) {
    std::ostringstream os;
    os << "step " << h << " below 64*eps*" << scale;
    throw Error(ErrorCode::StepTooSmall, os.str());
  }
  if (domain.length() < 8.0 * h) throw Error(ErrorCode::DomainTooNarrow, "domain shorter than 8h");
  if (max_order < 2 || max_order > kMaxJetOrder)
    throw Error(ErrorCode::InvalidArgument, "max_order must lie in [2, 4]");

  const StencilPlan plan = stencil_plan(h);
  JetFn jets = [position, plan, max_order](double s) {
    return fd_jets(plan, max_order,
                   [&](int n) { return position(s + static_cast<double>(n) * plan.h); });
  };
  if (const double c = arc_length_offset(jets, domain); c != 0.0) jets = shift_x(std::move(jets), c);
  return CurveJet(std::move(jets), domain, JetKind::FiniteDifference, max_order);
}

CurveJet make_sampled_curve(PositionFn position, Interval domain) {
  return make_sampled_curve(std::move(position), domain, default_fd_step(domain));
}

CurveJet make_lattice_curve(std::span<const double> params, std::span<const PGVector> points,
                            int max_order) {
  if (params.size() != points.size())
    throw Error(ErrorCode::InvalidArgument, "parameter and point counts differ");
  if (params.size() < 8) throw Error(ErrorCode::DomainTooNarrow, "need at least 8 samples");
  const double s0 = params.front();
  const double h = (params.back() - s0) / static_cast<double>(params.size() - 1);
  if (!(h > 0.0)) throw Error(ErrorCode::DomainEmpty, "sample parameters must increase");
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double expect = s0 + static_cast<double>(i) * h;
    if (std::abs(params[i] - expect) > 1e-6 * h)
      throw Error(ErrorCode::InvalidArgument, "samples are not uniformly spaced", params[i]);
    if (!points[i].finite())
      throw Error(ErrorCode::InvalidArgument, "non-finite sample", params[i]);
  }

  const StencilPlan plan = stencil_plan(h);
  const double reach = plan.reach();
  const Interval domain{s0 + reach, params.back() - reach};
  if (!(domain.lo < domain.hi))
    throw Error(ErrorCode::DomainTooNarrow, "sample range shorter than twice the stencil reach");

  auto samples = std::make_shared<const std::vector<PGVector>>(points.begin(), points.end());
  const auto count = static_cast<long>(samples->size());
  JetFn jets = [samples, count, s0, h, plan, max_order](double s) {
    const double fi = (s - s0) / h;
    const long base = std::lround(fi);
    if (std::abs(fi - static_cast<double>(base)) > 1e-6)
      throw Error(ErrorCode::OutOfDomain, "parameter is not on the sample lattice", s);
    return fd_jets(plan, max_order, [&](int n) {
      const long idx = base + n;
      if (idx < 0 || idx >= count)
        throw Error(ErrorCode::OutOfDomain, "stencil leaves the sampled range", s);
      return (*samples)[static_cast<std::size_t>(idx)];
    });
  };

  // Probe on lattice points only.
  bool arc = true;
  double offset = points.front().x1 - s0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::abs(points[i].x1 - params[i] - offset) > 1e-9 * std::max(1.0, std::abs(params[i])))
      arc = false;
  if (!arc) throw Error(ErrorCode::NotArcLength, "sampled x must equal s + const");
  if (offset != 0.0) jets = shift_x(std::move(jets), offset);

  const double n_lo = std::ceil((domain.lo - s0) / h - 1e-9);
  const double n_hi = std::floor((domain.hi - s0) / h + 1e-9);
  return CurveJet(std::move(jets), Interval{s0 + n_lo * h, s0 + n_hi * h},
                  JetKind::FiniteDifference, max_order, {}, true);
}

AdmissibilityReport check_admissibility(const CurveJet& c, std::span<const double> grid,
                                        double tol_light) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "admissibility grid is empty");
  AdmissibilityReport rep;
  rep.worst_inflection_margin = std::numeric_limits<double>::infinity();
  rep.worst_lightlike_margin = std::numeric_limits<double>::infinity();
  int prev_sign = 0;
  for (const double s : grid) {
    if (!c.domain().contains(s))
      throw Error(ErrorCode::OutOfDomain, "grid point outside curve domain", s);
    const Jet j = c.jets(s);
    const PGVector cross = pg_cross(j[1], j[2]);
    const double infl = max_abs(cross);
    const double ysq = j[2].x2 * j[2].x2;
    const double zsq = j[2].x3 * j[2].x3;
    const double light = (ysq + zsq) > 0.0 ? std::abs(ysq - zsq) / (ysq + zsq) : 0.0;
    rep.worst_inflection_margin = std::min(rep.worst_inflection_margin, infl);
    rep.worst_lightlike_margin = std::min(rep.worst_lightlike_margin, light);

    bool ok = std::abs(j[1].x1) > kInflectionTol;
    ok = ok && infl > kInflectionTol * std::max(1.0, max_abs(j[1]) * max_abs(j[2]));
    ok = ok && light > tol_light;
    if (ok) {
      const int sign = ysq > zsq ? 1 : -1;
      if (prev_sign != 0 && sign != prev_sign) ok = false;  // causal character flips
      prev_sign = sign;
    }
    if (!ok) rep.failing_params.push_back(s);
  }
  rep.admissible = rep.failing_params.empty();
  return rep;
}

CurveJet apply_homothety(const CurveJet& c, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw Error(ErrorCode::InvalidArgument, "homothety factor must be positive and finite");
  const Interval dom{mu * c.domain().lo, mu * c.domain().hi};
  JetFn jets = [c, mu](double sbar) {
    Jet j = c.jets(sbar / mu);
    double scale = mu;
    for (auto& v : j) {
      v *= scale;
      scale /= mu;
    }
    return j;
  };
  return CurveJet(std::move(jets), dom, c.kind(), c.max_order(), c.warnings(), c.arc_length());
}

}  // namespace pgcurve
