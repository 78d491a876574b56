#include "pgcurve/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pgcurve/equiform.hpp"
#include "pgcurve/error.hpp"
#include "pgcurve/frenet.hpp"

namespace pgcurve {

namespace {

// k-th derivative of a coordinate function.
using CoordFn = std::function<double(double, int)>;

JetFunctions jets_from(CoordFn y, CoordFn z) {
  auto vec = [y, z](int k) -> PositionFn {
    return [y, z, k](double s) {
      const double x = k == 0 ? s : (k == 1 ? 1.0 : 0.0);
      return PGVector{x, y(s, k), z(s, k)};
    };
  };
  return JetFunctions{vec(0), vec(1), vec(2), vec(3), vec(4)};
}

// e^{-as} (p cosh bs + q sinh bs) and its derivatives.
CoordFn exp_hyp(double a, double b, double p, double q) {
  return [a, b, p, q](double s, int k) {
    double pk = p, qk = q;
    for (int i = 0; i < k; ++i) {
      const double np = -a * pk + b * qk;
      const double nq = b * pk - a * qk;
      pk = np;
      qk = nq;
    }
    return std::exp(-a * s) * (pk * std::cosh(b * s) + qk * std::sinh(b * s));
  };
}

// c_plus (as)^(1+r) + c_minus (as)^(1-r), r = b / a, and its derivatives.
CoordFn power_pair(double a, double c_plus, double c_minus, double r) {
  return [a, c_plus, c_minus, r](double s, int k) {
    auto term = [&](double c, double p) {
      double f = c;
      for (int i = 0; i < k; ++i) f *= a * (p - i);
      return f * std::pow(a * s, p - k);
    };
    return term(c_plus, 1.0 + r) + term(c_minus, 1.0 - r);
  };
}

void require(bool ok, const std::string& what, double value) {
  if (!ok) throw Error(ErrorCode::ParamConstraintViolated, what, value);
}

void require_nonzero(double a, double b) {
  require(a != 0.0 && std::isfinite(a), "a must be finite and non-zero", a);
  require(b != 0.0 && std::isfinite(b), "b must be finite and non-zero", b);
}

void require_domain(Interval d) {
  if (!(d.lo < d.hi) || !std::isfinite(d.lo) || !std::isfinite(d.hi))
    throw Error(ErrorCode::DomainEmpty, "domain must satisfy lo < hi");
}

PositionFn scaled(ScalarFn rho, PositionFn e) {
  return [rho, e](double s) { return rho(s) * e(s); };
}

void fill_equiform_frame(ZooOracle& o) {
  ScalarFn rho = [k = o.kappa](double s) { return 1.0 / k(s); };
  o.T = scaled(rho, o.e1);
  o.N = scaled(rho, o.e2);
  o.B = scaled(rho, o.e3);
}

ZooEntry finish(std::string name, std::string description, double a, double b, Interval domain,
                JetFunctions fns, ZooOracle oracle) {
  fill_equiform_frame(oracle);
  return ZooEntry{.name = std::move(name),
                  .description = std::move(description),
                  .a = a,
                  .b = b,
                  .domain = domain,
                  .position = fns.position,
                  .curve = make_analytic_curve(fns, domain),
                  .oracle = std::move(oracle),
                  .notes = {},
                  .reference_aw = std::nullopt};
}

constexpr std::string_view kTimelikeGeneral = "timelike_general_helix";
constexpr std::string_view kSpacelikeGeneral = "spacelike_general_helix";
constexpr std::string_view kTimelikeCircular = "timelike_circular_helix";
constexpr std::string_view kSpacelikeCircular = "spacelike_circular_helix";
constexpr std::string_view kLogSpiral = "timelike_log_spiral";
constexpr std::string_view kBertrandHelix = "bertrand_helix";
constexpr std::string_view kIsotropicCircle = "isotropic_circle";

ZooEntry general_helix(bool timelike, double a, double b, Interval d) {
  require_nonzero(a, b);
  require(a != b && a != -b, "a must differ from +-b", a);
  const double D2 = (a * a - b * b) * (a * a - b * b);
  const CoordFn u = exp_hyp(a, b, (a * a + b * b) / D2, 2.0 * a * b / D2);
  const CoordFn v = exp_hyp(a, b, 2.0 * a * b / D2, (a * a + b * b) / D2);

  ZooOracle o;
  o.kappa = [a](double s) { return std::exp(-a * s); };
  o.K = [a](double s) { return a * std::exp(a * s); };
  auto C = [b](double s) { return std::cosh(b * s); };
  auto S = [b](double s) { return std::sinh(b * s); };
  // First derivatives as printed for the two helices.
  auto yp = [a, b, C, S](double s) {
    return -std::exp(-a * s) / (a * a - b * b) * (a * C(s) + b * S(s));
  };
  auto zp = [a, b, C, S](double s) {
    return std::exp(-a * s) / (b * b - a * a) * (b * C(s) + a * S(s));
  };

  if (timelike) {
    o.tau = [b](double) { return b; };
    o.Tq = [a, b](double s) { return b * std::exp(a * s); };
    o.Tq_reference = [a, b](double s) { return -b * std::exp(a * s); };
    o.epsilon = 1;
    o.e1 = [yp, zp](double s) { return PGVector{1.0, yp(s), zp(s)}; };
    o.e2 = [C, S](double s) { return PGVector{0.0, C(s), S(s)}; };
    o.e3 = [C, S](double s) { return PGVector{0.0, S(s), C(s)}; };
    ZooEntry e = finish(std::string(kTimelikeGeneral), "general helix, K = a e^{as}", a, b, d,
                        jets_from(u, v), std::move(o));
    e.notes.push_back(
        "reference Tq = -b e^{as}; Tq = tau / kappa gives +b e^{as}, which is used");
    e.reference_aw = std::vector<AwType>{};
    return e;
  }
  o.tau = [b](double) { return -b; };
  o.Tq = [a, b](double s) { return -b * std::exp(a * s); };
  o.epsilon = -1;
  o.e1 = [yp, zp](double s) { return PGVector{1.0, zp(s), yp(s)}; };
  o.e2 = [C, S](double s) { return PGVector{0.0, S(s), C(s)}; };
  o.e3 = [C, S](double s) { return PGVector{0.0, -C(s), -S(s)}; };
  ZooEntry e = finish(std::string(kSpacelikeGeneral), "general helix, K = a e^{as}", a, b, d,
                      jets_from(v, u), std::move(o));
  e.reference_aw = std::vector<AwType>{};
  return e;
}

ZooEntry circular_helix(bool timelike, double a, double b, Interval d) {
  require_nonzero(a, b);
  require(a != b && a != -b, "a must differ from +-b", a);
  require(a * d.lo > 1e-3 && a * d.hi > 1e-3, "a s must exceed 1e-3 on the domain", a);
  const double A = a * a * a / (b * (b * b - a * a));
  const double r = b / a;
  const double cp = A / a * (b - a) / 2.0;
  const double cm = A / a * (b + a) / 2.0;
  // b sinh u - a cosh u and b cosh u - a sinh u, u = r ln(as).
  const CoordFn f = power_pair(a, cp, -cm, r);
  const CoordFn g = power_pair(a, cp, cm, r);

  auto u = [a, r](double s) { return r * std::log(a * s); };
  ZooOracle o;
  o.kappa = [a](double s) { return a / s; };
  o.K = [a](double) { return 1.0 / a; };
  const double c1 = a * a / b;

  if (timelike) {
    o.tau = [a, b](double s) { return -b / (a * s); };
    o.Tq = [a, b](double) { return -b / (a * a); };
    o.epsilon = -1;
    o.e1 = [u, c1](double s) {
      return PGVector{1.0, c1 * std::cosh(u(s)), c1 * std::sinh(u(s))};
    };
    o.e2 = [u](double s) { return PGVector{0.0, std::sinh(u(s)), std::cosh(u(s))}; };
    o.e3 = [u](double s) { return PGVector{0.0, -std::cosh(u(s)), -std::sinh(u(s))}; };
    o.e3_reference = [u](double s) { return PGVector{0.0, std::cosh(u(s)), std::sinh(u(s))}; };
    ZooEntry e = finish(std::string(kTimelikeCircular), "circular helix, K = 1/a, Tq = -b/a^2",
                        a, b, d, jets_from(f, g), std::move(o));
    e.notes.push_back(
        "reference B = rho (0, cosh u, sinh u) gives det(e1, e2, e3) = -1; e3 uses the "
        "opposite sign, consistent with Tq = -b/a^2");
    e.reference_aw = std::vector<AwType>{};
    return e;
  }
  o.tau = [a, b](double s) { return b / (a * s); };
  o.Tq = [a, b](double) { return b / (a * a); };
  o.epsilon = 1;
  o.e1 = [u, c1](double s) {
    return PGVector{1.0, c1 * std::sinh(u(s)), c1 * std::cosh(u(s))};
  };
  o.e2 = [u](double s) { return PGVector{0.0, std::cosh(u(s)), std::sinh(u(s))}; };
  o.e3 = [u](double s) { return PGVector{0.0, std::sinh(u(s)), std::cosh(u(s))}; };
  o.e3_reference = [u](double s) { return PGVector{0.0, -std::sinh(u(s)), -std::cosh(u(s))}; };
  ZooEntry e = finish(std::string(kSpacelikeCircular), "circular helix, K = 1/a, Tq = b/a^2", a,
                      b, d, jets_from(g, f), std::move(o));
  e.notes.push_back(
      "reference B = -rho (0, sinh u, cosh u) gives det(e1, e2, e3) = -1; e3 uses the "
      "opposite sign, consistent with Tq = b/a^2");
  e.reference_aw = std::vector<AwType>{};
  return e;
}

ZooEntry log_spiral(double a, double b, Interval d) {
  require_nonzero(a, b);
  require(a * d.lo + b >= 1e-3 && a * d.hi + b >= 1e-3, "a s + b must be >= 1e-3 on the domain",
          a);
  const CoordFn y = [a, b](double s, int k) {
    const double w = a * s + b;
    switch (k) {
      case 0: return w / (a * a) * (std::log(w) - 1.0);
      case 1: return std::log(w) / a;
      case 2: return 1.0 / w;
      case 3: return -a / (w * w);
      default: return 2.0 * a * a / (w * w * w);
    }
  };
  const CoordFn z = [](double, int) { return 0.0; };
  ZooOracle o;
  o.kappa = [a, b](double s) { return 1.0 / (a * s + b); };
  o.tau = [](double) { return 0.0; };
  o.K = [a](double) { return a; };
  o.Tq = [](double) { return 0.0; };
  o.epsilon = 1;
  o.e1 = [a, b](double s) { return PGVector{1.0, std::log(a * s + b) / a, 0.0}; };
  o.e2 = [](double) { return PGVector{0.0, 1.0, 0.0}; };
  o.e3 = [](double) { return PGVector{0.0, 0.0, 1.0}; };
  ZooEntry e = finish(std::string(kLogSpiral), "isotropic logarithmic spiral, K = a, Tq = 0", a,
                      b, d, jets_from(y, z), std::move(o));
  e.notes.push_back(
      "reference classification lists WeakAW2 and not WeakAW3; with K = a != 0 and Tq = 0 the "
      "conditions give WeakAW3 and not WeakAW2");
  e.reference_aw = std::vector<AwType>{AwType::AW2, AwType::AW3, AwType::WeakAW2};
  return e;
}

}  // namespace

const std::vector<FixtureInfo>& list_fixtures() {
  static const std::vector<FixtureInfo> fixtures{
      {std::string(kTimelikeGeneral), "general helix, K = a e^{as}, Tq = b e^{as}",
       "a, b != 0; a != +-b", 1.0, 2.0},
      {std::string(kSpacelikeGeneral), "general helix, K = a e^{as}, Tq = -b e^{as}",
       "a, b != 0; a != +-b", 1.0, 2.0},
      {std::string(kTimelikeCircular), "circular helix, K = 1/a, Tq = -b/a^2",
       "a, b != 0; a != +-b; a s > 1e-3 on the domain", 1.0, 2.0},
      {std::string(kSpacelikeCircular), "circular helix, K = 1/a, Tq = b/a^2",
       "a, b != 0; a != +-b; a s > 1e-3 on the domain", 1.0, 2.0},
      {std::string(kLogSpiral), "isotropic logarithmic spiral, K = a, Tq = 0",
       "a, b != 0; a s + b >= 1e-3 on the domain", 1.0, 1.0},
      {std::string(kBertrandHelix), "kappa = a, tau = b, K = 0, Tq = b/a", "a > 0; b != 0", 1.0,
       1.0},
      {std::string(kIsotropicCircle), "(s, a s^2/2, 0), kappa = a, tau = 0", "a > 0", 1.0, 1.0},
  };
  return fixtures;
}

Interval default_domain(std::string_view name, double a, double b) {
  if (name == kTimelikeGeneral || name == kSpacelikeGeneral) return {0.0, 2.0};
  if (name == kTimelikeCircular || name == kSpacelikeCircular)
    return a > 0.0 ? Interval{0.6, 3.0} : Interval{-3.0, -0.6};
  if (name == kLogSpiral) {
    // [0, 4] when a s + b stays positive there, else the mirrored interval
    // [-4, 0].
    if (std::min(b, 4.0 * a + b) >= 1e-3) return {0.0, 4.0};
    return {-4.0, 0.0};
  }
  if (name == kBertrandHelix || name == kIsotropicCircle) return {-1.0, 1.0};
  throw Error(ErrorCode::UnknownName, "unknown fixture '" + std::string(name) + "'");
}

ZooEntry get_example(std::string_view name, double a, double b, std::optional<Interval> domain) {
  const Interval d = domain.value_or(default_domain(name, a, b));
  if (name == kBertrandHelix) return bertrand_fixture(a, b, d);
  if (name == kIsotropicCircle) return isotropic_circle(a, d);
  require_domain(d);
  if (name == kTimelikeGeneral) return general_helix(true, a, b, d);
  if (name == kSpacelikeGeneral) return general_helix(false, a, b, d);
  if (name == kTimelikeCircular) return circular_helix(true, a, b, d);
  if (name == kSpacelikeCircular) return circular_helix(false, a, b, d);
  if (name == kLogSpiral) return log_spiral(a, b, d);
  throw Error(ErrorCode::UnknownName, "unknown fixture '" + std::string(name) + "'");
}

ZooEntry bertrand_fixture(double a, double b, std::optional<Interval> domain) {
  require(a > 0.0 && std::isfinite(a), "a must be positive", a);
  require(b != 0.0 && std::isfinite(b), "b must be finite and non-zero", b);
  const Interval d = domain.value_or(Interval{-1.0, 1.0});
  require_domain(d);
  const double c = a / (b * b);
  const CoordFn y = [b, c](double s, int k) {
    const double f = c * std::pow(b, k);
    return f * (k % 2 == 0 ? std::cosh(b * s) : std::sinh(b * s));
  };
  const CoordFn z = [b, c](double s, int k) {
    const double f = c * std::pow(b, k);
    return f * (k % 2 == 0 ? std::sinh(b * s) : std::cosh(b * s));
  };
  ZooOracle o;
  o.kappa = [a](double) { return a; };
  o.tau = [b](double) { return b; };
  o.K = [](double) { return 0.0; };
  o.Tq = [a, b](double) { return b / a; };
  o.epsilon = 1;
  o.e1 = [a, b](double s) {
    return PGVector{1.0, a / b * std::sinh(b * s), a / b * std::cosh(b * s)};
  };
  o.e2 = [b](double s) { return PGVector{0.0, std::cosh(b * s), std::sinh(b * s)}; };
  o.e3 = [b](double s) { return PGVector{0.0, std::sinh(b * s), std::cosh(b * s)}; };
  ZooEntry e = finish(std::string(kBertrandHelix), "circular helix with kappa = a, tau = b", a, b,
                      d, jets_from(y, z), std::move(o));
  e.reference_aw = std::vector<AwType>{AwType::AW3, AwType::WeakAW3};
  return e;
}

ZooEntry isotropic_circle(double a, std::optional<Interval> domain) {
  require(a > 0.0 && std::isfinite(a), "a must be positive", a);
  const Interval d = domain.value_or(Interval{-1.0, 1.0});
  require_domain(d);
  const CoordFn y = [a](double s, int k) {
    switch (k) {
      case 0: return 0.5 * a * s * s;
      case 1: return a * s;
      case 2: return a;
      default: return 0.0;
    }
  };
  const CoordFn z = [](double, int) { return 0.0; };
  ZooOracle o;
  o.kappa = [a](double) { return a; };
  o.tau = [](double) { return 0.0; };
  o.K = [](double) { return 0.0; };
  o.Tq = [](double) { return 0.0; };
  o.epsilon = 1;
  o.e1 = [a](double s) { return PGVector{1.0, a * s, 0.0}; };
  o.e2 = [](double) { return PGVector{0.0, 1.0, 0.0}; };
  o.e3 = [](double) { return PGVector{0.0, 0.0, 1.0}; };
  return finish(std::string(kIsotropicCircle), "isotropic circle (s, a s^2/2, 0)", a, 0.0, d,
                jets_from(y, z), std::move(o));
}

FigureSpec figure_spec(int n) {
  switch (n) {
    case 1: return {std::string(kTimelikeGeneral), 1.0, 2.0};
    case 2: return {std::string(kSpacelikeGeneral), 1.0, 2.0};
    case 3: return {std::string(kTimelikeCircular), 1.0, 2.0};
    case 4: return {std::string(kSpacelikeCircular), 1.0, 2.0};
    case 5: return {std::string(kLogSpiral), 1.0, 1.0};
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "figure number must be 1..5", n);
}

std::vector<std::string> reference_discrepancies(const ZooEntry& e,
                                                 std::span<const double> grid) {
  std::vector<std::string> out;
  if (!e.oracle.Tq_reference && !e.oracle.e3_reference) return out;
  double tq_dev = 0.0, e3_dev = 0.0;
  for (double s : grid) {
    const EquiformData d = equiform_data(e.curve, s);
    if (e.oracle.Tq_reference)
      tq_dev = std::max(tq_dev, std::abs(d.Tq - e.oracle.Tq_reference(s)) /
                                    std::max(1.0, std::abs(d.Tq)));
    if (e.oracle.e3_reference)
      e3_dev = std::max(e3_dev, max_abs(d.frenet.e3 - e.oracle.e3_reference(s)) /
                                    std::max(1.0, max_abs(d.frenet.e3)));
  }
  auto report = [&](const char* field, double dev) {
    if (dev <= 1e-9) return;
    std::ostringstream os;
    os << e.name << ": computed " << field << " differs from the reference closed form (max "
       << "relative deviation " << dev << "); computed value follows the definition";
    out.push_back(os.str());
  };
  if (e.oracle.Tq_reference) report("Tq", tq_dev);
  if (e.oracle.e3_reference) report("e3", e3_dev);
  return out;
}

std::vector<std::string> classification_discrepancies(const ZooEntry& e, const AWReport& r) {
  std::vector<std::string> out;
  if (!e.reference_aw) return out;
  for (AwType t : kAllAwTypes) {
    const bool ref = std::find(e.reference_aw->begin(), e.reference_aw->end(), t) !=
                     e.reference_aw->end();
    if (ref == r[t].holds) continue;
    std::ostringstream os;
    os << e.name << ": reference classification says " << to_string(t)
       << (ref ? " holds" : " fails") << ", computed " << (r[t].holds ? "holds" : "fails")
       << " (sup residual " << r[t].sup_residual << ")";
    out.push_back(os.str());
  }
  return out;
}

}  // namespace pgcurve
