#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "pgcurve/equiform.hpp"
#include "pgcurve/error.hpp"
#include "pgcurve/frenet.hpp"
#include "pgcurve/zoo.hpp"
#include "printed_forms.hpp"

using namespace pgcurve;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Zoo, Listing) {
  const auto& fx = list_fixtures();
  ASSERT_EQ(fx.size(), 7u);
  std::set<std::string> names;
  for (const auto& f : fx) {
    names.insert(f.name);
    EXPECT_FALSE(f.constraints.empty()) << f.name;
    EXPECT_NO_THROW((void)get_example(f.name, f.default_a, f.default_b));
  }
  EXPECT_EQ(names.size(), 7u);
  EXPECT_TRUE(names.count("timelike_log_spiral"));
  EXPECT_TRUE(names.count("isotropic_circle"));
}

TEST(Zoo, OracleExamples) {
  const auto e1 = get_example("timelike_general_helix", 1, 2);
  EXPECT_EQ(e1.domain.lo, 0.0);
  EXPECT_EQ(e1.domain.hi, 2.0);
  EXPECT_EQ(e1.oracle.kappa(0), 1.0);
  EXPECT_EQ(e1.oracle.tau(0), 2.0);

  const auto e4 = get_example("spacelike_circular_helix", 2, 1, Interval{0.6, 3});
  EXPECT_DOUBLE_EQ(e4.oracle.K(1), 0.5);
  EXPECT_DOUBLE_EQ(e4.oracle.Tq(1), 0.25);

  const auto e5 = get_example("timelike_log_spiral", 1, 1, Interval{0, 4});
  EXPECT_EQ(e5.oracle.e2(2), (PGVector{0, 1, 0}));
  EXPECT_EQ(e5.oracle.e3(2), (PGVector{0, 0, 1}));
  EXPECT_DOUBLE_EQ(e5.oracle.kappa(3), 0.25);
}

TEST(Zoo, ComputedInvariantsMatchOracles) {
  for (const auto& fx : list_fixtures()) {
    const auto e = get_example(fx.name, fx.default_a, fx.default_b);
    const auto& o = e.oracle;
    for (double s : linspace(e.domain.lo, e.domain.hi, 50)) {
      const auto d = equiform_data(e.curve, s);
      const auto& f = d.frenet;
      EXPECT_LE(printed::rel_err(f.kappa, o.kappa(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(f.tau, o.tau(s)), 1e-9) << fx.name;
      EXPECT_EQ(f.epsilon, o.epsilon) << fx.name;
      EXPECT_LE(printed::rel_err(f.e1, o.e1(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(f.e2, o.e2(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(f.e3, o.e3(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(d.K, o.K(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(d.Tq, o.Tq(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(d.T, o.T(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(d.N, o.N(s)), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(d.B, o.B(s)), 1e-9) << fx.name;
    }
  }
}

TEST(Zoo, PositionsMatchIndependentTranscription) {
  const std::pair<double, double> params[] = {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 1}};
  for (int n = 1; n <= 5; ++n) {
    const auto [a, b] = params[n - 1];
    const auto pf = printed::example(n, a, b);
    const auto e = get_example(pf.name, a, b);
    for (double s : linspace(e.domain.lo, e.domain.hi, 25)) {
      EXPECT_LE(printed::rel_err(e.position(s), pf.position(s)), 1e-12) << pf.name;
      EXPECT_LE(printed::rel_err(e.curve.eval(s, 0), pf.position(s)), 1e-12) << pf.name;
    }
  }
}

TEST(Zoo, GeneralHelicesAreMirrorImages) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 2);
  const auto e1 = get_example("timelike_general_helix", 1, 2);
  const auto e2 = get_example("spacelike_general_helix", 1, 2);
  for (int i = 0; i < 20; ++i) {
    const double s = u(rng);
    const PGVector p = e1.position(s), q = e2.position(s);
    EXPECT_EQ(p.x1, q.x1);
    EXPECT_EQ(p.x2, q.x3);
    EXPECT_EQ(p.x3, q.x2);
  }
}

TEST(Zoo, OracleFramesArePositivelyOriented) {
  for (const auto& fx : list_fixtures()) {
    const auto e = get_example(fx.name, fx.default_a, fx.default_b);
    for (double s : linspace(e.domain.lo, e.domain.hi, 11))
      EXPECT_NEAR(det3(e.oracle.e1(s), e.oracle.e2(s), e.oracle.e3(s)), 1.0, 1e-12) << fx.name;
  }
  const auto pf = printed::example(2, 1, 2);
  for (double s : {0.0, 0.7, 1.9})
    EXPECT_NEAR(det3(pf.e1(s), pf.e2(s), pf.e3(s)), 1.0, 1e-12);
}

TEST(Zoo, ReferenceDiscrepancies) {
  auto count = [](std::string_view name, double a, double b) {
    const auto e = get_example(name, a, b);
    return reference_discrepancies(e, linspace(e.domain.lo, e.domain.hi, 20)).size();
  };
  EXPECT_EQ(count("timelike_general_helix", 1, 2), 1u);
  EXPECT_EQ(count("spacelike_general_helix", 1, 2), 0u);
  EXPECT_EQ(count("timelike_circular_helix", 1, 2), 1u);
  EXPECT_EQ(count("spacelike_circular_helix", 1, 2), 1u);
  EXPECT_EQ(count("timelike_log_spiral", 1, 1), 0u);
  EXPECT_EQ(count("bertrand_helix", 1, 1), 0u);
}

TEST(Zoo, BertrandFixtureInvariants) {
  const auto e = bertrand_fixture(1, 1);
  const auto e23 = bertrand_fixture(2, 3, Interval{0, 1});
  for (double s : linspace(-1, 1, 9)) {
    const auto f = frenet_data(e.curve, s);
    EXPECT_NEAR(f.kappa, 1, 1e-12);
    EXPECT_NEAR(f.tau, 1, 1e-12);
  }
  for (double s : linspace(0, 1, 9)) EXPECT_NEAR(equiform_data(e23.curve, s).Tq, 1.5, 1e-12);
}

TEST(Zoo, Errors) {
  EXPECT_EQ(code_of([] { (void)get_example("helix", 1, 2); }), ErrorCode::UnknownName);
  EXPECT_EQ(code_of([] { (void)get_example("timelike_general_helix", 1, 1); }),
            ErrorCode::ParamConstraintViolated);
  EXPECT_EQ(code_of([] { (void)get_example("timelike_general_helix", 0, 1); }),
            ErrorCode::ParamConstraintViolated);
  EXPECT_EQ(code_of([] { (void)get_example("timelike_circular_helix", 1, 2, Interval{0, 1}); }),
            ErrorCode::ParamConstraintViolated);
  EXPECT_EQ(code_of([] { (void)get_example("timelike_log_spiral", 1, 1, Interval{-2, 1}); }),
            ErrorCode::ParamConstraintViolated);
  EXPECT_EQ(code_of([] { (void)bertrand_fixture(-1, 1); }), ErrorCode::ParamConstraintViolated);
  EXPECT_EQ(code_of([] { (void)isotropic_circle(0); }), ErrorCode::ParamConstraintViolated);
  EXPECT_EQ(code_of([] { (void)default_domain("nope", 1, 1); }), ErrorCode::UnknownName);
  EXPECT_EQ(code_of([] { (void)figure_spec(6); }), ErrorCode::InvalidArgument);
}

TEST(Zoo, NegativeParametersUseMirroredDomains) {
  const auto e3 = get_example("timelike_circular_helix", -1, 2);
  EXPECT_LT(e3.domain.hi, 0.0);
  EXPECT_NO_THROW((void)frenet_data(e3.curve, 0.5 * (e3.domain.lo + e3.domain.hi)));
  const auto e5 = get_example("timelike_log_spiral", -1, 1);
  EXPECT_LE(e5.domain.hi, 0.0);
}

TEST(Zoo, FigureSpecs) {
  for (int n = 1; n <= 5; ++n) {
    const auto fs = figure_spec(n);
    EXPECT_NO_THROW((void)get_example(fs.name, fs.a, fs.b));
  }
  EXPECT_EQ(figure_spec(5).name, "timelike_log_spiral");
}
