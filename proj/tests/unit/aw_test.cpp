#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pgcurve/aw.hpp"
#include "pgcurve/error.hpp"
#include "pgcurve/zoo.hpp"
#include "printed_forms.hpp"

using namespace pgcurve;

namespace {

void expect_vec(const PGVector& got, const PGVector& want, double tol) {
  EXPECT_NEAR(got.x1, want.x1, tol);
  EXPECT_NEAR(got.x2, want.x2, tol);
  EXPECT_NEAR(got.x3, want.x3, tol);
}

std::vector<AwType> holding(const ZooEntry& e, std::size_t n = 101) {
  return classify(e.curve, linspace(e.domain.lo, e.domain.hi, n)).holding();
}

}  // namespace

TEST(QVectors, LogSpiral) {
  const auto q = q_vectors(get_example("timelike_log_spiral", 1, 1).curve, 1);
  expect_vec(q.Q1, {0, 0.5, 0}, 1e-12);
  expect_vec(q.Q2, {0, -0.25, 0}, 1e-12);
  expect_vec(q.Q3, {0, 0.25, 0}, 1e-12);
}

TEST(QVectors, BertrandFixture) {
  const auto q = q_vectors(bertrand_fixture(1, 1).curve, 0);
  expect_vec(q.Q1, {0, 1, 0}, 1e-12);
  expect_vec(q.Q2, q.B, 1e-12);
  expect_vec(q.Q3, q.N, 1e-12);
}

TEST(QVectors, AreArcLengthDerivatives) {
  for (const auto& fx : list_fixtures()) {
    const auto e = get_example(fx.name, fx.default_a, fx.default_b);
    for (double s : linspace(e.domain.lo, e.domain.hi, 17)) {
      const auto q = q_vectors(e.curve, s);
      const Jet j = e.curve.jets(s);
      EXPECT_LE(printed::rel_err(q.Q1, j[2]), 1e-10) << fx.name;
      EXPECT_LE(printed::rel_err(q.Q2, j[3]), 1e-9) << fx.name;
      EXPECT_LE(printed::rel_err(q.Q3, j[4]), 1e-7) << fx.name << " s=" << s;
      EXPECT_NEAR(pg_dot(q.Q1, q.B), 0.0, 1e-12 * max_abs(q.B) * max_abs(q.Q1));
    }
  }
}

TEST(StarVectors, Examples) {
  const auto q5 = q_vectors(get_example("timelike_log_spiral", 1, 1).curve, 1);
  const auto s5 = star_vectors(q5);
  expect_vec(s5.Q1star, {0, 1, 0}, 1e-12);
  EXPECT_FALSE(s5.Q2star.has_value());

  const auto qb = q_vectors(bertrand_fixture(1, 1).curve, 0);
  const auto sb = star_vectors(qb);
  expect_vec(sb.Q1star, {0, 1, 0}, 1e-12);
  ASSERT_TRUE(sb.Q2star.has_value());
  expect_vec(*sb.Q2star, {0, 0, 1}, 1e-12);

  auto scaled = qb;
  scaled.Q1 = 10.0 * qb.Q1;
  expect_vec(star_vectors(scaled).Q1star, sb.Q1star, 1e-14);
}

TEST(StarVectors, LightlikeQ1) {
  auto q = q_vectors(bertrand_fixture(1, 1).curve, 0);
  q.Q1 = PGVector{0, 1, 1};
  try {
    (void)star_vectors(q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Q1Lightlike);
  }
}

TEST(AwConditions, LogSpiral) {
  const auto r = aw_conditions(q_vectors(get_example("timelike_log_spiral", 1, 1).curve, 1));
  EXPECT_NEAR(r[AwType::AW2], 0, 1e-12);
  EXPECT_NEAR(r[AwType::AW3], 0, 1e-12);
  EXPECT_NEAR(r[AwType::WeakAW3], 0, 1e-12);
  EXPECT_NEAR(r[AwType::AW1], 2, 1e-12);
  EXPECT_NEAR(r[AwType::WeakAW2], 2, 1e-12);
}

TEST(AwConditions, BertrandFixture) {
  const auto c = bertrand_fixture(1, 1).curve;
  for (double s : {-0.7, 0.0, 0.4}) {
    const auto r = aw_conditions(q_vectors(c, s));
    EXPECT_NEAR(r[AwType::AW3], 0, 1e-12);
    EXPECT_NEAR(r[AwType::WeakAW3], 0, 1e-12);
    EXPECT_NEAR(r[AwType::AW2], 1, 1e-12);
    EXPECT_NEAR(r[AwType::AW1], 1, 1e-12);
    EXPECT_NEAR(r[AwType::WeakAW2], 1, 1e-12);
  }
}

TEST(AwConditions, IsotropicCircleSatisfiesAll) {
  const auto r = aw_conditions(q_vectors(isotropic_circle(1).curve, 0.3));
  for (AwType t : kAllAwTypes) EXPECT_EQ(r[t], 0.0) << to_string(t);
}

TEST(AwConditions, ScaleFloor) {
  EquiformScalars sc;
  sc.K = 0.5;
  sc.Tq = 0.1;
  EXPECT_EQ(aw_scale(sc), 1.0);
  sc.K_sigma = -3;
  EXPECT_EQ(aw_scale(sc), 3.0);
}

TEST(Classify, Examples) {
  EXPECT_TRUE(holding(get_example("timelike_general_helix", 1, 2)).empty());
  EXPECT_EQ(holding(get_example("timelike_log_spiral", 1, 1, Interval{0.5, 3})),
            (std::vector<AwType>{AwType::AW2, AwType::AW3, AwType::WeakAW3}));
  EXPECT_EQ(holding(bertrand_fixture(1, 1)),
            (std::vector<AwType>{AwType::AW3, AwType::WeakAW3}));
  EXPECT_EQ(holding(isotropic_circle(1)).size(), 5u);
}

TEST(Classify, ReportShape) {
  const auto e = get_example("timelike_log_spiral", 1, 1);
  const auto r = classify(e.curve, linspace(0.5, 3, 101));
  EXPECT_EQ(r.tolerance, 1e-8);
  for (AwType t : kAllAwTypes) {
    EXPECT_EQ(r[t].grid_size, 101u);
    EXPECT_GE(r[t].sup_residual, 0.0);
    EXPECT_EQ(r[t].holds, r[t].sup_residual < r.tolerance);
  }
  // Q2 is parallel to Q1 everywhere on the log spiral.
  EXPECT_EQ(r.degenerate_points.size(), 101u);
  EXPECT_THROW((void)classify(e.curve, std::vector<double>{}), Error);
}

TEST(Classify, FiniteDifferenceToleranceDefault) {
  EXPECT_EQ(default_aw_tolerance(JetKind::AnalyticJets), 1e-8);
  EXPECT_EQ(default_aw_tolerance(JetKind::FiniteDifference), 1e-5);
}

TEST(Classify, HomothetyInvariance) {
  for (const auto& fx : list_fixtures()) {
    const auto e = get_example(fx.name, fx.default_a, fx.default_b);
    const auto grid = linspace(e.domain.lo, e.domain.hi, 41);
    const auto base = classify(e.curve, grid);
    for (double mu : {0.5, 2.0}) {
      const auto c = apply_homothety(e.curve, mu);
      std::vector<double> g2;
      for (double s : grid) g2.push_back(mu * s);
      const auto r = classify(c, g2);
      for (AwType t : kAllAwTypes) {
        EXPECT_EQ(r[t].holds, base[t].holds) << fx.name << ' ' << to_string(t);
        EXPECT_NEAR(r[t].sup_residual, base[t].sup_residual,
                    1e-9 * std::max(1.0, base[t].sup_residual))
            << fx.name << ' ' << to_string(t);
      }
    }
  }
}

TEST(Classify, VectorFormAgreesOnFixtures) {
  for (const auto& fx : list_fixtures()) {
    const auto e = get_example(fx.name, fx.default_a, fx.default_b);
    for (double s : linspace(e.domain.lo, e.domain.hi, 31)) {
      const auto q = q_vectors(e.curve, s);
      const auto sc = aw_conditions(q);
      const auto vd = aw_vector_defects(q);
      for (AwType t : {AwType::AW2, AwType::AW3}) {
        ASSERT_TRUE(vd[t].has_value());
        EXPECT_EQ(sc[t] < 1e-9, *vd[t] < 1e-9) << fx.name << ' ' << to_string(t) << " s=" << s;
      }
    }
  }
}

TEST(Classify, AW1ImpliesEverything) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rho(0.2, 5.0);
  for (int i = 0; i < 50; ++i) {
    EquiformScalars sc;
    sc.rho = rho(rng);
    sc.epsilon = (i % 2) ? 1 : -1;
    const PGVector N{0, sc.rho, 0};
    const PGVector B{0, 0, sc.epsilon * sc.rho};
    const auto q = q_vectors_from(sc, N, B);
    const auto r = aw_conditions(q);
    const auto v = aw_vector_defects(q);
    for (AwType t : kAllAwTypes) {
      EXPECT_EQ(r[t], 0.0);
      ASSERT_TRUE(v[t].has_value());
      EXPECT_EQ(*v[t], 0.0);
    }
  }
}

TEST(AwType, Names) {
  for (AwType t : kAllAwTypes) EXPECT_EQ(aw_type_from_string(to_string(t)), t);
  EXPECT_FALSE(aw_type_from_string("AW4").has_value());
}
