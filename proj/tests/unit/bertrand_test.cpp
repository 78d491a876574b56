#include <cmath>

#include <gtest/gtest.h>

#include "pgcurve/aw.hpp"
#include "pgcurve/bertrand.hpp"
#include "pgcurve/error.hpp"
#include "pgcurve/frenet.hpp"
#include "pgcurve/zoo.hpp"

using namespace pgcurve;

namespace {

std::vector<double> grid() { return linspace(-1, 1, 41); }

}  // namespace

TEST(BertrandMate, ZeroOffsetIsIdentity) {
  const auto bf = bertrand_fixture(1, 1);
  const auto m = bertrand_mate(bf.curve, 0.0);
  for (double s : {-0.5, 0.0, 0.8}) {
    const Jet a = bf.curve.jets(s), b = m.jets(s);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(a[k], b[k]);
  }
}

TEST(BertrandMate, FixtureMateClosedForm) {
  const auto bf = bertrand_fixture(1, 1);
  const auto m = bertrand_mate(bf.curve, 1.0);
  EXPECT_EQ(m.domain().lo, bf.domain.lo);
  EXPECT_EQ(m.domain().hi, bf.domain.hi);
  EXPECT_TRUE(m.arc_length());
  for (double s : linspace(-1, 1, 9)) {
    const PGVector p = m.eval(s, 0);
    EXPECT_NEAR(p.x1, s, 1e-14);
    EXPECT_NEAR(p.x2, 2 * std::cosh(s), 1e-13);
    EXPECT_NEAR(p.x3, 2 * std::sinh(s), 1e-13);
    const auto f = frenet_data(m, s);
    EXPECT_NEAR(f.kappa, 2, 1e-9);
    EXPECT_NEAR(f.tau, 1, 1e-6);
  }
}

TEST(BertrandMate, Guards) {
  const auto e = get_example("timelike_log_spiral", 1, 1);
  const auto c3 = make_sampled_curve(e.position, e.domain, 1e-3, 3);
  try {
    (void)bertrand_mate(c3, 1.0);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::JetOrderTooLow);
  }
  // gamma + lambda N collapses the normal when lambda = -1 (kappa = 1).
  try {
    (void)bertrand_mate(bertrand_fixture(1, 1).curve, -1.0);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::MateInadmissible);
  }
}

TEST(VerifyPair, FixturePairs) {
  const auto bf = bertrand_fixture(1, 1);
  for (double lambda : {0.5, 1.0, 2.0}) {
    const auto m = bertrand_mate(bf.curve, lambda);
    const auto p = verify_bertrand_pair(bf.curve, m, grid(), 1e-8,
                                        [lambda](double) { return lambda; });
    EXPECT_TRUE(p.is_pair) << lambda;
    EXPECT_NEAR(p.lambda, lambda, 1e-10);
    EXPECT_LT(p.lambda_spread, 1e-10);
    EXPECT_NEAR(p.tangent_product_mean, 1 / (1 + lambda), 1e-9);
    EXPECT_LT(p.tangent_product_var, 1e-8);
    EXPECT_EQ(p.nature, BertrandNature::CircularHelix);
    EXPECT_TRUE(p.diagnostics.empty());
  }
}

TEST(VerifyPair, NonZeroEquiformCurvatureFails) {
  const auto e1 = get_example("timelike_general_helix", 1, 2);
  const auto m = bertrand_mate(e1.curve, 1.0);
  const auto p = verify_bertrand_pair(e1.curve, m, linspace(0, 2, 21), 1e-6);
  EXPECT_FALSE(p.is_pair);
  EXPECT_GT(p.K_sup, 1.0);
  EXPECT_EQ(p.nature, BertrandNature::NotBertrand);

  const auto e5 = get_example("timelike_log_spiral", 1, 1);
  const auto m5 = bertrand_mate(e5.curve, 1.0);
  EXPECT_FALSE(verify_bertrand_pair(e5.curve, m5, linspace(0, 4, 21), 1e-6).is_pair);
}

TEST(VerifyPair, VaryingOffsetFails) {
  const auto bf = bertrand_fixture(1, 1);
  auto lam = [](double s) { return s + 2.0; };
  const auto m = offset_curve(bf.curve, lam);
  const auto p = verify_bertrand_pair(bf.curve, m, linspace(-0.9, 0.9, 19), 1e-6, lam);
  EXPECT_FALSE(p.is_pair);
  EXPECT_GT(p.lambda_spread, 1.0);
}

TEST(VerifyPair, MateOfMate) {
  const auto bf = bertrand_fixture(1, 1);
  for (double lambda : {0.5, 1.0, 2.0}) {
    const auto m = bertrand_mate(bf.curve, lambda);
    const auto p = verify_bertrand_pair(m, bf.curve, linspace(-0.9, 0.9, 19), 1e-6);
    EXPECT_TRUE(p.is_pair) << lambda;
    EXPECT_NEAR(p.lambda, -lambda * (1 + lambda), 1e-8);
  }
}

TEST(VerifyPair, EmptyGrid) {
  const auto bf = bertrand_fixture(1, 1);
  EXPECT_THROW((void)verify_bertrand_pair(bf.curve, bf.curve, std::vector<double>{}, 1e-8), Error);
}

TEST(BertrandNature, Examples) {
  EXPECT_EQ(bertrand_nature(bertrand_fixture(1, 1).curve, grid(), 1e-8),
            BertrandNature::CircularHelix);
  EXPECT_EQ(bertrand_nature(isotropic_circle(1).curve, grid(), 1e-8),
            BertrandNature::IsotropicCircle);
  const auto e3 = get_example("timelike_circular_helix", 1, 2);
  EXPECT_EQ(bertrand_nature(e3.curve, linspace(0.6, 3, 20), 1e-8), BertrandNature::NotBertrand);
  EXPECT_EQ(to_string(BertrandNature::CircularHelix), "CircularHelix");
}

TEST(BertrandPair, PassingPairsAreAw3) {
  for (double a : {0.5, 1.0, 3.0}) {
    for (double b : {-2.0, 1.0}) {
      const auto bf = bertrand_fixture(a, b);
      const auto m = bertrand_mate(bf.curve, 0.5);
      const auto g = linspace(-0.9, 0.9, 19);
      ASSERT_TRUE(verify_bertrand_pair(bf.curve, m, g, 1e-6).is_pair);
      EXPECT_EQ(classify(bf.curve, g).holding(),
                (std::vector<AwType>{AwType::AW3, AwType::WeakAW3}));
    }
  }
}
