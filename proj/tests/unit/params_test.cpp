#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mpa/error.hpp"
#include "mpa/params.hpp"

namespace mpa {
namespace {

TEST(Params, ScalingIsIdentityForUnitDiffusionAndDeath) {
  const ScaledParams sp = to_scaled(UnscaledParams(1, 1, 1, 1, 2, 2));
  EXPECT_DOUBLE_EQ(sp.length(), 2.0);
  EXPECT_DOUBLE_EQ(sp.density_weight(), 2.0);
  EXPECT_DOUBLE_EQ(sp.max_harvest(), 1.0);
}

TEST(Params, ScalingDividesByNaturalLength) {
  const UnscaledParams p(4, 3, 1, 1, 0.5, 4);
  const ScaledParams sp = to_scaled(p);
  EXPECT_DOUBLE_EQ(length_scale(p), 2.0);
  EXPECT_DOUBLE_EQ(sp.length(), 2.0);
  EXPECT_DOUBLE_EQ(sp.density_weight(), 0.5);
  EXPECT_DOUBLE_EQ(sp.max_harvest(), 1.0);
}

TEST(Params, ScalingByDeathRate) {
  const ScaledParams sp = to_scaled(UnscaledParams(1, 1, 2, 2, 2, 2));
  EXPECT_NEAR(sp.length(), 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(sp.density_weight(), 1.0);
  EXPECT_DOUBLE_EQ(sp.max_harvest(), 1.0);
}

TEST(Params, UnscaledLength) {
  const UnscaledParams p(4, 1, 1, 1, 1, 7);
  EXPECT_EQ(to_unscaled_length(0.0, p), 0.0);
  EXPECT_DOUBLE_EQ(to_unscaled_length(1.0, p), 2.0);
  EXPECT_NEAR(to_unscaled_length(0.5 * to_scaled(p).length(), p), 3.5, 1e-15);
}

TEST(Params, Objective) {
  EXPECT_EQ(unscale_objective(0.0, UnscaledParams(1, 5, 1, 1, 1, 1)), 0.0);
  EXPECT_DOUBLE_EQ(unscale_objective(1.0, UnscaledParams(1, 3, 1, 1, 1, 1)), 3.0);
  const UnscaledParams p(1, 2, 1, 1, 1, 1);
  EXPECT_DOUBLE_EQ(unscale_objective(0.7 / p.recruitment(), p), 0.7);
}

TEST(Params, Validation) {
  EXPECT_THROW(UnscaledParams(0, 1, 1, 1, 1, 1), DomainError);
  EXPECT_THROW(UnscaledParams(1, -1, 1, 1, 1, 1), DomainError);
  EXPECT_THROW(UnscaledParams(1, 1, 0, 1, 1, 1), DomainError);
  EXPECT_THROW(UnscaledParams(1, 1, 1, 0, 1, 1), DomainError);
  EXPECT_THROW(UnscaledParams(1, 1, 1, 1, -0.1, 1), DomainError);
  EXPECT_THROW(UnscaledParams(1, 1, 1, 1, 1, 0), DomainError);
  EXPECT_THROW(UnscaledParams(1, 1, 1, 1, 1, NAN), DomainError);
  EXPECT_NO_THROW(UnscaledParams(1, 1, 1, 1, 0, 1));
  EXPECT_THROW(ScaledParams(0, 1, 1), DomainError);
  EXPECT_THROW(ScaledParams(1, -1, 1), DomainError);
  EXPECT_THROW(ScaledParams(1, 1, 0), DomainError);
  EXPECT_NO_THROW(ScaledParams(1, 0, 1));
}

TEST(ParamsProperty, RoundTripAndMonotone) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.05, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const double D = pos(rng), R = pos(rng), mu = pos(rng), H = pos(rng),
                 Q = pos(rng), L = pos(rng);
    const UnscaledParams p(D, R, mu, H, Q, L);
    const ScaledParams sp = to_scaled(p);
    EXPECT_NEAR(sp.length() * std::sqrt(D / mu), L, 1e-14 * L);
    EXPECT_NEAR(sp.density_weight() * mu, Q, 1e-14 * Q);
    EXPECT_NEAR(sp.max_harvest() * mu, H, 1e-14 * H);
    EXPECT_GT(to_scaled(UnscaledParams(D, R, mu, H, Q, 1.1 * L)).length(),
              sp.length());
    EXPECT_LT(to_scaled(UnscaledParams(1.1 * D, R, mu, H, Q, L)).length(),
              sp.length());
  }
}

}  // namespace
}  // namespace mpa
