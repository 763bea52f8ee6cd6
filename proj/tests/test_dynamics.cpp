#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "mosqdyn/dynamics.hpp"
#include "mosqdyn/fixed_points.hpp"
#include "mosqdyn/oracles.hpp"
#include "mosqdyn/simplex.hpp"

using namespace mosqdyn;

TEST(Step, OriginIsFixed) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(step(oracles::draw(oracles::Region::omega, rng), {0, 0}), (State{0, 0}));
}

TEST(Step, ConvergingExampleFixedPoint) {
  const State z = step(validate(6, 0.5, 0.4, 0.6, 0), {1.5, 9});
  EXPECT_NEAR(z.x, 1.5, 1e-14);
  EXPECT_NEAR(z.y, 9.0, 1e-14);
}

TEST(Step, SimplexSumPreserved) {
  const Params p = validate(2, 1, 1, 0, 0);
  for (double x = 0; x <= 1.0; x += 0.125) {
    const State z = step(p, {x, 1 - x});
    EXPECT_NEAR(z.x + z.y, 1.0, 1e-15);
  }
}

TEST(Step, RestrictionMatchesUMap) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(true, rng);
    const SimplexParams sp = make_simplex_params(a, b);
    const Params p = to_params(sp);
    double x = u(rng);
    State z{x, 1 - x};
    for (int n = 0; n < 50; ++n) {
      z = step(p, z);
      x = u_map(sp, x);
      ASSERT_NEAR(z.x, x, 1e-12);
    }
  }
}

TEST(Orbit, DecayingExampleConvergesToOrigin) {
  const auto t0 = std::chrono::steady_clock::now();
  const OrbitResult r = orbit(validate(1.5, 0.4, 0.5, 0, 0), {5, 4});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto* c = std::get_if<Converged>(&r.verdict);
  ASSERT_NE(c, nullptr) << verdict_name(r.verdict);
  EXPECT_LE(norm_inf(c->to), 1e-6);
  EXPECT_LE(r.iterations_used, 100000);
  EXPECT_FALSE(r.left_positive_quadrant);
  EXPECT_LT(secs, 1.0);
}

TEST(Orbit, GrowingExampleDivergesWithBoundedAdults) {
  OrbitOptions opt;
  opt.max_iter = 10'000'000;
  opt.divergence_threshold = 1e6;
  const OrbitResult r = orbit(validate(1.5, 0.5, 0.4, 0, 0), {10, 9}, opt);
  const auto* d = std::get_if<DivergedX>(&r.verdict);
  ASSERT_NE(d, nullptr) << verdict_name(r.verdict);
  EXPECT_GT(d->x_at_detection, 1e6);
  EXPECT_NEAR(d->y_limit_estimate, 3.75, 1e-2);
}

TEST(Orbit, ConvergingExampleReachesPositivePoint) {
  const OrbitResult r = orbit(validate(6, 0.5, 0.4, 0.6, 0), {50, 80});
  const auto* c = std::get_if<Converged>(&r.verdict);
  ASSERT_NE(c, nullptr) << verdict_name(r.verdict);
  EXPECT_NEAR(c->to.x, 1.5, 1e-6);
  EXPECT_NEAR(c->to.y, 9.0, 1e-6);
}

TEST(Orbit, TwoCycleOnSimplexDetected) {
  const OrbitResult r = orbit(validate(2, 1, 1, 0, 0), {0.3, 0.7});
  const auto* per = std::get_if<Periodic>(&r.verdict);
  ASSERT_NE(per, nullptr) << verdict_name(r.verdict);
  EXPECT_EQ(per->period, 2);
}

TEST(Orbit, FixedStartConvergesImmediately) {
  const OrbitResult r = orbit(validate(6, 0.5, 0.4, 0.6, 0), {0, 0});
  EXPECT_TRUE(std::holds_alternative<Converged>(r.verdict));
  EXPECT_EQ(r.iterations_used, 1);
}

TEST(Orbit, ContinuumPointsCountAsConverged) {
  const Params p = validate(0.5, 0.5, 0.5, 0, 0);
  const OrbitResult r = orbit(p, {0.4, 0.2});
  const auto* c = std::get_if<Converged>(&r.verdict);
  ASSERT_NE(c, nullptr) << verdict_name(r.verdict);
  EXPECT_NEAR(c->to.y, gamma(p, c->to.x), 1e-7);
}

TEST(Orbit, BudgetExhaustedIsUndecided) {
  OrbitOptions opt;
  opt.max_iter = 5;
  const OrbitResult r = orbit(validate(1.5, 0.4, 0.5, 0, 0), {5, 4}, opt);
  EXPECT_TRUE(std::holds_alternative<Undecided>(r.verdict));
  EXPECT_EQ(r.iterations_used, 5);
  ASSERT_FALSE(r.samples.empty());
  EXPECT_EQ(r.samples.back().iter, 5);
}

TEST(Orbit, NegativeExcursionFlagged) {
  // A large emergence rate drives x negative on the first step.
  const OrbitResult r = orbit(validate(5, 0.1, 0.5, 0, 0), {1, 0});
  EXPECT_TRUE(r.left_positive_quadrant);
}

TEST(Orbit, SamplesAreStridedButKeepLast) {
  OrbitOptions opt;
  opt.max_iter = 50'000;
  opt.divergence_threshold = 1e300;
  const OrbitResult r = orbit(validate(1.5, 0.5, 0.4, 0, 0), {10, 9}, opt);
  EXPECT_LT(r.samples.size(), 6000u);
  EXPECT_EQ(r.samples.front().iter, 0);
  EXPECT_EQ(r.samples.back().iter, r.iterations_used);
  for (std::size_t i = 1; i < r.samples.size(); ++i) ASSERT_LT(r.samples[i - 1].iter, r.samples[i].iter);
}

TEST(Orbit, InvalidOptionsThrow) {
  const Params p = validate(1, 1, 1, 0, 0);
  OrbitOptions bad;
  bad.tol = 0;
  EXPECT_THROW(orbit(p, {0, 0}, bad), std::invalid_argument);
  bad = {};
  bad.max_iter = 0;
  EXPECT_THROW(orbit(p, {0, 0}, bad), std::invalid_argument);
}

TEST(LocalLimit, BelowThresholdOrigin) {
  const Params p = validate(0.4, 0.3, 0.5, 0.2, 0);
  const auto lim = local_limit(p);
  ASSERT_TRUE(lim.has_value());
  EXPECT_EQ(*lim, (State{0, 0}));
  const OrbitResult r = orbit(p, {0.01, 0.01});
  const auto* c = std::get_if<Converged>(&r.verdict);
  ASSERT_NE(c, nullptr);
  EXPECT_LE(norm_inf(c->to), 1e-6);
}

TEST(LocalLimit, AboveThresholdPositivePoint) {
  const Params p = validate(0.5, 1.5, 0.5, 0.25, 0);
  const auto lim = local_limit(p);
  ASSERT_TRUE(lim.has_value());
  EXPECT_NEAR(lim->x, 3.0, 1e-12);
  EXPECT_NEAR(lim->y, 0.75, 1e-12);
  const OrbitResult r = orbit(p, {3.05, 0.74});
  const auto* c = std::get_if<Converged>(&r.verdict);
  ASSERT_NE(c, nullptr);
  EXPECT_NEAR(c->to.x, 3.0, 1e-6);
  EXPECT_NEAR(c->to.y, 0.75, 1e-6);
}

TEST(LocalLimit, EqualityBoundaryGivesOrigin) {
  const Params p = validate(0.5, 1.5, 1, 0.25, 0);
  ASSERT_EQ(p.beta(), emergence_threshold(p));
  EXPECT_EQ(*local_limit(p), (State{0, 0}));
}

TEST(LocalLimit, OutsideSelfMapRegionThrows) {
  EXPECT_THROW(local_limit(validate(6, 0.5, 0.4, 0.6, 0)), NotQuadrantPreserving);
  EXPECT_THROW(local_limit(validate(0.4, 0.3, 0.5, 0.2, 0.1)), NotQuadrantPreserving);
}

TEST(LocalLimit, NoLinearDeathAboveThresholdUnbounded) {
  EXPECT_FALSE(local_limit(validate(0.5, 0.8, 0.5, 0, 0)).has_value());
}
