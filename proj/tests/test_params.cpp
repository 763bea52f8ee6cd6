#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "mosqdyn/oracles.hpp"
#include "mosqdyn/params.hpp"

using namespace mosqdyn;

TEST(Validate, AcceptsDecayingExample) {
  const Params p = validate(1.5, 0.4, 0.5, 0, 0);
  EXPECT_EQ(p.alpha(), 1.5);
  EXPECT_EQ(p.beta(), 0.4);
  EXPECT_EQ(p.mu(), 0.5);
}

TEST(Validate, AcceptsConvergingExample) { EXPECT_NO_THROW(validate(6, 0.5, 0.4, 0.6, 0)); }

TEST(Validate, RejectsZeroAlpha) {
  try {
    validate(0, 1, 1, 0, 0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_TRUE(e.violates("alpha"));
    EXPECT_EQ(e.violations().size(), 1u);
  }
}

TEST(Validate, ListsEveryViolation) {
  try {
    validate(-1, 0, 0, -0.5, -2);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.violations().size(), 5u);
    for (const char* f : {"alpha", "beta", "mu", "d0", "d1"}) EXPECT_TRUE(e.violates(f)) << f;
  }
}

TEST(Validate, RejectsNonFinite) {
  EXPECT_THROW(validate(std::nan(""), 1, 1, 0, 0), DomainError);
  EXPECT_THROW(validate(1, std::numeric_limits<double>::infinity(), 1, 0, 0), DomainError);
}

TEST(Classify, DecayingExampleInOmegaStarOutsideTheta) {
  const RegionLabel r = classify(validate(1.5, 0.4, 0.5, 0, 0));
  EXPECT_TRUE(r.in_omega_star);
  EXPECT_FALSE(r.in_theta);
}

TEST(Classify, ConvergingExampleInPhi1OutsideTheta) {
  const RegionLabel r = classify(validate(6, 0.5, 0.4, 0.6, 0));
  EXPECT_TRUE(r.in_phi1);
  EXPECT_FALSE(r.in_theta);
  EXPECT_FALSE(r.in_omega_star);
}

TEST(Classify, UnitRatesInPsi) {
  const RegionLabel r = classify(validate(1, 1, 1, 0, 0));
  EXPECT_TRUE(r.in_psi);
  EXPECT_TRUE(r.in_psi_star);
  EXPECT_FALSE(r.in_phi1);
  EXPECT_FALSE(r.in_phi2);
  EXPECT_FALSE(r.in_omega_star);
}

TEST(Classify, Phi2NeedsPositiveD1) {
  const RegionLabel r = classify(validate(1, 2, 0.5, 0.5, 0.5));
  EXPECT_TRUE(r.in_phi2);
  EXPECT_FALSE(r.in_theta);
}

TEST(Classify, ThetaSubsets) {
  const RegionLabel below = classify(validate(0.4, 0.3, 0.5, 0.2, 0));
  EXPECT_TRUE(below.in_theta);
  EXPECT_TRUE(below.in_theta1);
  EXPECT_TRUE(below.in_theta_star);
  EXPECT_FALSE(below.in_theta2);

  const RegionLabel boundary = classify(validate(0.5, 2, 1, 0.5, 0));
  EXPECT_TRUE(boundary.in_theta);
  EXPECT_FALSE(boundary.in_theta1);
  EXPECT_FALSE(boundary.in_theta2);

  const RegionLabel above = classify(validate(0.5, 1.5, 0.5, 0.25, 0));
  EXPECT_TRUE(above.in_phi_star);
  EXPECT_TRUE(above.in_theta2);
}

TEST(Classify, RegionsPartitionOmega) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const RegionLabel r = classify(oracles::draw(oracles::Region::omega, rng));
    const int count = r.in_omega_star + r.in_phi1 + r.in_phi2 + r.in_psi;
    ASSERT_EQ(count, 1);
  }
}

TEST(SimplexClass, BeyondOneMinusBetaIsEStar) {
  // alpha = 0.3 exceeds 1 - beta = 0.2 but not 2 (1 - beta) = 0.4.
  EXPECT_EQ(simplex_class(0.3, 0.8), SimplexClass::E_star);
}

TEST(SimplexClass, Representatives) {
  EXPECT_EQ(simplex_class(0.1, 0.5), SimplexClass::C);
  EXPECT_EQ(simplex_class(2, 1), SimplexClass::D);
  EXPECT_EQ(simplex_class(3, 0.5), SimplexClass::none);
}

TEST(SimplexClass, PartitionsInvariantRegion) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(true, rng);
    ASSERT_NE(simplex_class(a, b), SimplexClass::none) << a << ' ' << b;
  }
}

TEST(InvariantRegion, Examples) {
  EXPECT_TRUE(in_set_B(2, 1));
  EXPECT_TRUE(in_set_A(0.5, 0.25));
  EXPECT_FALSE(in_invariant_region(1.9, 0.1));
}

TEST(OffspringNumber, Examples) {
  EXPECT_NEAR(basic_offspring_number(validate(6, 0.5, 0.4, 0.6, 0)), 3.0 / 2.64, 1e-12);
  EXPECT_NEAR(basic_offspring_number(validate(1.5, 0.4, 0.5, 0, 0)), 0.8, 1e-12);
  EXPECT_EQ(basic_offspring_number(validate(0.7, 0.3, 0.3, 0, 0.2)), 1.0);
}

TEST(OffspringNumber, ThresholdEquivalence) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const Params p = oracles::draw(oracles::Region::omega, rng);
    ASSERT_EQ(basic_offspring_number(p) > 1.0, p.beta() > emergence_threshold(p));
  }
}
