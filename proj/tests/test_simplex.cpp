#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mosqdyn/oracles.hpp"
#include "mosqdyn/simplex.hpp"

using namespace mosqdyn;

namespace {

SimplexParams sp(double a, double b) { return make_simplex_params(a, b); }

double dist_to_corner(double a, double b) { return std::hypot(a - 2.0, b - 1.0); }

}  // namespace

TEST(SimplexParams, RejectsNonPositive) {
  EXPECT_THROW(make_simplex_params(0, 1), DomainError);
  EXPECT_THROW(make_simplex_params(1, -1), DomainError);
}

TEST(SimplexParams, FullVector) {
  const Params p = to_params(sp(1.2, 0.7));
  EXPECT_EQ(p.alpha(), 1.2);
  EXPECT_EQ(p.beta(), 0.7);
  EXPECT_EQ(p.mu(), 0.7);
  EXPECT_EQ(p.d0(), 0.0);
  EXPECT_EQ(p.d1(), 0.0);
}

TEST(UMap, CornerIsInvolution) {
  const SimplexParams s = sp(2, 1);
  EXPECT_NEAR(u_map(s, 0.3), 7.0 / 13.0, 1e-15);
  EXPECT_NEAR(u_map(s, u_map(s, 0.3)), 0.3, 1e-15);
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    EXPECT_NEAR(u_map(s, x), (1 - x) / (1 + x), 1e-14);
  }
}

TEST(UMap, CheckedFlagsLeavingInterval) {
  EXPECT_TRUE(u_map_checked(sp(1, 0.5), 0.5).in_unit_interval);
  EXPECT_FALSE(u_map_checked(sp(1, 1.5), 0.0).in_unit_interval);
}

TEST(UDerivative, MatchesFiniteDifference) {
  const SimplexParams s = sp(0.7, 0.4);
  for (double x : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const double fd = oracles::fd_derivative([&](double t) { return u_map(s, t); }, x, 1e-6);
    EXPECT_NEAR(u_derivative(s, x), fd, 1e-8);
  }
}

TEST(Invariance, Examples) {
  EXPECT_TRUE(simplex_invariant(sp(2, 1)).invariant);
  EXPECT_TRUE(simplex_invariant(sp(0.5, 0.25)).invariant);

  const InvarianceResult r = simplex_invariant(sp(1.9, 0.1));
  EXPECT_FALSE(r.invariant);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GE(*r.witness, 0.0);
  EXPECT_LE(*r.witness, 1.0);
  EXPECT_LT(u_map(sp(1.9, 0.1), *r.witness), 0.0);
  // Minimiser of 0.9 x^2 - 0.9 x + 0.1.
  EXPECT_NEAR(*r.witness, 0.5, 1e-12);
}

TEST(Invariance, LargeBetaWitnessAtZero) {
  const InvarianceResult r = simplex_invariant(sp(0.5, 1.5));
  EXPECT_FALSE(r.invariant);
  EXPECT_EQ(r.witness, 0.0);
  EXPECT_NEAR(*r.witness_image, 1.5, 1e-15);
}

TEST(Invariance, RandomInsideStaysInInterval) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(true, rng);
    for (int k = 0; k <= 100; ++k) {
      const double y = u_map(sp(a, b), k / 100.0);
      ASSERT_GE(y, -1e-12);
      ASSERT_LE(y, 1 + 1e-12);
    }
  }
}

TEST(Invariance, RandomOutsideHasWitness) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(false, rng);
    const InvarianceResult r = simplex_invariant(sp(a, b));
    ASSERT_FALSE(r.invariant);
    ASSERT_TRUE(r.witness.has_value());
    const double y = u_map(sp(a, b), *r.witness);
    ASSERT_TRUE(y < 0.0 || y > 1.0) << a << ' ' << b;
  }
}

TEST(FixedPointU, Values) {
  EXPECT_NEAR(fixed_point_u(sp(2, 1)), std::sqrt(2.0) - 1, 1e-15);
  EXPECT_NEAR(fixed_point_u(sp(1, 1)), (std::sqrt(5.0) - 1) / 2, 1e-15);
  EXPECT_NEAR(fixed_point_u(sp(1e-10, 0.5)), 1.0, 1e-9);
  EXPECT_LT(rejected_fixed_point_u(sp(1, 1)), 0.0);
}

TEST(FixedPointU, ResidualOnRandomPairs) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> ua(1e-3, 5.0), ub(1e-3, 3.0);
  for (int i = 0; i < 20000; ++i) {
    const SimplexParams s = sp(ua(rng), ub(rng));
    const double x = fixed_point_u(s);
    ASSERT_LE(std::abs(u_map(s, x) - x), 1e-12);
  }
}

TEST(UStability, Corner) {
  const UStability s = u_stability(sp(2, 1));
  EXPECT_NEAR(s.u_prime_at_star, -1.0, 1e-14);
  EXPECT_EQ(s.type, UType::boundary);
}

TEST(UStability, InteriorAttracting) {
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{0.5, 0.25}}) {
    const UStability s = u_stability(sp(a, b));
    EXPECT_EQ(s.type, UType::attracting);
    EXPECT_LT(std::abs(s.u_prime_at_star), 1.0);
    EXPECT_NEAR(s.u_prime_at_star, s.u_prime_closed_form, 1e-12);
    const double fd = oracles::fd_derivative([&](double t) { return u_map(sp(a, b), t); },
                                             fixed_point_u(sp(a, b)), 1e-6);
    EXPECT_NEAR(s.u_prime_at_star, fd, 1e-8);
  }
}

TEST(UStability, AttractingAcrossInvariantRegion) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 5000; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(true, rng);
    if (dist_to_corner(a, b) < 1e-3) continue;
    ASSERT_EQ(u_stability(sp(a, b)).type, UType::attracting) << a << ' ' << b;
  }
}

TEST(Period2, CornerWholeInterval) {
  const Period2Set s = period2_set(sp(2, 1));
  EXPECT_EQ(s.kind, Period2Set::Kind::whole_interval);
}

TEST(Period2, InvariantRegionEmpty) {
  EXPECT_EQ(period2_set(sp(1, 0.5)).kind, Period2Set::Kind::empty);
  std::mt19937_64 rng(59);
  for (int i = 0; i < 2000; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(true, rng);
    if (dist_to_corner(a, b) < 1e-3) continue;
    ASSERT_EQ(period2_set(sp(a, b)).kind, Period2Set::Kind::empty) << a << ' ' << b;
  }
}

TEST(Period2, OutsideInvariantRegionMatchesGridScan) {
  // On (0, 2] x (0, 1] the fixed point never loses stability (U'(x*) >= -1),
  // so no prime 2-cycles exist away from the corner either.
  std::mt19937_64 rng(61);
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(false, rng);
    const SimplexParams s = sp(a, b);
    const Period2Set set = period2_set(s);
    const auto scan = oracles::grid_period_scan([&](double x) { return u_map(s, x); }, 0, 1, 2, 1000, 1e-12);
    ASSERT_EQ(set.roots.size(), scan.size()) << a << ' ' << b;
    ASSERT_GE(u_stability(s).u_prime_at_star, -1.0);
    for (double r : set.roots) ASSERT_NEAR(u_map(s, u_map(s, r)), r, 1e-9);
  }
}

TEST(Period2, PreconditionsEnforced) {
  EXPECT_THROW(period2_set(sp(2.5, 0.5)), DomainError);
  EXPECT_THROW(period2_set(sp(1, 1.5)), DomainError);
}

TEST(Shape, MonotoneByClass) {
  EXPECT_EQ(monotone_shape(SimplexClass::C), MonotoneShape::increasing);
  EXPECT_EQ(monotone_shape(SimplexClass::D), MonotoneShape::decreasing);
  EXPECT_FALSE(monotone_shape(SimplexClass::none).has_value());
}

TEST(Shape, DerivativeSignsMatchClass) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 3000; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(true, rng);
    const SimplexParams s = sp(a, b);
    const SimplexClass c = simplex_class(a, b);
    const auto fd = [&](double x) { return oracles::fd_derivative([&](double t) { return u_map(s, t); }, x, 1e-6); };
    if (c == SimplexClass::C) {
      for (double x : {0.05, 0.5, 0.95}) ASSERT_GT(fd(x), -1e-8) << a << ' ' << b;
    } else if (c == SimplexClass::D) {
      for (double x : {0.05, 0.5, 0.95}) ASSERT_LT(fd(x), 1e-8) << a << ' ' << b;
    } else {
      const auto xmin = u_critical_point(s);
      ASSERT_TRUE(xmin.has_value());
      if (*xmin > 0.02 && *xmin < 0.98) {
        ASSERT_LT(fd(*xmin - 0.01), 0.0);
        ASSERT_GT(fd(*xmin + 0.01), 0.0);
      }
    }
  }
}

TEST(OrbitLimit, Examples) {
  const ULimit a = u_orbit_limit(sp(1, 1), 0);
  EXPECT_EQ(a.kind, ULimit::Kind::converges);
  EXPECT_NEAR(a.limit, (std::sqrt(5.0) - 1) / 2, 1e-10);

  const ULimit b = u_orbit_limit(sp(2, 1), 0.3);
  EXPECT_EQ(b.kind, ULimit::Kind::two_cycle);
  EXPECT_DOUBLE_EQ(b.cycle[0], 0.3);
  EXPECT_NEAR(b.cycle[1], 7.0 / 13.0, 1e-15);

  const ULimit c = u_orbit_limit(sp(0.5, 0.25), 0.9);
  EXPECT_EQ(c.kind, ULimit::Kind::converges);
  EXPECT_NEAR(c.limit, std::sqrt(2.0) - 1, 1e-10);
  ASSERT_TRUE(c.distance_ratio.has_value());
  EXPECT_NEAR(*c.distance_ratio, std::abs(u_stability(sp(0.5, 0.25)).u_prime_at_star), 1e-3);
}

TEST(OrbitLimit, Errors) {
  EXPECT_THROW(u_orbit_limit(sp(1.9, 0.1), 0.5), OutsideInvariantRegion);
  EXPECT_THROW(u_orbit_limit(sp(1, 1), 1.5), DomainError);
}

TEST(OrbitLimit, RandomConvergence) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = oracles::draw_simplex_pair(true, rng);
    if (dist_to_corner(a, b) <= 1e-3) continue;
    const ULimit l = u_orbit_limit(sp(a, b), ux(rng));
    ASSERT_EQ(l.kind, ULimit::Kind::converges);
    ASSERT_NEAR(l.limit, fixed_point_u(sp(a, b)), 1e-8);
  }
}

TEST(Analysis, ProofRootsAndCriticalPoint) {
  const SimplexAnalysis an = analyze_simplex(sp(0.3, 0.8));
  EXPECT_EQ(an.simplex_class, SimplexClass::E_star);
  ASSERT_TRUE(an.x_min.has_value());
  EXPECT_NEAR(*an.x_min, std::sqrt(1.5) - 1, 1e-15);
  ASSERT_TRUE(an.period2.has_value());

  const SimplexAnalysis out = analyze_simplex(sp(1.9, 0.1));
  ASSERT_TRUE(out.proof_roots.has_value());
  const auto q = oracles::quad_roots(0.9, -0.9, 0.1);
  EXPECT_NEAR((*out.proof_roots)[0], q.first.real(), 1e-14);
  EXPECT_NEAR((*out.proof_roots)[1], q.second.real(), 1e-14);
}
