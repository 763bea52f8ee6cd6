#include <algorithm>
#include <cmath>
#include <random>

#include "cli/internal.hpp"
#include "mosqdyn/fixed_points.hpp"
#include "mosqdyn/oracles.hpp"
#include "mosqdyn/simplex.hpp"
#include "mosqdyn/stability.hpp"

namespace mosqdyn::cli {

namespace {

CheckResult make(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

double residual_bound(State z) { return 1e-10 * std::max(1.0, norm_inf(z)); }

// Smallest-distance pairing of two eigenvalue pairs.
double eigen_distance(const EigenPair& a, const EigenPair& b) {
  const double direct = std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
  const double swapped = std::max(std::abs(a[0] - b[1]), std::abs(a[1] - b[0]));
  return std::min(direct, swapped);
}

}  // namespace

std::vector<CheckResult> verify_fixed_points(const Params& p) {
  std::vector<CheckResult> out;
  const FixedPointSet set = find_fixed_points(p);
  double worst = 0.0;
  bool ok = true;
  for (const auto& fp : set.points) {
    worst = std::max(worst, fp.residual);
    ok = ok && fp.residual <= residual_bound(fp.location);
  }
  out.push_back(make("fixed_point_residuals", ok, "max residual " + num(worst)));

  const double b = p.d0() + p.d1();
  const double c = p.d0() + p.alpha() * (1.0 - p.beta() / p.mu());
  for (const auto& fp : set.points) {
    if (fp.formula == FixedPointFormula::phi1_closed_form) {
      const auto q = oracles::quad_roots(0.0, p.d0(), c);
      const double diff = std::abs(q.first.real() - fp.location.x);
      out.push_back(make("phi1_linear_root", diff <= 1e-9 * std::max(1.0, fp.location.x),
                         "|closed form - oracle| = " + num(diff)));
    } else if (fp.formula == FixedPointFormula::phi2_closed_form) {
      const auto q = oracles::quad_roots(p.d1(), b, c);
      const double diff = std::abs(q.second.real() - fp.location.x);
      out.push_back(make("phi2_quadratic_root", q.is_real() && diff <= 1e-9 * std::max(1.0, fp.location.x),
                         "|closed form - oracle| = " + num(diff)));
    }
  }
  return out;
}

std::vector<CheckResult> verify_stability(const Params& p, State z) {
  std::vector<CheckResult> out;
  const Matrix2 analytic = jacobian(p, z);
  const Matrix2 fd = oracles::fd_jacobian([&](State s) { return step(p, s); }, z, 1e-6);
  const double jac_err = oracles::relative_matrix_error(analytic, fd);
  out.push_back(make("jacobian_finite_difference", jac_err <= 1e-5, "relative error " + num(jac_err)));

  const double ev_err = eigen_distance(eigenvalues(analytic), oracles::char_poly_eigenvalues(analytic));
  out.push_back(make("eigenvalues_char_poly", ev_err <= 1e-10, "max difference " + num(ev_err)));

  const auto formula = eigenvalues_from_g_f(p, z.x);
  const EigenPair from_formula{std::complex<double>(formula[0]), std::complex<double>(formula[1])};
  const double gf_err = eigen_distance(eigenvalues(analytic), from_formula);
  out.push_back(make("eigenvalues_g_f_formula", gf_err <= 1e-12, "max difference " + num(gf_err)));
  return out;
}

std::vector<CheckResult> verify_simplex(const SimplexParams& sp) {
  std::vector<CheckResult> out;
  const double x_star = fixed_point_u(sp);
  const auto q = oracles::quad_roots(sp.beta, sp.alpha, -sp.beta);
  const double diff = std::abs(q.second.real() - x_star);
  out.push_back(make("x_star_quadratic_root", diff <= 1e-12, "difference " + num(diff)));

  const auto u = [&](double x) { return u_map(sp, x); };
  const double fd = oracles::fd_derivative(u, x_star, 1e-6);
  const UStability st = u_stability(sp);
  const double d_err = std::abs(fd - st.u_prime_at_star);
  const double cf_err = std::abs(st.u_prime_closed_form - st.u_prime_at_star);
  out.push_back(make("u_prime_finite_difference", d_err <= 1e-6, "difference " + num(d_err)));
  out.push_back(make("u_prime_closed_form", cf_err <= 1e-10, "difference " + num(cf_err)));

  if (sp.invariant_simplex()) {
    const auto fixed = oracles::grid_period_scan(u, 0.0, 1.0, 1, 1000, 1e-12);
    const bool one = fixed.size() == 1 && std::abs(fixed[0] - x_star) <= 1e-8;
    out.push_back(make("fixed_point_grid_scan", one, num(static_cast<double>(fixed.size())) + " point(s)"));

    if (sp.alpha <= 2.0 && sp.beta <= 1.0) {
      const Period2Set per2 = period2_set(sp);
      const auto scan = oracles::grid_period_scan(u, 0.0, 1.0, 2, 1000, 1e-10);
      bool consistent = false;
      if (per2.kind == Period2Set::Kind::whole_interval)
        consistent = scan.size() >= 990;
      else
        consistent = scan.size() == per2.roots.size();
      out.push_back(make("period2_grid_scan", consistent,
                         std::string(to_string(per2.kind)) + ", scan found " +
                             num(static_cast<double>(scan.size()))));
    }
  }
  return out;
}

std::vector<CheckResult> run_verification(int draws, std::uint64_t seed) {
  using oracles::Region;
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  const int n = std::max(draws, 1);

  {
    int disagreements = 0;
    for (int i = 0; i < n; ++i) {
      const Params p = oracles::draw(Region::omega, rng);
      if ((basic_offspring_number(p) > 1.0) != (p.beta() > emergence_threshold(p))) ++disagreements;
    }
    out.push_back(make("r0_threshold_equivalence", disagreements == 0,
                       num(disagreements) + " disagreements in " + num(n)));
  }

  {
    const std::pair<Region, FixedPointKind> cases[] = {
        {Region::omega_star, FixedPointKind::single_origin},
        {Region::phi1, FixedPointKind::two_points},
        {Region::phi2, FixedPointKind::two_points},
        {Region::psi, FixedPointKind::continuum}};
    for (const auto& [region, kind] : cases) {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Params p = oracles::draw(region, rng);
        const FixedPointSet set = find_fixed_points(p);
        bool ok = set.kind == kind;
        for (const auto& fp : set.points) ok = ok && fp.residual <= residual_bound(fp.location);
        if (!ok) ++bad;
      }
      out.push_back(make("fixed_points " + std::string(oracles::to_string(region)), bad == 0,
                         num(bad) + " failures in " + num(n)));
    }
  }

  {
    double worst = 0.0;
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    for (int i = 0; i < n; ++i) {
      const Params p = oracles::draw(Region::omega, rng);
      const State z{coord(rng), coord(rng)};
      const Matrix2 fd = oracles::fd_jacobian([&](State s) { return step(p, s); }, z, 1e-6);
      worst = std::max(worst, oracles::relative_matrix_error(jacobian(p, z), fd));
    }
    out.push_back(make("jacobian_finite_difference", worst <= 1e-5, "max relative error " + num(worst)));
  }

  {
    int bad = 0;
    const Region regions[] = {Region::theta_star_theta1, Region::phi_star_theta2, Region::psi_star};
    for (Region region : regions)
      for (int i = 0; i < n; ++i) {
        const Params p = oracles::draw(region, rng, 1e-6);
        if (!closed_form_type_table(p).all_agree()) ++bad;
      }
    out.push_back(make("type_table_agreement", bad == 0, num(bad) + " disagreements"));
  }

  {
    int bad = 0;
    for (int i = 0; i < n; ++i) {
      const auto [alpha, beta] = oracles::draw_simplex_pair(true, rng);
      const SimplexParams sp{alpha, beta};
      for (int k = 0; k <= 100; ++k) {
        const double v = u_map(sp, k / 100.0);
        if (v < -1e-12 || v > 1.0 + 1e-12) ++bad;
      }
    }
    for (int i = 0; i < std::max(n / 10, 1); ++i) {
      const auto [alpha, beta] = oracles::draw_simplex_pair(false, rng);
      const InvarianceResult r = simplex_invariant({alpha, beta});
      if (r.invariant || !r.witness_image || (*r.witness_image >= 0.0 && *r.witness_image <= 1.0)) ++bad;
    }
    out.push_back(make("simplex_invariance", bad == 0, num(bad) + " failures"));
  }

  {
    const SimplexParams sp{2.0, 1.0};
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double x = k / 999.0;
      worst = std::max(worst, std::abs(u_map(sp, u_map(sp, x)) - x));
    }
    out.push_back(make("involution_at_2_1", worst <= 1e-12, "max |U(U(x)) - x| = " + num(worst)));
  }

  {
    int found = 0;
    for (int i = 0; i < std::max(n / 10, 1); ++i) {
      double alpha = 0.0, beta = 0.0;
      do {
        std::tie(alpha, beta) = oracles::draw_simplex_pair(true, rng);
      } while (std::hypot(alpha - 2.0, beta - 1.0) <= 1e-3);
      const SimplexParams sp{alpha, beta};
      found += static_cast<int>(
          oracles::grid_period_scan([&](double x) { return u_map(sp, x); }, 0.0, 1.0, 2, 1000, 1e-10).size());
    }
    out.push_back(make("period2_emptiness", found == 0, num(found) + " period-2 points found"));
  }
  return out;
}

}  // namespace mosqdyn::cli
