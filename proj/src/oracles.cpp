#include "mosqdyn/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mosqdyn/errors.hpp"

namespace mosqdyn::oracles {

void check(const OracleConfig& config) {
  if (!(config.fd_step > 0.0)) throw std::invalid_argument("fd_step must be > 0");
  if (config.grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
}

QuadRoots quad_roots(double a, double b, double c) {
  QuadRoots r;
  if (a == 0.0) {
    if (b == 0.0) {
      if (c == 0.0) throw DegenerateAllZero("quad_roots: all coefficients are zero");
      return r;
    }
    r.count = 1;
    r.first = r.second = -c / b;
    return r;
  }
  r.count = 2;
  const double disc = std::fma(b, b, -4.0 * a * c);
  if (disc >= 0.0) {
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r1 = 0.0, r2 = 0.0;
    if (q != 0.0) {
      r1 = q / a;
      r2 = c / q;
    }
    if (r1 > r2) std::swap(r1, r2);
    r.first = r1;
    r.second = r2;
  } else {
    const double re = -b / (2.0 * a);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(a));
    r.first = {re, im};
    r.second = {re, -im};
  }
  return r;
}

double quad_residual_scale(double a, double b, double c, std::complex<double> r) {
  const double m = std::abs(r);
  return std::max({std::abs(a) * m * m, std::abs(b) * m, std::abs(c)});
}

EigenPair char_poly_eigenvalues(const Matrix2& m) {
  const double trace = m[0][0] + m[1][1];
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const QuadRoots q = quad_roots(1.0, -trace, det);
  EigenPair ev{q.first, q.second};
  const auto before = [](const std::complex<double>& x, const std::complex<double>& y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
    return x.real() > y.real();
  };
  if (before(ev[1], ev[0])) std::swap(ev[0], ev[1]);
  return ev;
}

Matrix2 fd_jacobian(const Map2& map, State z, double h) {
  Matrix2 j{};
  const State xp = map({z.x + h, z.y}), xm = map({z.x - h, z.y});
  const State yp = map({z.x, z.y + h}), ym = map({z.x, z.y - h});
  j[0][0] = (xp.x - xm.x) / (2.0 * h);
  j[1][0] = (xp.y - xm.y) / (2.0 * h);
  j[0][1] = (yp.x - ym.x) / (2.0 * h);
  j[1][1] = (yp.y - ym.y) / (2.0 * h);
  return j;
}

double fd_derivative(const Map1& map, double x, double h) {
  return (map(x + h) - map(x - h)) / (2.0 * h);
}

double relative_matrix_error(const Matrix2& analytic, const Matrix2& approx) {
  double scale = 1.0, diff = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      scale = std::max(scale, std::abs(analytic[i][k]));
      diff = std::max(diff, std::abs(analytic[i][k] - approx[i][k]));
    }
  return diff / scale;
}

namespace {

double displacement(const Map1& map, double x, int period) {
  double y = x;
  for (int i = 0; i < period; ++i) y = map(y);
  return y - x;
}

std::vector<double> raw_scan(const Map1& map, double lo, double hi, int period, int grid,
                             double tol) {
  std::vector<double> found;
  const double spacing = (hi - lo) / (grid - 1);
  std::vector<double> xs(grid), gs(grid);
  for (int i = 0; i < grid; ++i) {
    xs[i] = i + 1 == grid ? hi : lo + i * spacing;
    gs[i] = displacement(map, xs[i], period);
    if (std::abs(gs[i]) <= tol) found.push_back(xs[i]);
  }
  for (int i = 0; i + 1 < grid; ++i) {
    double a = xs[i], b = xs[i + 1];
    double ga = gs[i], gb = gs[i + 1];
    if (!std::isfinite(ga) || !std::isfinite(gb)) continue;
    if (std::abs(ga) <= tol || std::abs(gb) <= tol || (ga < 0.0) == (gb < 0.0)) continue;
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
      const double mid = 0.5 * (a + b);
      const double gm = displacement(map, mid, period);
      if (gm == 0.0) {
        a = b = mid;
        break;
      }
      if ((gm < 0.0) == (ga < 0.0)) {
        a = mid;
        ga = gm;
      } else {
        b = mid;
      }
    }
    found.push_back(0.5 * (a + b));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<double> grid_period_scan(const Map1& map, double lo, double hi, int period, int grid,
                                     double tol) {
  if (period < 1) throw std::invalid_argument("grid_period_scan: period must be >= 1");
  if (grid < 2) throw std::invalid_argument("grid_period_scan: grid must be >= 2");
  if (!(hi > lo)) throw std::invalid_argument("grid_period_scan: empty interval");

  const double spacing = (hi - lo) / (grid - 1);
  std::vector<double> lower;
  for (int d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    const auto roots = raw_scan(map, lo, hi, d, grid, tol);
    lower.insert(lower.end(), roots.begin(), roots.end());
  }

  std::vector<double> result;
  for (double x : raw_scan(map, lo, hi, period, grid, tol)) {
    const bool lower_period = std::any_of(lower.begin(), lower.end(),
                                          [&](double r) { return std::abs(r - x) <= spacing; });
    if (lower_period) continue;
    if (!result.empty() && x - result.back() < 0.5 * spacing) continue;
    result.push_back(x);
  }
  return result;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::omega: return "Omega";
    case Region::omega_star: return "Omega*";
    case Region::phi1: return "Phi1";
    case Region::phi2: return "Phi2";
    case Region::psi: return "Psi";
    case Region::theta_star_theta1: return "Theta* n Theta1";
    case Region::theta_star_minus_theta1: return "Theta* \\ Theta1";
    case Region::phi_star_theta2: return "Phi* n Theta2";
    case Region::psi_star: return "Psi*";
  }
  return "";
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::generate_canonical<double, 53>(rng) < p; }

RawParams draw_omega(std::mt19937_64& rng) {
  RawParams r;
  r.alpha = uniform(rng, 1e-3, 5.0);
  r.beta = uniform(rng, 1e-3, 5.0);
  r.mu = uniform(rng, 1e-3, 5.0);
  r.d0 = coin(rng, 0.25) ? 0.0 : uniform(rng, 1e-3, 2.0);
  r.d1 = coin(rng, 0.25) ? 0.0 : uniform(rng, 1e-3, 2.0);
  return r;
}

RawParams draw_theta_box(std::mt19937_64& rng) {
  RawParams r;
  r.d0 = coin(rng, 0.2) ? 0.0 : uniform(rng, 0.0, 1.0);
  r.alpha = uniform(rng, 1e-3, 1.0 - r.d0);
  r.mu = uniform(rng, 1e-3, 1.0);
  r.beta = uniform(rng, 1e-3, 1.0);
  r.d1 = 0.0;
  return r;
}

bool in_region(Region region, const RegionLabel& l) {
  switch (region) {
    case Region::omega: return true;
    case Region::omega_star: return l.in_omega_star;
    case Region::phi1: return l.in_phi1;
    case Region::phi2: return l.in_phi2;
    case Region::psi: return l.in_psi;
    case Region::theta_star_theta1: return l.in_theta_star && l.in_theta1;
    case Region::theta_star_minus_theta1: return l.in_theta_star && !l.in_theta1;
    case Region::phi_star_theta2: return l.in_phi_star && l.in_theta2;
    case Region::psi_star: return l.in_psi_star;
  }
  return false;
}

}  // namespace

Params draw(Region region, std::mt19937_64& rng, double boundary_margin) {
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    RawParams raw;
    switch (region) {
      case Region::psi: {
        raw = draw_omega(rng);
        raw.d0 = raw.d1 = 0.0;
        raw.beta = raw.mu;
        break;
      }
      case Region::psi_star: {
        raw.alpha = uniform(rng, 1e-3, 1.0);
        raw.mu = raw.beta = uniform(rng, 1e-3, 1.0);
        break;
      }
      case Region::phi1: {
        raw = draw_omega(rng);
        raw.d1 = 0.0;
        if (raw.d0 == 0.0) raw.d0 = uniform(rng, 1e-3, 2.0);
        break;
      }
      case Region::phi2: {
        raw = draw_omega(rng);
        if (raw.d1 == 0.0) raw.d1 = uniform(rng, 1e-3, 2.0);
        break;
      }
      case Region::theta_star_theta1:
      case Region::theta_star_minus_theta1:
      case Region::phi_star_theta2:
        raw = draw_theta_box(rng);
        break;
      case Region::omega:
      case Region::omega_star:
        raw = draw_omega(rng);
        break;
    }
    const Params p = validate(raw);
    if (!in_region(region, classify(p))) continue;
    if (boundary_margin > 0.0 && region != Region::psi && region != Region::psi_star &&
        std::abs(p.beta() - emergence_threshold(p)) <= boundary_margin)
      continue;
    return p;
  }
  throw std::runtime_error("draw: rejection sampling did not terminate");
}

std::pair<double, double> draw_simplex_pair(bool inside, std::mt19937_64& rng) {
  for (;;) {
    const double alpha = uniform(rng, 1e-6, 2.0);
    const double beta = uniform(rng, 1e-6, 1.0);
    if (in_invariant_region(alpha, beta) == inside) return {alpha, beta};
  }
}

}  // namespace mosqdyn::oracles
