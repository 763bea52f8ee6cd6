#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "mosqdyn/params.hpp"
#include "mosqdyn/stability.hpp"
#include "mosqdyn/state.hpp"

// Independent numerical cross-checks. None of these reuse the closed forms
// they are meant to check.
namespace mosqdyn::oracles {

struct OracleConfig {
  double fd_step = 1e-6;
  int grid_points = 1000;
  std::uint64_t seed = 20240917;
};

/// Throws std::invalid_argument unless fd_step > 0 and grid_points >= 2.
void check(const OracleConfig& config);

struct QuadRoots {
  /// 0 (a = b = 0, c != 0), 1 (linear) or 2.
  int count = 0;
  std::complex<double> first;
  std::complex<double> second;
  bool is_real() const { return first.imag() == 0.0 && second.imag() == 0.0; }
};

/// Roots of a r^2 + b r + c, pairing the large root -(b + sign(b) sqrt(D)) / 2a
/// with c / (a r1) so neither root suffers cancellation. Real roots are
/// ordered ascending; a complex pair has the positive imaginary part first.
/// Throws DegenerateAllZero when a = b = c = 0.
QuadRoots quad_roots(double a, double b, double c);

/// max(|a| r^2, |b| r, |c|): scale for judging |a r^2 + b r + c|.
double quad_residual_scale(double a, double b, double c, std::complex<double> r);

/// Eigenvalues as roots of lambda^2 - tr lambda + det, via quad_roots,
/// sorted like stability::eigenvalues.
EigenPair char_poly_eigenvalues(const Matrix2& m);

using Map2 = std::function<State(State)>;
using Map1 = std::function<double(double)>;

/// Centered differences, entrywise.
Matrix2 fd_jacobian(const Map2& map, State z, double h);
double fd_derivative(const Map1& map, double x, double h);

/// Max entrywise difference divided by max(1, max |analytic entry|).
double relative_matrix_error(const Matrix2& analytic, const Matrix2& approx);

/// Approximate points of period `period` for `map` on [lo, hi]:
///  - bisection roots of map^period(x) - x at grid sign changes, and
///  - grid points where |map^period(x) - x| <= tol (catches continua of
///    periodic points, where there is no sign change).
/// Candidates within one grid spacing of a point of a lower period d | period
/// (found by the same scan) are dropped, so a period-2 scan does not report
/// fixed points. Results are ascending and deduplicated to one grid spacing.
std::vector<double> grid_period_scan(const Map1& map, double lo, double hi, int period,
                                     int grid, double tol);

// Seeded samplers used by the verification suite and the tests. Each draws
// uniformly within a box and, where needed, by construction on the defining
// relation (e.g. beta = mu for Psi); all results satisfy their set test.
enum class Region {
  omega,
  omega_star,
  phi1,
  phi2,
  psi,
  theta_star_theta1,  ///< Theta* n Theta1
  theta_star_minus_theta1,
  phi_star_theta2,  ///< Phi* n Theta2
  psi_star,
};
std::string_view to_string(Region r);

/// `boundary_margin` rejects draws whose beta lies within that distance of
/// mu (1 + d0 / alpha). Inside the Theta-family regions beta is drawn from
/// (0, 1], the same unit scale as the other rates there.
Params draw(Region region, std::mt19937_64& rng, double boundary_margin = 0.0);

/// Uniform draw from A u B (inside = true) or from (0, 2] x (0, 1] minus A u B.
std::pair<double, double> draw_simplex_pair(bool inside, std::mt19937_64& rng);

}  // namespace mosqdyn::oracles
