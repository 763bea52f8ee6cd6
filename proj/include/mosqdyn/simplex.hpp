#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mosqdyn/params.hpp"
#include "mosqdyn/state.hpp"

namespace mosqdyn {

/// The special case beta = mu, d0 = d1 = 0, described by (alpha, beta) alone.
/// The operator then preserves x + y, and its restriction to the segment
/// x + y = 1 is the map U(x) = beta (1 - x) - alpha x / (1 + x) + x.
struct SimplexParams {
  double alpha = 0.0;
  double beta = 0.0;

  /// True iff (alpha, beta) in A u B, i.e. iff the segment is invariant.
  bool invariant_simplex() const { return in_invariant_region(alpha, beta); }
};

/// Throws DomainError unless alpha > 0 and beta > 0.
SimplexParams make_simplex_params(double alpha, double beta);

/// The full five-parameter vector (alpha, beta, beta, 0, 0).
Params to_params(const SimplexParams& sp);

double u_map(const SimplexParams& sp, double x);
/// U'(x) = 1 - beta - alpha / (1 + x)^2.
double u_derivative(const SimplexParams& sp, double x);

struct UValue {
  double value = 0.0;
  bool in_unit_interval = false;
};
UValue u_map_checked(const SimplexParams& sp, double x);

struct InvarianceResult {
  bool invariant = false;
  /// x in [0, 1] with U(x) outside [0, 1]; present iff !invariant.
  std::optional<double> witness;
  std::optional<double> witness_image;
};

/// A u B membership. When it fails the witness is the minimiser over [0, 1]
/// of (1 - beta) x^2 + (1 - alpha) x + beta, whose sign is that of U(x);
/// for beta > 1 the witness is x = 0, where U(0) = beta.
InvarianceResult simplex_invariant(const SimplexParams& sp);

/// x* = (sqrt(alpha^2 + 4 beta^2) - alpha) / (2 beta), evaluated in the
/// rationalised form 2 beta / (sqrt(alpha^2 + 4 beta^2) + alpha).
double fixed_point_u(const SimplexParams& sp);
/// The other root of the fixed-point quadratic; always negative.
double rejected_fixed_point_u(const SimplexParams& sp);

enum class UType { attracting, repelling, boundary };
std::string_view to_string(UType t);

struct UStability {
  double u_prime_at_star = 0.0;   ///< 1 - beta - alpha / (1 + x*)^2
  double u_prime_closed_form = 0.0;  ///< 1 - (a^2 + 4b^2 + (a - 2b) sqrt(a^2 + 4b^2)) / (2a)
  UType type = UType::boundary;   ///< boundary means |U'(x*)| = 1 within kUnitCircleBand
};
UStability u_stability(const SimplexParams& sp);

struct Period2Set {
  enum class Kind { whole_interval, empty, roots };
  Kind kind = Kind::empty;
  /// Real roots of (1 - beta) x^2 + (2 - alpha) x + 1 + beta + alpha / (beta - 2)
  /// lying in [0, 1] and distinct from x*.
  std::vector<double> roots;
  /// Discriminant of that quadratic (absent when beta = 1, where it degenerates).
  std::optional<double> discriminant;
  /// (1 + beta)(2 - beta) <= alpha <= 4 (2 - beta) / (3 - beta).
  bool containment_condition = false;
};
std::string_view to_string(Period2Set::Kind k);

/// Prime-period-2 points of U. Throws DomainError unless alpha in (0, 2]
/// and beta in (0, 1].
Period2Set period2_set(const SimplexParams& sp);

enum class MonotoneShape { increasing, decreasing, valley_left, valley_right };
std::string_view to_string(MonotoneShape s);
std::optional<MonotoneShape> monotone_shape(SimplexClass c);

struct ULimit {
  enum class Kind { converges, two_cycle };
  Kind kind = Kind::converges;
  /// Fixed point approached (converges) or x0 (two_cycle).
  double limit = 0.0;
  /// {x0, U(x0)} for the two-cycle; {limit, limit} otherwise.
  std::array<double, 2> cycle{};
  std::int64_t iterations = 0;
  double final_step = 0.0;
  /// Last ratio |x_{n+1} - x_n| / |x_n - x_{n-1}|; tends to |U'(x*)|.
  std::optional<double> distance_ratio;
  std::optional<MonotoneShape> shape;
};

/// Long-run behaviour of U from x0 in [0, 1]. At (alpha, beta) = (2, 1) the
/// map is the involution (1 - x) / (1 + x) and every orbit is a two-cycle;
/// elsewhere in A u B iterates are run until successive steps fall below tol.
/// Throws OutsideInvariantRegion outside A u B, DomainError for x0 outside
/// [0, 1].
ULimit u_orbit_limit(const SimplexParams& sp, double x0, double tol = 1e-12,
                     std::int64_t max_iter = 10'000'000);

/// x_min = sqrt(alpha / (1 - beta)) - 1, the critical point of U; nullopt
/// for beta >= 1.
std::optional<double> u_critical_point(const SimplexParams& sp);

struct SimplexAnalysis {
  SimplexParams params;
  InvarianceResult invariance;
  SimplexClass simplex_class = SimplexClass::none;
  std::optional<MonotoneShape> monotonic_shape;
  double x_star = 0.0;
  UStability stability;
  /// Interior critical point of U, when it lies in (0, 1).
  std::optional<double> x_min;
  std::optional<Period2Set> period2;  ///< absent outside alpha <= 2, beta <= 1
  /// Roots x(1) <= x(2) of (1 - beta) x^2 + (1 - alpha) x + beta, present when
  /// beta < 1 and (1 - alpha)^2 >= 4 beta (1 - beta).
  std::optional<std::array<double, 2>> proof_roots;
};

SimplexAnalysis analyze_simplex(const SimplexParams& sp);

}  // namespace mosqdyn
