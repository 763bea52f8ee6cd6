#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mosqdyn/params.hpp"
#include "mosqdyn/state.hpp"

namespace mosqdyn {

using EigenPair = std::array<std::complex<double>, 2>;

enum class FixedPointType { attracting, repelling, saddle, non_hyperbolic };
std::string_view to_string(FixedPointType t);

/// Moduli within this distance of 1 are treated as lying on the unit circle.
inline constexpr double kUnitCircleBand = 1e-9;

/// Partial derivatives of the evolution operator at z:
///   [[1 - d0 - 2 d1 x - alpha/(1+x)^2, beta], [alpha/(1+x)^2, 1 - mu]].
Matrix2 jacobian(const Params& p, State z);

/// Roots of the characteristic polynomial, sorted by descending modulus
/// (ties broken by descending real part).
EigenPair eigenvalues(const Matrix2& m);

/// g(x) = mu + d0 + 2 d1 x + alpha/(1+x)^2, so that trace J = 2 - g.
double g_value(const Params& p, double x);
/// f(x) = (mu - d0 - 2 d1 x - alpha/(1+x)^2)^2 + 4 alpha beta/(1+x)^2, the
/// discriminant of the characteristic polynomial. For d1 = 0 these reduce to
/// the usual g and f, and the eigenvalues are (2 - g +- sqrt f) / 2.
double f_value(const Params& p, double x);
/// (2 - g +- sqrt f) / 2 with the + root first.
std::array<double, 2> eigenvalues_from_g_f(const Params& p, double x);

/// Attraction test through the inequality systems on g and f:
///   0 < g <= 2 and sqrt f < g, or 2 < g < 4 and sqrt f < 4 - g.
bool attracting_by_g_f(double g, double f);
/// Repulsion test through g and f:
///   g < 0 and sqrt f < -g, or g > 4 and sqrt f < g - 4.
/// Sufficient but not necessary: eigenvalues of opposite sign with both
/// moduli above 1 are not covered.
bool repelling_by_g_f(double g, double f);

/// Type from eigenvalue moduli.
FixedPointType type_from_eigenvalues(const EigenPair& ev);
/// Three-way label: attracting if every modulus < 1, repelling if every
/// modulus > 1, saddle otherwise (unit-modulus cases included). This is the
/// vocabulary the closed-form type theorem is stated in.
FixedPointType broad_type(const EigenPair& ev);

struct StabilityReport {
  State at;
  double residual = 0.0;
  Matrix2 jacobian{};
  EigenPair eigenvalues{};
  double g = 0.0;
  double f = 0.0;
  FixedPointType type = FixedPointType::non_hyperbolic;
  FixedPointType broad = FixedPointType::saddle;
  bool attracting_by_inequalities = false;
  bool repelling_by_inequalities = false;
  /// The g/f inequality systems agree with the eigenvalue moduli. Always true
  /// for non-hyperbolic points, where the comparison is not meaningful.
  bool inequalities_agree = true;
};

/// Throws NotAFixedPoint when residual(p, z) > tol * max(1, |z|_inf).
StabilityReport classify_fixed_point(const Params& p, State z, double tol = 1e-9);

/// One line of the closed-form type table for the unique-or-two fixed point
/// cases with d1 = 0 and W mapping the quadrant to itself.
struct DeclaredType {
  State point;
  bool on_curve = false;                 ///< sample of the equilibrium curve
  std::optional<FixedPointType> declared;  ///< nullopt on the beta equality boundary
  std::string rule;                      ///< which case of the table applied
  StabilityReport numeric;
  /// declared == broad type of the numeric report (true if undeclared).
  bool agrees = true;
};

struct TypeTable {
  std::vector<DeclaredType> entries;
  bool all_agree() const;
};

/// Throws OutsideTheta unless d1 = 0, alpha <= 1 - d0, 0 < mu <= 1, 0 <= d0 < 1.
TypeTable closed_form_type_table(const Params& p);
TypeTable closed_form_type_table(const Params& p, std::span<const double> curve_samples);

}  // namespace mosqdyn
