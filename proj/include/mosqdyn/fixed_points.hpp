#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mosqdyn/params.hpp"
#include "mosqdyn/state.hpp"

namespace mosqdyn {

/// gamma(x) = alpha x / (mu (1 + x)): adult density balancing a larvae
/// density x at equilibrium.
double gamma(const Params& p, double x);

enum class FixedPointKind { single_origin, two_points, continuum };
enum class FixedPointFormula { origin, phi1_closed_form, phi2_closed_form, continuum_sample };

std::string_view to_string(FixedPointKind k);
std::string_view to_string(FixedPointFormula f);

struct FixedPointReport {
  State location;
  FixedPointFormula formula = FixedPointFormula::origin;
  double residual = 0.0;
  std::optional<double> discriminant;
};

/// The curve x -> (x, gamma(x)) of equilibria when beta = mu, d0 = d1 = 0.
struct ContinuumCurve {
  Params params;
  State at(double x) const { return {x, gamma(params, x)}; }
  std::string describe() const;
};

struct FixedPointSet {
  FixedPointKind kind = FixedPointKind::single_origin;
  std::vector<FixedPointReport> points;
  /// Discriminant of d1 x^2 + (d0 + d1) x + d0 + alpha (1 - beta/mu);
  /// present whenever d1 != 0.
  std::optional<double> discriminant;
  std::optional<ContinuumCurve> curve;
};

inline constexpr std::array<double, 5> kDefaultContinuumSamples{0.0, 0.5, 1.0, 2.0, 10.0};

FixedPointSet find_fixed_points(const Params& p);
/// As above; in the continuum case the curve is sampled at `continuum_samples`.
FixedPointSet find_fixed_points(const Params& p, std::span<const double> continuum_samples);

/// Positive root of d1 x^2 + (d0 + d1) x + d0 + alpha (1 - beta/mu) = 0 for
/// d1 > 0, evaluated without subtractive cancellation. nullopt when the
/// discriminant is negative or the root is not positive.
std::optional<double> positive_equilibrium_root(const Params& p);

}  // namespace mosqdyn
