#include "mosqdyn/fixed_points.hpp"

#include <cmath>
#include <sstream>

#include "mosqdyn/dynamics.hpp"

namespace mosqdyn {

double gamma(const Params& p, double x) { return p.alpha() * x / (p.mu() * (1.0 + x)); }

std::string_view to_string(FixedPointKind k) {
  switch (k) {
    case FixedPointKind::single_origin: return "single_origin";
    case FixedPointKind::two_points: return "two_points";
    case FixedPointKind::continuum: return "continuum";
  }
  return "";
}

std::string_view to_string(FixedPointFormula f) {
  switch (f) {
    case FixedPointFormula::origin: return "origin";
    case FixedPointFormula::phi1_closed_form: return "phi1_closed_form";
    case FixedPointFormula::phi2_closed_form: return "phi2_closed_form";
    case FixedPointFormula::continuum_sample: return "continuum_sample";
  }
  return "";
}

std::string ContinuumCurve::describe() const {
  std::ostringstream os;
  os.precision(12);
  os << "y = " << params.alpha() << " x / (" << params.mu() << " (1 + x)), x >= 0";
  return os.str();
}

namespace {

double equilibrium_discriminant(const Params& p) {
  const double diff = p.d0() - p.d1();
  return diff * diff + 4.0 * p.alpha() * p.d1() * (p.beta() - p.mu()) / p.mu();
}

FixedPointReport report(const Params& p, State z, FixedPointFormula formula) {
  return {z, formula, residual(p, z), std::nullopt};
}

}  // namespace

std::optional<double> positive_equilibrium_root(const Params& p) {
  if (p.d1() == 0.0) return std::nullopt;
  const double delta = equilibrium_discriminant(p);
  if (delta < 0.0) return std::nullopt;
  // Larger root of d1 x^2 + b x + c with b = d0 + d1 > 0. The textbook form
  // (sqrt(delta) - b) / (2 d1) cancels when sqrt(delta) ~ b; the product of
  // roots gives the same value as -2c / (b + sqrt(delta)).
  const double b = p.d0() + p.d1();
  const double c = p.d0() + p.alpha() * (1.0 - p.beta() / p.mu());
  const double root = -2.0 * c / (b + std::sqrt(delta));
  if (!(root > 0.0)) return std::nullopt;
  return root;
}

FixedPointSet find_fixed_points(const Params& p) {
  return find_fixed_points(p, kDefaultContinuumSamples);
}

FixedPointSet find_fixed_points(const Params& p, std::span<const double> continuum_samples) {
  const RegionLabel region = classify(p);
  FixedPointSet set;
  if (p.d1() != 0.0) set.discriminant = equilibrium_discriminant(p);

  if (region.in_psi) {
    set.kind = FixedPointKind::continuum;
    set.curve = ContinuumCurve{p};
    for (double x : continuum_samples) {
      const State z{x, gamma(p, x)};
      set.points.push_back(report(p, z, x == 0.0 ? FixedPointFormula::origin
                                                 : FixedPointFormula::continuum_sample));
    }
    return set;
  }

  set.points.push_back(report(p, {0.0, 0.0}, FixedPointFormula::origin));

  if (region.in_phi1) {
    const double x2 = p.alpha() * (p.beta() - p.mu()) / (p.mu() * p.d0()) - 1.0;
    set.kind = FixedPointKind::two_points;
    set.points.push_back(report(p, {x2, gamma(p, x2)}, FixedPointFormula::phi1_closed_form));
  } else if (region.in_phi2) {
    // In Phi2 the constant term of the quadratic is negative, so delta > 0
    // and the root is positive; the optional only guards degenerate rounding.
    if (const auto x2 = positive_equilibrium_root(p)) {
      set.kind = FixedPointKind::two_points;
      FixedPointReport r = report(p, {*x2, gamma(p, *x2)}, FixedPointFormula::phi2_closed_form);
      r.discriminant = set.discriminant;
      set.points.push_back(r);
    }
  }
  return set;
}

}  // namespace mosqdyn
