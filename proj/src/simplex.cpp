#include "mosqdyn/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mosqdyn/stability.hpp"

namespace mosqdyn {

SimplexParams make_simplex_params(double alpha, double beta) {
  std::vector<DomainError::Violation> bad;
  if (!(std::isfinite(alpha) && alpha > 0.0)) bad.push_back({"alpha", "alpha must be > 0"});
  if (!(std::isfinite(beta) && beta > 0.0)) bad.push_back({"beta", "beta must be > 0"});
  if (!bad.empty()) throw DomainError(std::move(bad));
  return {alpha, beta};
}

Params to_params(const SimplexParams& sp) { return validate(sp.alpha, sp.beta, sp.beta, 0.0, 0.0); }

double u_map(const SimplexParams& sp, double x) {
  return sp.beta * (1.0 - x) - sp.alpha * x / (1.0 + x) + x;
}

double u_derivative(const SimplexParams& sp, double x) {
  return 1.0 - sp.beta - sp.alpha / ((1.0 + x) * (1.0 + x));
}

UValue u_map_checked(const SimplexParams& sp, double x) {
  const double v = u_map(sp, x);
  return {v, v >= 0.0 && v <= 1.0};
}

InvarianceResult simplex_invariant(const SimplexParams& sp) {
  InvarianceResult r;
  r.invariant = sp.invariant_simplex();
  if (r.invariant) return r;

  double witness = 0.0;
  if (sp.beta < 1.0) {
    // Vertex of (1 - beta) x^2 + (1 - alpha) x + beta, clamped to [0, 1].
    witness = std::clamp((sp.alpha - 1.0) / (2.0 * (1.0 - sp.beta)), 0.0, 1.0);
  } else if (sp.beta == 1.0) {
    witness = sp.alpha > 1.0 ? 1.0 : 0.0;
  }
  r.witness = witness;
  r.witness_image = u_map(sp, witness);
  return r;
}

double fixed_point_u(const SimplexParams& sp) {
  return 2.0 * sp.beta / (std::hypot(sp.alpha, 2.0 * sp.beta) + sp.alpha);
}

double rejected_fixed_point_u(const SimplexParams& sp) {
  return -(sp.alpha + std::hypot(sp.alpha, 2.0 * sp.beta)) / (2.0 * sp.beta);
}

std::string_view to_string(UType t) {
  switch (t) {
    case UType::attracting: return "attracting";
    case UType::repelling: return "repelling";
    case UType::boundary: return "boundary";
  }
  return "";
}

UStability u_stability(const SimplexParams& sp) {
  const double a = sp.alpha, b = sp.beta;
  const double x_star = fixed_point_u(sp);
  const double s = std::hypot(a, 2.0 * b);
  UStability r;
  r.u_prime_at_star = u_derivative(sp, x_star);
  r.u_prime_closed_form = 1.0 - (a * a + 4.0 * b * b + (a - 2.0 * b) * s) / (2.0 * a);
  const double m = std::abs(r.u_prime_at_star);
  if (m < 1.0 - kUnitCircleBand)
    r.type = UType::attracting;
  else if (m > 1.0 + kUnitCircleBand)
    r.type = UType::repelling;
  else
    r.type = UType::boundary;
  return r;
}

std::string_view to_string(Period2Set::Kind k) {
  switch (k) {
    case Period2Set::Kind::whole_interval: return "whole_interval";
    case Period2Set::Kind::empty: return "empty";
    case Period2Set::Kind::roots: return "roots";
  }
  return "";
}

Period2Set period2_set(const SimplexParams& sp) {
  const double a = sp.alpha, b = sp.beta;
  std::vector<DomainError::Violation> bad;
  if (!(a > 0.0 && a <= 2.0)) bad.push_back({"alpha", "alpha must lie in (0, 2]"});
  if (!(b > 0.0 && b <= 1.0)) bad.push_back({"beta", "beta must lie in (0, 1]"});
  if (!bad.empty()) throw DomainError(std::move(bad));

  Period2Set r;
  r.containment_condition = (1.0 + b) * (2.0 - b) <= a && a <= 4.0 * (2.0 - b) / (3.0 - b);
  if (a == 2.0 && b == 1.0) {
    r.kind = Period2Set::Kind::whole_interval;
    return r;
  }

  // (U(U(x)) - x) / (U(x) - x) = 0 reduces to
  //   (1 - beta) x^2 + (2 - alpha) x + 1 + beta + alpha / (beta - 2) = 0.
  const double qa = 1.0 - b;
  const double qb = 2.0 - a;
  const double qc = 1.0 + b + a / (b - 2.0);
  std::vector<double> candidates;
  if (b == 1.0) {
    // Leading coefficient vanishes; qc = 2 - alpha = qb, so x = -1.
    if (qb != 0.0) candidates.push_back(-qc / qb);
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    r.discriminant = disc;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      candidates.push_back((a - 2.0 - s) / (2.0 * qa));
      candidates.push_back((a - 2.0 + s) / (2.0 * qa));
    }
  }
  const double x_star = fixed_point_u(sp);
  for (double x : candidates)
    if (x >= 0.0 && x <= 1.0 && std::abs(x - x_star) > 1e-9) r.roots.push_back(x);
  r.kind = r.roots.empty() ? Period2Set::Kind::empty : Period2Set::Kind::roots;
  return r;
}

std::string_view to_string(MonotoneShape s) {
  switch (s) {
    case MonotoneShape::increasing: return "increasing";
    case MonotoneShape::decreasing: return "decreasing";
    case MonotoneShape::valley_left: return "valley_left";
    case MonotoneShape::valley_right: return "valley_right";
  }
  return "";
}

std::optional<MonotoneShape> monotone_shape(SimplexClass c) {
  switch (c) {
    case SimplexClass::C: return MonotoneShape::increasing;
    case SimplexClass::D: return MonotoneShape::decreasing;
    case SimplexClass::E_star: return MonotoneShape::valley_left;
    case SimplexClass::F_star: return MonotoneShape::valley_right;
    case SimplexClass::none: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> u_critical_point(const SimplexParams& sp) {
  if (sp.beta >= 1.0) return std::nullopt;
  return std::sqrt(sp.alpha / (1.0 - sp.beta)) - 1.0;
}

ULimit u_orbit_limit(const SimplexParams& sp, double x0, double tol, std::int64_t max_iter) {
  if (!sp.invariant_simplex()) {
    std::ostringstream os;
    os.precision(12);
    os << "(alpha, beta) = (" << sp.alpha << ", " << sp.beta << ") is outside A u B";
    throw OutsideInvariantRegion(os.str());
  }
  if (!(x0 >= 0.0 && x0 <= 1.0)) throw DomainError({DomainError::Violation{"x0", "x0 must lie in [0, 1]"}});

  ULimit r;
  r.shape = monotone_shape(simplex_class(sp.alpha, sp.beta));
  if (sp.alpha == 2.0 && sp.beta == 1.0) {
    r.kind = ULimit::Kind::two_cycle;
    r.limit = x0;
    r.cycle = {x0, u_map(sp, x0)};
    return r;
  }

  double x = x0;
  double previous_step = 0.0;
  std::int64_t n = 0;
  while (n < max_iter) {
    const double next = u_map(sp, x);
    const double step = std::abs(next - x);
    ++n;
    if (previous_step > 0.0 && step > 0.0) r.distance_ratio = step / previous_step;
    previous_step = step;
    x = next;
    r.final_step = step;
    if (step <= tol) break;
  }
  r.kind = ULimit::Kind::converges;
  r.limit = x;
  r.cycle = {x, x};
  r.iterations = n;
  return r;
}

SimplexAnalysis analyze_simplex(const SimplexParams& sp) {
  SimplexAnalysis a;
  a.params = sp;
  a.invariance = simplex_invariant(sp);
  a.simplex_class = simplex_class(sp.alpha, sp.beta);
  a.monotonic_shape = monotone_shape(a.simplex_class);
  a.x_star = fixed_point_u(sp);
  a.stability = u_stability(sp);
  if (const auto xm = u_critical_point(sp); xm && *xm > 0.0 && *xm < 1.0) a.x_min = *xm;
  if (sp.alpha <= 2.0 && sp.beta <= 1.0) a.period2 = period2_set(sp);
  if (sp.beta < 1.0) {
    const double disc = (1.0 - sp.alpha) * (1.0 - sp.alpha) - 4.0 * sp.beta * (1.0 - sp.beta);
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      const double denom = 2.0 * (1.0 - sp.beta);
      a.proof_roots = std::array<double, 2>{(sp.alpha - 1.0 - s) / denom,
                                            (sp.alpha - 1.0 + s) / denom};
    }
  }
  return a;
}

}  // namespace mosqdyn
