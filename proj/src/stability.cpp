#include "mosqdyn/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mosqdyn/dynamics.hpp"
#include "mosqdyn/fixed_points.hpp"

namespace mosqdyn {

std::string_view to_string(FixedPointType t) {
  switch (t) {
    case FixedPointType::attracting: return "attracting";
    case FixedPointType::repelling: return "repelling";
    case FixedPointType::saddle: return "saddle";
    case FixedPointType::non_hyperbolic: return "non_hyperbolic";
  }
  return "";
}

Matrix2 jacobian(const Params& p, State z) {
  const double emergence_slope = p.alpha() / ((1.0 + z.x) * (1.0 + z.x));
  return {{{1.0 - p.d0() - 2.0 * p.d1() * z.x - emergence_slope, p.beta()},
           {emergence_slope, 1.0 - p.mu()}}};
}

namespace {

void sort_by_modulus(EigenPair& ev) {
  const auto before = [](const std::complex<double>& a, const std::complex<double>& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return a.real() > b.real();
  };
  if (before(ev[1], ev[0])) std::swap(ev[0], ev[1]);
}

}  // namespace

EigenPair eigenvalues(const Matrix2& m) {
  // lambda = t +- sqrt(((a - d)/2)^2 + b c) with t the half trace. Writing the
  // discriminant through the half difference avoids cancelling t^2 - det.
  const double half_trace = 0.5 * (m[0][0] + m[1][1]);
  const double half_diff = 0.5 * (m[0][0] - m[1][1]);
  const double disc = half_diff * half_diff + m[0][1] * m[1][0];
  EigenPair ev;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double big = half_trace + std::copysign(s, half_trace);
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double small = big != 0.0 ? det / big : half_trace - std::copysign(s, half_trace);
    ev = {std::complex<double>(big, 0.0), std::complex<double>(small, 0.0)};
  } else {
    const double s = std::sqrt(-disc);
    ev = {std::complex<double>(half_trace, s), std::complex<double>(half_trace, -s)};
  }
  sort_by_modulus(ev);
  return ev;
}

double g_value(const Params& p, double x) {
  return p.mu() + p.d0() + 2.0 * p.d1() * x + p.alpha() / ((1.0 + x) * (1.0 + x));
}

double f_value(const Params& p, double x) {
  const double slope = p.alpha() / ((1.0 + x) * (1.0 + x));
  const double d = p.mu() - p.d0() - 2.0 * p.d1() * x - slope;
  return d * d + 4.0 * p.beta() * slope;
}

std::array<double, 2> eigenvalues_from_g_f(const Params& p, double x) {
  const double g = g_value(p, x);
  const double root_f = std::sqrt(f_value(p, x));
  return {0.5 * (2.0 - g + root_f), 0.5 * (2.0 - g - root_f)};
}

bool attracting_by_g_f(double g, double f) {
  const double r = std::sqrt(f);
  return (g > 0.0 && g <= 2.0 && r < g) || (g > 2.0 && g < 4.0 && r < 4.0 - g);
}

bool repelling_by_g_f(double g, double f) {
  const double r = std::sqrt(f);
  return (g < 0.0 && r < -g) || (g > 4.0 && r < g - 4.0);
}

FixedPointType type_from_eigenvalues(const EigenPair& ev) {
  const double m1 = std::abs(ev[0]), m2 = std::abs(ev[1]);
  if (std::abs(m1 - 1.0) <= kUnitCircleBand || std::abs(m2 - 1.0) <= kUnitCircleBand)
    return FixedPointType::non_hyperbolic;
  const double hi = std::max(m1, m2), lo = std::min(m1, m2);
  if (hi < 1.0) return FixedPointType::attracting;
  if (lo > 1.0) return FixedPointType::repelling;
  return FixedPointType::saddle;
}

FixedPointType broad_type(const EigenPair& ev) {
  const double hi = std::max(std::abs(ev[0]), std::abs(ev[1]));
  const double lo = std::min(std::abs(ev[0]), std::abs(ev[1]));
  if (hi < 1.0 - kUnitCircleBand) return FixedPointType::attracting;
  if (lo > 1.0 + kUnitCircleBand) return FixedPointType::repelling;
  return FixedPointType::saddle;
}

StabilityReport classify_fixed_point(const Params& p, State z, double tol) {
  StabilityReport r;
  r.at = z;
  r.residual = residual(p, z);
  if (!(r.residual <= tol * std::max(1.0, norm_inf(z)))) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << z.x << ", " << z.y << ") is not a fixed point: residual " << r.residual;
    throw NotAFixedPoint(os.str());
  }
  r.jacobian = jacobian(p, z);
  r.eigenvalues = eigenvalues(r.jacobian);
  r.g = g_value(p, z.x);
  r.f = f_value(p, z.x);
  r.type = type_from_eigenvalues(r.eigenvalues);
  r.broad = broad_type(r.eigenvalues);
  r.attracting_by_inequalities = attracting_by_g_f(r.g, r.f);
  r.repelling_by_inequalities = repelling_by_g_f(r.g, r.f);
  if (r.type != FixedPointType::non_hyperbolic) {
    const bool attracting = r.type == FixedPointType::attracting;
    const bool repelling = r.type == FixedPointType::repelling;
    r.inequalities_agree = (attracting == r.attracting_by_inequalities) &&
                           (!r.repelling_by_inequalities || repelling);
  }
  return r;
}

bool TypeTable::all_agree() const {
  return std::all_of(entries.begin(), entries.end(), [](const DeclaredType& e) { return e.agrees; });
}

TypeTable closed_form_type_table(const Params& p) {
  return closed_form_type_table(p, kDefaultContinuumSamples);
}

TypeTable closed_form_type_table(const Params& p, std::span<const double> curve_samples) {
  const RegionLabel region = classify(p);
  if (!region.in_theta)
    throw OutsideTheta("type table requires d1 = 0, alpha <= 1 - d0, 0 < mu <= 1, 0 <= d0 < 1");

  TypeTable table;
  auto add = [&](State z, bool on_curve, std::optional<FixedPointType> declared, std::string rule) {
    DeclaredType e;
    e.point = z;
    e.on_curve = on_curve;
    e.declared = declared;
    e.rule = std::move(rule);
    e.numeric = classify_fixed_point(p, z);
    e.agrees = !declared || *declared == e.numeric.broad;
    table.entries.push_back(std::move(e));
  };

  const State origin{0.0, 0.0};
  if (region.in_theta_star) {
    if (region.in_theta1) {
      add(origin, false, FixedPointType::attracting, "Theta* n Theta1: origin attracting");
    } else if (p.beta() == emergence_threshold(p)) {
      // beta = mu (1 + d0/alpha) belongs to neither Theta1 nor Theta2.
      add(origin, false, std::nullopt, "beta on threshold: deferred to eigenvalues");
    } else {
      add(origin, false, FixedPointType::saddle, "Theta* \\ Theta1: origin saddle");
    }
  } else if (region.in_phi_star) {
    add(origin, false, FixedPointType::saddle, "Phi*: origin saddle");
    const FixedPointSet fixed = find_fixed_points(p);
    for (const auto& fp : fixed.points) {
      if (fp.formula != FixedPointFormula::phi1_closed_form) continue;
      if (region.in_theta2)
        add(fp.location, false, FixedPointType::attracting, "Phi* n Theta2: x2 attracting");
      else
        add(fp.location, false, FixedPointType::saddle, "Phi* \\ Theta2: x2 saddle");
    }
  } else if (region.in_psi_star) {
    for (double x : curve_samples)
      add({x, gamma(p, x)}, true, FixedPointType::saddle, "Psi*: every curve point saddle");
  }
  return table;
}

}  // namespace mosqdyn
