#include "mosqdyn/params.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace mosqdyn {

namespace {

std::string join_messages(const std::vector<DomainError::Violation>& violations) {
  std::ostringstream os;
  os << "invalid parameters:";
  for (const auto& v : violations) os << ' ' << v.message << ';';
  return os.str();
}

}  // namespace

DomainError::DomainError(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

bool DomainError::violates(const std::string& field) const noexcept {
  for (const auto& v : violations_)
    if (v.field == field) return true;
  return false;
}

Params validate(const RawParams& raw) {
  std::vector<DomainError::Violation> bad;
  auto require = [&](const char* name, double value, bool positive) {
    std::ostringstream os;
    os.precision(12);
    if (!std::isfinite(value)) {
      os << name << " must be finite (got " << value << ")";
    } else if (positive && !(value > 0.0)) {
      os << name << " must be > 0 (got " << value << ")";
    } else if (!positive && !(value >= 0.0)) {
      os << name << " must be >= 0 (got " << value << ")";
    } else {
      return;
    }
    bad.push_back({name, os.str()});
  };
  require("alpha", raw.alpha, true);
  require("beta", raw.beta, true);
  require("mu", raw.mu, true);
  require("d0", raw.d0, false);
  require("d1", raw.d1, false);
  if (!bad.empty()) throw DomainError(std::move(bad));
  return Params(raw.alpha, raw.beta, raw.mu, raw.d0, raw.d1);
}

std::string_view to_string(SimplexClass c) {
  switch (c) {
    case SimplexClass::C: return "C";
    case SimplexClass::D: return "D";
    case SimplexClass::E_star: return "E_star";
    case SimplexClass::F_star: return "F_star";
    case SimplexClass::none: return "none";
  }
  return "none";
}

double emergence_threshold(const Params& p) { return p.mu() * (1.0 + p.d0() / p.alpha()); }

double basic_offspring_number(const Params& p) {
  return p.alpha() * p.beta() / ((p.alpha() + p.d0()) * p.mu());
}

RegionLabel classify(const Params& p) {
  const double a = p.alpha(), b = p.beta(), m = p.mu(), d0 = p.d0(), d1 = p.d1();
  const double threshold = emergence_threshold(p);

  RegionLabel r;
  r.in_phi1 = d0 != 0.0 && d1 == 0.0 && b > threshold;
  r.in_phi2 = d1 != 0.0 && b > threshold;
  r.in_psi = d0 == 0.0 && d1 == 0.0 && b == m;
  r.in_omega_star = !(r.in_phi1 || r.in_phi2 || r.in_psi);

  r.in_theta = d1 == 0.0 && a <= 1.0 - d0 && m <= 1.0 && d0 < 1.0;
  r.in_theta1 = d1 == 0.0 && m + d0 + a <= 2.0 && b < threshold;
  r.in_theta2 = d1 == 0.0 && m + d0 + a <= 2.0 && b > threshold;
  r.in_theta_star = r.in_omega_star && r.in_theta;
  r.in_phi_star = r.in_theta && r.in_phi1;
  r.in_psi_star = r.in_theta && r.in_psi;

  r.in_simplex_invariant = in_invariant_region(a, b);
  r.simplex_class = simplex_class(a, b);
  return r;
}

bool in_set_A(double alpha, double beta) {
  return beta > 0.0 && beta < 0.5 && alpha > 0.0 &&
         alpha <= 1.0 + 2.0 * std::sqrt(beta * (1.0 - beta));
}

bool in_set_B(double alpha, double beta) {
  return beta >= 0.5 && beta <= 1.0 && alpha > 0.0 && alpha <= 2.0;
}

bool in_set_C(double alpha, double beta) {
  return beta > 0.0 && beta <= 1.0 && alpha > 0.0 && alpha <= 1.0 - beta;
}

bool in_set_D(double alpha, double beta) {
  return beta >= 0.5 && beta <= 1.0 && alpha >= 4.0 * (1.0 - beta) && alpha <= 2.0;
}

bool in_set_E(double alpha, double beta) {
  return beta > 0.0 && beta <= 1.0 && alpha > 1.0 - beta && alpha <= 2.0 * (1.0 - beta);
}

bool in_set_F(double alpha, double beta) {
  return beta > 0.0 && beta <= 1.0 && alpha >= 2.0 * (1.0 - beta) &&
         alpha <= 4.0 * (1.0 - beta) && alpha >= 0.0 && alpha <= 2.0;
}

SimplexClass simplex_class(double alpha, double beta) {
  if (!in_invariant_region(alpha, beta)) return SimplexClass::none;
  if (in_set_C(alpha, beta)) return SimplexClass::C;
  if (in_set_D(alpha, beta)) return SimplexClass::D;
  if (in_set_E(alpha, beta)) return SimplexClass::E_star;
  if (in_set_F(alpha, beta)) return SimplexClass::F_star;
  return SimplexClass::none;  // unreachable: C, D, E*, F* cover A u B
}

}  // namespace mosqdyn
