#pragma once

#include <string_view>

#include "mosqdyn/errors.hpp"

namespace mosqdyn {

/// Unvalidated input: the five model rates as read from a caller.
struct RawParams {
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double d0 = 0.0;
  double d1 = 0.0;
};

/// A parameter vector known to satisfy alpha, beta, mu > 0 and d0, d1 >= 0.
/// The only way to obtain one is through validate().
class Params {
 public:
  double alpha() const noexcept { return alpha_; }  ///< maximum emergence rate
  double beta() const noexcept { return beta_; }    ///< oviposition rate
  double mu() const noexcept { return mu_; }        ///< adult death rate
  double d0() const noexcept { return d0_; }        ///< larvae linear death
  double d1() const noexcept { return d1_; }        ///< larvae density-dependent death

  RawParams raw() const noexcept { return {alpha_, beta_, mu_, d0_, d1_}; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  friend Params validate(const RawParams& raw);
  Params(double alpha, double beta, double mu, double d0, double d1) noexcept
      : alpha_(alpha), beta_(beta), mu_(mu), d0_(d0), d1_(d1) {}

  double alpha_;
  double beta_;
  double mu_;
  double d0_;
  double d1_;
};

/// Throws DomainError naming every violated constraint (non-finite values
/// are rejected as well).
Params validate(const RawParams& raw);

inline Params validate(double alpha, double beta, double mu, double d0, double d1) {
  return validate(RawParams{alpha, beta, mu, d0, d1});
}

/// Partition of the two-parameter plane (alpha, beta) used by the
/// restriction map on the invariant simplex. `none` means outside A u B.
enum class SimplexClass { C, D, E_star, F_star, none };

std::string_view to_string(SimplexClass c);

struct RegionLabel {
  bool in_omega_star = false;
  bool in_phi1 = false;
  bool in_phi2 = false;
  bool in_psi = false;
  bool in_theta = false;
  bool in_theta1 = false;
  bool in_theta2 = false;
  bool in_theta_star = false;
  bool in_phi_star = false;
  bool in_psi_star = false;
  bool in_simplex_invariant = false;  ///< (alpha, beta) in A u B
  SimplexClass simplex_class = SimplexClass::none;

  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

/// Exact comparisons throughout; no tolerance is applied to any boundary.
RegionLabel classify(const Params& p);

/// mu * (1 + d0 / alpha): the oviposition rate at which the positive
/// equilibrium is born.
double emergence_threshold(const Params& p);

/// r0 = alpha beta / ((alpha + d0) mu).
double basic_offspring_number(const Params& p);

// Sets of the (alpha, beta) plane. These take raw reals because the simplex
// analysis is posed directly on the pair, with mu = beta and d0 = d1 = 0.
bool in_set_A(double alpha, double beta);
bool in_set_B(double alpha, double beta);
inline bool in_invariant_region(double alpha, double beta) {
  return in_set_A(alpha, beta) || in_set_B(alpha, beta);
}
bool in_set_C(double alpha, double beta);
bool in_set_D(double alpha, double beta);
bool in_set_E(double alpha, double beta);
bool in_set_F(double alpha, double beta);

/// Class of (alpha, beta) within A u B. The sets C, D, E, F share boundary
/// lines (alpha = 2(1 - beta) for E/F, alpha = 4(1 - beta) for F/D); ties are
/// resolved in the order C, D, E*, F* so the result is a true partition.
SimplexClass simplex_class(double alpha, double beta);

}  // namespace mosqdyn
