#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mosqdyn/params.hpp"
#include "mosqdyn/state.hpp"

namespace mosqdyn {

/// One application of the evolution operator:
///   x' = beta y - alpha x / (1 + x) - (d0 + d1 x) x + x
///   y' = alpha x / (1 + x) - mu y + y
/// The result may leave the positive quadrant; callers that care check
/// in_positive_quadrant() on the output.
State step(const Params& p, State z);

/// max-norm of step(p, z) - z.
double residual(const Params& p, State z);

struct OrbitOptions {
  std::int64_t max_iter = 1'000'000;
  double tol = 1e-9;
  double divergence_threshold = 1e9;
  /// Number of past states compared against when looking for a cycle.
  std::size_t history = 1000;
};

struct OrbitSample {
  std::int64_t iter = 0;
  State state;
};

struct Converged {
  State to;
};

/// x passed the divergence threshold while y settled; y_limit_estimate is
/// the last y, to be compared against alpha / mu.
struct DivergedX {
  double y_limit_estimate = 0.0;
  double x_at_detection = 0.0;
};

struct Periodic {
  int period = 0;
};

struct Undecided {};

using Verdict = std::variant<Converged, DivergedX, Periodic, Undecided>;

struct OrbitResult {
  /// Every iterate up to index 1000, then strided with a stride that doubles
  /// each octave of the iteration count. The last iterate is always present.
  std::vector<OrbitSample> samples;
  Verdict verdict = Undecided{};
  std::int64_t iterations_used = 0;
  /// Some iterate had a negative coordinate. Verdicts for such orbits are
  /// not biologically meaningful.
  bool left_positive_quadrant = false;
  /// Ratio of the last two successive-step lengths; approaches the leading
  /// eigenvalue modulus on a converging orbit.
  std::optional<double> contraction_estimate;
};

/// Iterates the operator from z0 until one of:
///  - converged: step length < tol and the iterate lies within 10 tol of an
///    enumerated fixed point (or of the fixed-point curve in the continuum case);
///  - diverged_x: x > divergence_threshold with y changing by at most
///    sqrt(tol) max(1, |y|) per step;
///  - periodic: the iterate is within tol of the state k steps back for some
///    2 <= k <= history while not itself being (nearly) fixed;
///  - undecided: none of the above within max_iter, or the orbit overflowed.
/// Throws std::invalid_argument if max_iter < 1 or tol <= 0.
OrbitResult orbit(const Params& p, State z0, const OrbitOptions& options = {});

std::string_view verdict_name(const Verdict& v);

/// Limit predicted by local convergence near the fixed points when the
/// operator maps the positive quadrant to itself (d1 = 0, alpha <= 1 - d0,
/// 0 < mu <= 1, 0 <= d0 < 1): the origin if beta <= mu (1 + d0 / alpha),
/// otherwise (x*, gamma(x*)) with x* = alpha (beta - mu) / (mu d0) - 1.
/// The prediction is local: it says nothing about initial states far away.
/// Returns nullopt when beta > mu and d0 = 0, where x* is unbounded.
/// Throws NotQuadrantPreserving otherwise out of that parameter set.
std::optional<State> local_limit(const Params& p);

}  // namespace mosqdyn
