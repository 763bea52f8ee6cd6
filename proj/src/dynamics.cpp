#include "mosqdyn/dynamics.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mosqdyn/fixed_points.hpp"

namespace mosqdyn {

State step(const Params& p, State z) {
  const double emergence = p.alpha() * z.x / (1.0 + z.x);
  return {p.beta() * z.y - emergence - (p.d0() + p.d1() * z.x) * z.x + z.x,
          emergence - p.mu() * z.y + z.y};
}

double residual(const Params& p, State z) { return distance_inf(step(p, z), z); }

std::string_view verdict_name(const Verdict& v) {
  struct {
    std::string_view operator()(const Converged&) const { return "converged"; }
    std::string_view operator()(const DivergedX&) const { return "diverged_x"; }
    std::string_view operator()(const Periodic&) const { return "periodic"; }
    std::string_view operator()(const Undecided&) const { return "undecided"; }
  } name;
  return std::visit(name, v);
}

namespace {

class SampleRecorder {
 public:
  void offer(std::int64_t n, State z) {
    if (n <= kDense) {
      samples_.push_back({n, z});
      return;
    }
    const auto octave = static_cast<std::uint64_t>(n / kDense);
    const std::int64_t stride = std::int64_t{1} << std::bit_width(octave);
    if (n % stride == 0) samples_.push_back({n, z});
  }

  std::vector<OrbitSample> finish(std::int64_t n, State z) && {
    if (samples_.empty() || samples_.back().iter != n) samples_.push_back({n, z});
    return std::move(samples_);
  }

 private:
  static constexpr std::int64_t kDense = 1000;
  std::vector<OrbitSample> samples_;
};

// Bounded ring of the most recent states.
class History {
 public:
  explicit History(std::size_t capacity) : ring_(capacity) {}

  void push(State z) {
    if (ring_.empty()) return;
    ring_[head_] = z;
    head_ = (head_ + 1) % ring_.size();
    if (size_ < ring_.size()) ++size_;
  }

  std::size_t size() const { return size_; }

  // k = 1 is the most recently pushed state, i.e. one step before the
  // state about to be pushed.
  State back(std::size_t k) const {
    return ring_[(head_ + ring_.size() - k) % ring_.size()];
  }

 private:
  std::vector<State> ring_;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
};

bool near_fixed_point(const FixedPointSet& fixed, State z, double radius) {
  if (fixed.curve) return z.x >= -radius && std::abs(z.y - fixed.curve->at(z.x).y) < radius;
  for (const auto& fp : fixed.points)
    if (distance_inf(fp.location, z) < radius) return true;
  return false;
}

}  // namespace

OrbitResult orbit(const Params& p, State z0, const OrbitOptions& options) {
  if (options.max_iter < 1) throw std::invalid_argument("orbit: max_iter must be >= 1");
  if (!(options.tol > 0.0)) throw std::invalid_argument("orbit: tol must be > 0");

  const FixedPointSet fixed = find_fixed_points(p);
  const double y_settle = std::sqrt(options.tol);

  OrbitResult result;
  SampleRecorder recorder;
  History history(options.history);
  recorder.offer(0, z0);
  history.push(z0);
  result.left_positive_quadrant = !in_positive_quadrant(z0);

  State z = z0;
  double previous_move = 0.0;
  std::int64_t n = 0;
  while (n < options.max_iter) {
    const State next = step(p, z);
    ++n;
    recorder.offer(n, next);
    if (!is_finite(next)) {
      result.verdict = Undecided{};
      z = next;
      break;
    }
    if (!in_positive_quadrant(next)) result.left_positive_quadrant = true;

    const double move = distance_inf(next, z);
    if (previous_move > 0.0) result.contraction_estimate = move / previous_move;
    previous_move = move;

    if (move < options.tol && near_fixed_point(fixed, next, 10.0 * options.tol)) {
      result.verdict = Converged{next};
      z = next;
      break;
    }
    if (next.x > options.divergence_threshold &&
        std::abs(next.y - z.y) <= y_settle * std::max(1.0, std::abs(next.y))) {
      result.verdict = DivergedX{next.y, next.x};
      z = next;
      break;
    }

    // Cycle search: every step while the orbit is young, then periodically.
    const auto young = static_cast<std::int64_t>(2 * options.history);
    if (move >= options.tol && (n <= young || n % 256 == 0)) {
      bool found = false;
      for (std::size_t k = 2; k <= history.size(); ++k) {
        if (distance_inf(history.back(k), next) < options.tol) {
          result.verdict = Periodic{static_cast<int>(k)};
          found = true;
          break;
        }
      }
      if (found) {
        z = next;
        break;
      }
    }
    history.push(next);
    z = next;
  }

  result.iterations_used = n;
  result.samples = std::move(recorder).finish(n, z);
  return result;
}

std::optional<State> local_limit(const Params& p) {
  const double a = p.alpha(), b = p.beta(), m = p.mu(), d0 = p.d0(), d1 = p.d1();
  std::ostringstream why;
  if (d1 != 0.0) why << " d1 must be 0;";
  if (!(a <= 1.0 - d0)) why << " alpha must be <= 1 - d0;";
  if (!(m <= 1.0)) why << " mu must be <= 1;";
  if (!(d0 < 1.0)) why << " d0 must be < 1;";
  if (!why.str().empty())
    throw NotQuadrantPreserving("operator does not map the quadrant to itself:" + why.str());

  if (b <= emergence_threshold(p)) return State{0.0, 0.0};
  if (d0 == 0.0) return std::nullopt;
  const double x_star = a * (b - m) / (m * d0) - 1.0;
  return State{x_star, gamma(p, x_star)};
}

}  // namespace mosqdyn
