#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace mosqdyn {

/// Larvae density x and adult density y.
struct State {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

inline double norm_inf(State z) { return std::max(std::abs(z.x), std::abs(z.y)); }

inline double distance_inf(State a, State b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

inline bool is_finite(State z) { return std::isfinite(z.x) && std::isfinite(z.y); }

inline bool in_positive_quadrant(State z) { return z.x >= 0.0 && z.y >= 0.0; }

/// Row-major 2x2 matrix.
using Matrix2 = std::array<std::array<double, 2>, 2>;

}  // namespace mosqdyn
