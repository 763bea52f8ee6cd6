#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mosqdyn/dynamics.hpp"
#include "mosqdyn/params.hpp"
#include "mosqdyn/simplex.hpp"

namespace mosqdyn::cli {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 12 significant digits, "%g" style; negative zero prints as 0.
std::string num(double v);
/// The same value rounded to 12 significant digits, as a JSON number
/// (null when not finite).
Json jnum(double v);

void write_orbit_csv(std::ostream& os, const OrbitResult& orbit);
/// Two stacked panels, x against iteration and y against iteration.
void write_orbit_svg(std::ostream& os, const OrbitResult& orbit, const std::string& title);

/// Opens `path` for writing or throws IoError.
std::ofstream open_output(const std::string& path);

struct Axis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  std::vector<double> values() const;
};

/// "name:lo:hi:step". Throws std::invalid_argument on malformed input.
Axis parse_axis(const std::string& text);

enum class SweepQuantity { region, r0, fixed_point_count, spectral_radius_at_origin, x_star };
SweepQuantity parse_quantity(const std::string& text);
std::string_view to_string(SweepQuantity q);

struct SweepSpec {
  Axis axis1;
  Axis axis2;
  RawParams fixed{1.0, 1.0, 1.0, 0.0, 0.0};
  SweepQuantity quantity = SweepQuantity::region;
  unsigned threads = 1;
};

struct SweepCell {
  double value1 = 0.0;
  double value2 = 0.0;
  std::string text;          ///< CSV rendering
  std::optional<double> number;  ///< absent for labels and infinite counts
};

/// Row-major over axis1 then axis2, independent of the thread count.
/// Throws std::invalid_argument for a malformed SweepSpec and DomainError when a cell
/// leaves the parameter domain.
std::vector<SweepCell> run_sweep(const SweepSpec& spec);
void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepCell>& cells);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Randomised cross-checks of the closed forms against the oracles.
std::vector<CheckResult> run_verification(int draws, std::uint64_t seed);

std::vector<CheckResult> verify_fixed_points(const Params& p);
std::vector<CheckResult> verify_stability(const Params& p, State z);

std::vector<CheckResult> verify_simplex(const SimplexParams& sp);

}  // namespace mosqdyn::cli
