#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "cli/internal.hpp"
#include "mosqdyn/fixed_points.hpp"
#include "mosqdyn/simplex.hpp"
#include "mosqdyn/stability.hpp"

namespace mosqdyn::cli {

namespace {

const std::set<std::string> kParamNames{"alpha", "beta", "mu", "d0", "d1"};

double& field(RawParams& raw, const std::string& name) {
  if (name == "alpha") return raw.alpha;
  if (name == "beta") return raw.beta;
  if (name == "mu") return raw.mu;
  if (name == "d0") return raw.d0;
  return raw.d1;
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw std::invalid_argument("axis " + what + ": not a number: '" + text + "'");
  return v;
}

SweepCell evaluate(const SweepSpec& spec, double v1, double v2) {
  RawParams raw = spec.fixed;
  field(raw, spec.axis1.name) = v1;
  field(raw, spec.axis2.name) = v2;
  const Params p = validate(raw);

  SweepCell cell{v1, v2, {}, std::nullopt};
  switch (spec.quantity) {
    case SweepQuantity::region: {
      const RegionLabel r = classify(p);
      cell.text = r.in_psi ? "psi" : r.in_phi1 ? "phi1" : r.in_phi2 ? "phi2" : "omega_star";
      break;
    }
    case SweepQuantity::r0:
      cell.number = basic_offspring_number(p);
      break;
    case SweepQuantity::fixed_point_count: {
      const FixedPointSet set = find_fixed_points(p);
      if (set.kind == FixedPointKind::continuum)
        cell.text = "inf";
      else
        cell.number = static_cast<double>(set.points.size());
      break;
    }
    case SweepQuantity::spectral_radius_at_origin:
      cell.number = std::abs(eigenvalues(jacobian(p, {0.0, 0.0}))[0]);
      break;
    case SweepQuantity::x_star:
      cell.number = fixed_point_u(SimplexParams{p.alpha(), p.beta()});
      break;
  }
  if (cell.number) cell.text = num(*cell.number);
  return cell;
}

}  // namespace

std::vector<double> Axis::values() const {
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = lo + static_cast<double>(i) * step;
  return v;
}

Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw std::invalid_argument("axis must be name:lo:hi:step, got '" + text + "'");
  Axis axis;
  axis.name = parts[0];
  if (!kParamNames.contains(axis.name))
    throw std::invalid_argument("axis name must be one of alpha, beta, mu, d0, d1; got '" + axis.name + "'");
  axis.lo = parse_number(parts[1], "lower bound");
  axis.hi = parse_number(parts[2], "upper bound");
  axis.step = parse_number(parts[3], "step");
  if (!(axis.step > 0.0)) throw std::invalid_argument("axis step must be > 0");
  if (!(axis.hi >= axis.lo)) throw std::invalid_argument("axis range is empty (hi < lo)");
  return axis;
}

SweepQuantity parse_quantity(const std::string& text) {
  if (text == "region") return SweepQuantity::region;
  if (text == "r0") return SweepQuantity::r0;
  if (text == "fixed_point_count") return SweepQuantity::fixed_point_count;
  if (text == "spectral_radius_at_origin") return SweepQuantity::spectral_radius_at_origin;
  if (text == "x_star") return SweepQuantity::x_star;
  throw std::invalid_argument("unknown sweep quantity '" + text + "'");
}

std::string_view to_string(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::region: return "region";
    case SweepQuantity::r0: return "r0";
    case SweepQuantity::fixed_point_count: return "fixed_point_count";
    case SweepQuantity::spectral_radius_at_origin: return "spectral_radius_at_origin";
    case SweepQuantity::x_star: return "x_star";
  }
  return "";
}

std::vector<SweepCell> run_sweep(const SweepSpec& spec) {
  if (spec.axis1.name == spec.axis2.name) throw std::invalid_argument("sweep axes must be distinct");
  const auto values1 = spec.axis1.values();
  const auto values2 = spec.axis2.values();
  const std::size_t total = values1.size() * values2.size();

  // Validate every cell up front so the error names the first bad cell in
  // row-major order regardless of scheduling.
  for (double v1 : values1)
    for (double v2 : values2) {
      RawParams raw = spec.fixed;
      field(raw, spec.axis1.name) = v1;
      field(raw, spec.axis2.name) = v2;
      validate(raw);
    }

  std::vector<SweepCell> cells(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++)
      cells[i] = evaluate(spec, values1[i / values2.size()], values2[i % values2.size()]);
  };
  const unsigned threads = std::clamp<unsigned>(spec.threads, 1, 64);
  if (threads == 1 || total < 64) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, total); ++t) pool.emplace_back(worker);
  }
  return cells;
}

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepCell>& cells) {
  os << spec.axis1.name << ',' << spec.axis2.name << ',' << to_string(spec.quantity) << '\n';
  for (const auto& c : cells) os << num(c.value1) << ',' << num(c.value2) << ',' << c.text << '\n';
}

}  // namespace mosqdyn::cli
