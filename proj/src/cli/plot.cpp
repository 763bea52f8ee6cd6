#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "cli/internal.hpp"

namespace mosqdyn::cli {

std::string num(double v) {
  if (v == 0.0) v = 0.0;
  return fmt::format("{:.12g}", v);
}

Json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(num(v));
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  return os;
}

void write_orbit_csv(std::ostream& os, const OrbitResult& orbit) {
  os << "iter,x,y\n";
  for (const auto& s : orbit.samples) os << s.iter << ',' << num(s.state.x) << ',' << num(s.state.y) << '\n';
}

namespace {

struct Panel {
  double left, top, width, height;
};

struct Range {
  double lo, hi;
};

Range padded_range(double lo, double hi) {
  if (!(hi > lo)) return {lo - 1.0, hi + 1.0};
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

void draw_panel(std::ostream& os, const Panel& panel, const OrbitResult& orbit, bool use_x,
                const char* label) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : orbit.samples) {
    const double v = use_x ? s.state.x : s.state.y;
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo)) lo = hi = 0.0;
  const Range vr = padded_range(lo, hi);
  const double last_iter = orbit.samples.empty() ? 1.0 : std::max<double>(1.0, orbit.samples.back().iter);

  auto px = [&](double iter) { return panel.left + panel.width * iter / last_iter; };
  auto py = [&](double v) { return panel.top + panel.height * (vr.hi - v) / (vr.hi - vr.lo); };

  os << fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      panel.left, panel.top, panel.width, panel.height);
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double iter = last_iter * i / kTicks;
    const double x = px(iter), y = panel.top + panel.height;
    os << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                      x, y, x, y + 5);
    os << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
                      x, y + 18, num(std::round(iter)));
    const double v = vr.lo + (vr.hi - vr.lo) * i / kTicks;
    const double ty = py(v);
    os << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                      panel.left - 5, ty, panel.left, ty);
    os << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
                      panel.left - 8, ty + 4, fmt::format("{:.4g}", v));
  }
  os << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"13\">{}</text>\n", panel.left + 8,
                    panel.top + 16, label);

  os << "<polyline fill=\"none\" stroke=\"" << (use_x ? "#1f4e9c" : "#b3261e")
     << "\" stroke-width=\"1.5\" points=\"";
  bool first = true;
  for (const auto& s : orbit.samples) {
    const double v = use_x ? s.state.x : s.state.y;
    if (!std::isfinite(v)) continue;
    os << (first ? "" : " ") << fmt::format("{:.2f},{:.2f}", px(static_cast<double>(s.iter)), py(v));
    first = false;
  }
  os << "\"/>\n";
}

}  // namespace

void write_orbit_svg(std::ostream& os, const OrbitResult& orbit, const std::string& title) {
  constexpr double kWidth = 720, kHeight = 560;
  os << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
      kWidth, kHeight, kWidth, kHeight);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << fmt::format("<text x=\"{:.2f}\" y=\"22\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
                    kWidth / 2, title);
  draw_panel(os, {80, 40, 600, 200}, orbit, true, "x (larvae)");
  draw_panel(os, {80, 300, 600, 200}, orbit, false, "y (adults)");
  os << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\" text-anchor=\"middle\">iteration</text>\n",
                    380.0, 540.0);
  os << "</svg>\n";
}

}  // namespace mosqdyn::cli
