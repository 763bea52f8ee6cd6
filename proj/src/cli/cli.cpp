#include "mosqdyn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include "cli/internal.hpp"
#include "mosqdyn/dynamics.hpp"
#include "mosqdyn/fixed_points.hpp"
#include "mosqdyn/simplex.hpp"
#include "mosqdyn/stability.hpp"

namespace mosqdyn::cli {

namespace {

// Overrides the default tolerance of `simulate` and `stability` when set.
constexpr const char* kTolEnv = "MOSQDYN_TOL";

double default_tolerance() {
  if (const char* env = std::getenv(kTolEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v > 0.0) return v;
  }
  return 1e-9;
}

struct ParamArgs {
  RawParams raw;
  void add_to(CLI::App* sub) {
    sub->add_option("--alpha", raw.alpha, "maximum emergence rate (> 0)")->required();
    sub->add_option("--beta", raw.beta, "oviposition rate (> 0)")->required();
    sub->add_option("--mu", raw.mu, "adult death rate (> 0)")->required();
    sub->add_option("--d0", raw.d0, "larvae linear death coefficient (>= 0)")->default_val(0.0);
    sub->add_option("--d1", raw.d1, "larvae density-dependent death coefficient (>= 0)")->default_val(0.0);
  }
};

Json params_json(const RawParams& r) {
  return Json{{"alpha", jnum(r.alpha)}, {"beta", jnum(r.beta)}, {"mu", jnum(r.mu)},
              {"d0", jnum(r.d0)}, {"d1", jnum(r.d1)}};
}

std::string params_text(const RawParams& r) {
  return "alpha=" + num(r.alpha) + " beta=" + num(r.beta) + " mu=" + num(r.mu) + " d0=" + num(r.d0) +
         " d1=" + num(r.d1);
}

std::string state_text(State z) { return "(" + num(z.x) + ", " + num(z.y) + ")"; }

Json state_json(State z) { return Json{{"x", jnum(z.x)}, {"y", jnum(z.y)}}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool emit_checks(std::ostream& out, const std::vector<CheckResult>& checks, Json* json) {
  bool ok = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    ok = ok && c.passed;
    if (json)
      arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    else
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  if (json) (*json)["verify"] = Json{{"passed", ok}, {"checks", arr}};
  return ok;
}

// ----------------------------------------------------------------- classify

using FlagList = std::vector<std::pair<const char*, bool>>;

FlagList flags_of(const RegionLabel& r) {
  return {{"omega_star", r.in_omega_star}, {"phi1", r.in_phi1},
          {"phi2", r.in_phi2},             {"psi", r.in_psi},
          {"theta", r.in_theta},           {"theta1", r.in_theta1},
          {"theta2", r.in_theta2},         {"theta_star", r.in_theta_star},
          {"phi_star", r.in_phi_star},     {"psi_star", r.in_psi_star},
          {"simplex_invariant", r.in_simplex_invariant}};
}

// Flags (and the simplex class) that change under a one-at-a-time
// perturbation of each parameter by +-eps, staying inside the domain.
std::vector<std::string> sensitive_flags(const RawParams& raw, const RegionLabel& base, double eps) {
  std::set<std::string> changed;
  const auto base_flags = flags_of(base);
  double RawParams::*fields[] = {&RawParams::alpha, &RawParams::beta, &RawParams::mu, &RawParams::d0,
                                 &RawParams::d1};
  for (auto field : fields)
    for (double sign : {-1.0, 1.0}) {
      RawParams q = raw;
      q.*field += sign * eps;
      Params p = validate(raw);
      try {
        p = validate(q);
      } catch (const DomainError&) {
        continue;
      }
      const RegionLabel other = classify(p);
      const auto other_flags = flags_of(other);
      for (std::size_t i = 0; i < base_flags.size(); ++i)
        if (base_flags[i].second != other_flags[i].second) changed.insert(base_flags[i].first);
      if (other.simplex_class != base.simplex_class) changed.insert("simplex_class");
    }
  return {changed.begin(), changed.end()};
}

std::string region_summary(const RegionLabel& r) {
  if (r.in_psi) return "Psi: continuum of fixed points (x, gamma(x))";
  if (r.in_phi1) return "Phi1: two fixed points (d1 = 0 closed form)";
  if (r.in_phi2) return "Phi2: two fixed points (quadratic closed form)";
  return "Omega*: unique fixed point at the origin";
}

int cmd_classify(const RawParams& raw, bool json, double eps, std::ostream& out) {
  const Params p = validate(raw);
  const RegionLabel r = classify(p);
  const double r0 = basic_offspring_number(p);
  std::vector<std::string> sensitive;
  if (eps > 0.0) sensitive = sensitive_flags(raw, r, eps);

  if (json) {
    Json j;
    j["params"] = params_json(raw);
    j["r0"] = jnum(r0);
    j["region"] = region_summary(r);
    Json flags;
    for (const auto& [name, v] : flags_of(r)) flags[name] = v;
    j["flags"] = flags;
    j["simplex_class"] = std::string(to_string(r.simplex_class));
    if (eps > 0.0) {
      j["eps"] = jnum(eps);
      j["sensitive"] = sensitive;
    }
    emit(out, j);
    return kExitOk;
  }
  out << "parameters: " << params_text(raw) << '\n';
  out << "r0: " << num(r0) << '\n';
  out << "region: " << region_summary(r) << '\n';
  for (const auto& [name, v] : flags_of(r)) out << "  " << name << ": " << (v ? "true" : "false") << '\n';
  out << "simplex_class: " << to_string(r.simplex_class) << '\n';
  if (eps > 0.0) {
    out << "sensitive within eps=" << num(eps) << ":";
    if (sensitive.empty()) out << " none";
    for (const auto& s : sensitive) out << ' ' << s;
    out << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------- fixed-points

std::vector<double> continuum_grid(int samples) {
  std::vector<double> xs(kDefaultContinuumSamples.begin(), kDefaultContinuumSamples.end());
  if (samples <= 0) return xs;
  xs.clear();
  for (int i = 0; i < samples; ++i) xs.push_back(samples == 1 ? 0.0 : 10.0 * i / (samples - 1));
  return xs;
}

int cmd_fixed_points(const RawParams& raw, bool json, int samples, bool verify, std::ostream& out) {
  const Params p = validate(raw);
  const auto grid = continuum_grid(samples);
  const FixedPointSet set = find_fixed_points(p, grid);

  std::vector<CheckResult> checks;
  if (verify) checks = verify_fixed_points(p);

  if (json) {
    Json j;
    j["params"] = params_json(raw);
    j["kind"] = std::string(to_string(set.kind));
    Json points = Json::array();
    for (const auto& fp : set.points)
      points.push_back(Json{{"x", jnum(fp.location.x)},
                            {"y", jnum(fp.location.y)},
                            {"formula", std::string(to_string(fp.formula))},
                            {"residual", jnum(fp.residual)}});
    j["points"] = points;
    if (set.discriminant) j["discriminant"] = jnum(*set.discriminant);
    if (set.curve) j["curve"] = set.curve->describe();
    bool ok = true;
    if (verify) ok = emit_checks(out, checks, &j);
    emit(out, j);
    return ok ? kExitOk : kExitCheckFailed;
  }
  out << "kind: " << to_string(set.kind) << '\n';
  if (set.discriminant) out << "discriminant: " << num(*set.discriminant) << '\n';
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    const auto& fp = set.points[i];
    out << "point " << i + 1 << ": x=" << num(fp.location.x) << " y=" << num(fp.location.y)
        << " formula=" << to_string(fp.formula) << " residual=" << num(fp.residual) << '\n';
  }
  if (set.curve) out << "curve: " << set.curve->describe() << '\n';
  bool ok = true;
  if (verify) ok = emit_checks(out, checks, nullptr);
  return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- stability

Json eigen_json(const EigenPair& ev) {
  Json arr = Json::array();
  for (const auto& l : ev)
    arr.push_back(Json{{"re", jnum(l.real())}, {"im", jnum(l.imag())}, {"modulus", jnum(std::abs(l))}});
  return arr;
}

Json matrix_json(const Matrix2& m) {
  return Json::array({Json::array({jnum(m[0][0]), jnum(m[0][1])}), Json::array({jnum(m[1][0]), jnum(m[1][1])})});
}

std::string eigen_text(const std::complex<double>& l) {
  if (l.imag() == 0.0) return num(l.real());
  return num(l.real()) + (l.imag() < 0 ? " - " : " + ") + num(std::abs(l.imag())) + "i";
}

int cmd_stability(const RawParams& raw, bool json, const std::vector<double>& at, double tol, bool verify,
                  std::ostream& out) {
  const Params p = validate(raw);
  std::vector<State> points;
  if (at.size() == 2) {
    points.push_back({at[0], at[1]});
  } else {
    for (const auto& fp : find_fixed_points(p).points) points.push_back(fp.location);
  }

  Json j;
  j["params"] = params_json(raw);
  Json jpoints = Json::array();
  std::vector<CheckResult> checks;
  for (State z : points) {
    if (verify) {
      auto c = verify_stability(p, z);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    Json jp;
    jp["x"] = jnum(z.x);
    jp["y"] = jnum(z.y);
    try {
      const StabilityReport r = classify_fixed_point(p, z, tol);
      jp["fixed_point"] = true;
      jp["residual"] = jnum(r.residual);
      jp["jacobian"] = matrix_json(r.jacobian);
      jp["eigenvalues"] = eigen_json(r.eigenvalues);
      jp["g"] = jnum(r.g);
      jp["f"] = jnum(r.f);
      jp["type"] = std::string(to_string(r.type));
      jp["broad_type"] = std::string(to_string(r.broad));
      jp["attracting_by_inequalities"] = r.attracting_by_inequalities;
      jp["repelling_by_inequalities"] = r.repelling_by_inequalities;
      jp["inequalities_agree"] = r.inequalities_agree;
      if (!json) {
        out << "point " << state_text(z) << ": " << to_string(r.type) << " (broad: " << to_string(r.broad)
            << ")\n";
        out << "  residual: " << num(r.residual) << '\n';
        out << "  jacobian: [[" << num(r.jacobian[0][0]) << ", " << num(r.jacobian[0][1]) << "], ["
            << num(r.jacobian[1][0]) << ", " << num(r.jacobian[1][1]) << "]]\n";
        out << "  eigenvalues: " << eigen_text(r.eigenvalues[0]) << " (|.|=" << num(std::abs(r.eigenvalues[0]))
            << "), " << eigen_text(r.eigenvalues[1]) << " (|.|=" << num(std::abs(r.eigenvalues[1])) << ")\n";
        out << "  g: " << num(r.g) << "  f: " << num(r.f) << '\n';
        out << "  inequalities: attracting=" << (r.attracting_by_inequalities ? "true" : "false")
            << " repelling=" << (r.repelling_by_inequalities ? "true" : "false")
            << " agree=" << (r.inequalities_agree ? "true" : "false") << '\n';
      }
    } catch (const NotAFixedPoint&) {
      const Matrix2 m = jacobian(p, z);
      const EigenPair ev = eigenvalues(m);
      jp["fixed_point"] = false;
      jp["residual"] = jnum(residual(p, z));
      jp["jacobian"] = matrix_json(m);
      jp["eigenvalues"] = eigen_json(ev);
      if (!json) {
        out << "point " << state_text(z) << ": not a fixed point (residual " << num(residual(p, z)) << ")\n";
        out << "  jacobian: [[" << num(m[0][0]) << ", " << num(m[0][1]) << "], [" << num(m[1][0]) << ", "
            << num(m[1][1]) << "]]\n";
        out << "  eigenvalues: " << eigen_text(ev[0]) << ", " << eigen_text(ev[1]) << '\n';
      }
    }
    jpoints.push_back(jp);
  }
  j["points"] = jpoints;

  if (classify(p).in_theta) {
    const TypeTable table = closed_form_type_table(p);
    Json jt = Json::array();
    if (!json) out << "closed-form type table:\n";
    for (const auto& e : table.entries) {
      const std::string declared = e.declared ? std::string(to_string(*e.declared)) : "undeclared";
      jt.push_back(Json{{"x", jnum(e.point.x)},
                        {"y", jnum(e.point.y)},
                        {"rule", e.rule},
                        {"declared", e.declared ? Json(declared) : Json(nullptr)},
                        {"numeric", std::string(to_string(e.numeric.broad))},
                        {"agrees", e.agrees}});
      if (!json)
        out << "  " << state_text(e.point) << " " << e.rule << " | declared " << declared << ", numeric "
            << to_string(e.numeric.broad) << (e.agrees ? "" : "  [DISAGREES]") << '\n';
    }
    j["type_table"] = jt;
  }

  bool ok = true;
  if (verify) ok = emit_checks(out, checks, json ? &j : nullptr);
  if (json) emit(out, j);
  return ok ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- simulate

struct SimulateArgs {
  double x0 = 0.0, y0 = 0.0;
  std::int64_t iters = 1'000'000;
  double tol = 0.0;
  double diverge = 1e9;
  std::string csv, svg;
};

int cmd_simulate(const RawParams& raw, bool json, const SimulateArgs& a, std::ostream& out) {
  const Params p = validate(raw);
  OrbitOptions opt;
  opt.max_iter = a.iters;
  opt.tol = a.tol > 0.0 ? a.tol : default_tolerance();
  opt.divergence_threshold = a.diverge;
  const OrbitResult r = orbit(p, {a.x0, a.y0}, opt);

  if (!a.csv.empty()) {
    auto os = open_output(a.csv);
    write_orbit_csv(os, r);
    if (!os) throw IoError("failed writing '" + a.csv + "'");
  }
  if (!a.svg.empty()) {
    auto os = open_output(a.svg);
    write_orbit_svg(os, r, params_text(raw) + "  z0=" + state_text({a.x0, a.y0}));
    if (!os) throw IoError("failed writing '" + a.svg + "'");
  }

  const State last = r.samples.back().state;
  Json verdict{{"kind", std::string(verdict_name(r.verdict))}};
  std::string verdict_line(verdict_name(r.verdict));
  if (const auto* c = std::get_if<Converged>(&r.verdict)) {
    verdict["to"] = state_json(c->to);
    verdict_line += " to " + state_text(c->to);
  } else if (const auto* d = std::get_if<DivergedX>(&r.verdict)) {
    verdict["y_limit_estimate"] = jnum(d->y_limit_estimate);
    verdict["alpha_over_mu"] = jnum(p.alpha() / p.mu());
    verdict["x_at_detection"] = jnum(d->x_at_detection);
    verdict_line += " (y -> " + num(d->y_limit_estimate) + ", alpha/mu = " + num(p.alpha() / p.mu()) + ")";
  } else if (const auto* per = std::get_if<Periodic>(&r.verdict)) {
    verdict["period"] = per->period;
    verdict_line += " with period " + std::to_string(per->period);
  }

  if (json) {
    Json j;
    j["params"] = params_json(raw);
    j["initial"] = state_json({a.x0, a.y0});
    j["verdict"] = verdict;
    j["iterations_used"] = r.iterations_used;
    j["left_positive_quadrant"] = r.left_positive_quadrant;
    j["final"] = state_json(last);
    j["samples_stored"] = r.samples.size();
    emit(out, j);
    return kExitOk;
  }
  out << "verdict: " << verdict_line << '\n';
  out << "iterations: " << r.iterations_used << '\n';
  out << "final: " << state_text(last) << '\n';
  out << "left_positive_quadrant: " << (r.left_positive_quadrant ? "true" : "false") << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ simplex

struct SimplexArgs {
  double alpha = 0.0, beta = 0.0;
  std::optional<double> x0;
  int orbit = 0;
  std::string csv;
  bool verify = false;
};

int cmd_simplex(const SimplexArgs& a, bool json, std::ostream& out) {
  const SimplexParams sp = make_simplex_params(a.alpha, a.beta);
  const SimplexAnalysis an = analyze_simplex(sp);

  Json j;
  j["alpha"] = jnum(sp.alpha);
  j["beta"] = jnum(sp.beta);
  j["invariant"] = an.invariance.invariant;
  if (an.invariance.witness) {
    j["witness"] = jnum(*an.invariance.witness);
    j["witness_image"] = jnum(*an.invariance.witness_image);
  }
  j["class"] = std::string(to_string(an.simplex_class));
  if (an.monotonic_shape) j["shape"] = std::string(to_string(*an.monotonic_shape));
  j["x_star"] = jnum(an.x_star);
  j["u_prime_at_star"] = jnum(an.stability.u_prime_at_star);
  j["type"] = std::string(to_string(an.stability.type));
  if (an.x_min) j["x_min"] = jnum(*an.x_min);
  if (an.period2) {
    Json roots = Json::array();
    for (double r : an.period2->roots) roots.push_back(jnum(r));
    j["period2"] = Json{{"kind", std::string(to_string(an.period2->kind))},
                        {"roots", roots},
                        {"containment_condition", an.period2->containment_condition}};
  }
  if (an.proof_roots) j["proof_roots"] = Json::array({jnum((*an.proof_roots)[0]), jnum((*an.proof_roots)[1])});

  std::optional<ULimit> limit;
  if (a.x0) {
    limit = u_orbit_limit(sp, *a.x0);
    Json jl{{"kind", limit->kind == ULimit::Kind::two_cycle ? "two_cycle" : "converges"}};
    if (limit->kind == ULimit::Kind::two_cycle) {
      jl["cycle"] = Json::array({jnum(limit->cycle[0]), jnum(limit->cycle[1])});
    } else {
      jl["limit"] = jnum(limit->limit);
      jl["iterations"] = limit->iterations;
      if (limit->distance_ratio) jl["distance_ratio"] = jnum(*limit->distance_ratio);
    }
    j["limit"] = jl;
  }

  std::vector<double> orbit_xs;
  if (a.orbit > 0) {
    double x = a.x0.value_or(0.5);
    orbit_xs.push_back(x);
    for (int n = 0; n < a.orbit; ++n) orbit_xs.push_back(x = u_map(sp, x));
    if (!a.csv.empty()) {
      auto os = open_output(a.csv);
      os << "iter,x\n";
      for (std::size_t n = 0; n < orbit_xs.size(); ++n) os << n << ',' << num(orbit_xs[n]) << '\n';
      if (!os) throw IoError("failed writing '" + a.csv + "'");
    } else if (json) {
      Json arr = Json::array();
      for (double x : orbit_xs) arr.push_back(jnum(x));
      j["orbit"] = arr;
    }
  }

  std::vector<CheckResult> checks;
  if (a.verify) checks = verify_simplex(sp);

  if (json) {
    bool ok = true;
    if (a.verify) ok = emit_checks(out, checks, &j);
    emit(out, j);
    return ok ? kExitOk : kExitCheckFailed;
  }
  out << "alpha=" << num(sp.alpha) << " beta=" << num(sp.beta) << '\n';
  out << "invariant simplex: " << (an.invariance.invariant ? "yes" : "no");
  if (an.invariance.witness)
    out << " (witness x=" << num(*an.invariance.witness) << ", U(x)=" << num(*an.invariance.witness_image) << ")";
  out << '\n';
  out << "class: " << to_string(an.simplex_class);
  if (an.monotonic_shape) out << " (" << to_string(*an.monotonic_shape) << ")";
  out << '\n';
  out << "x*: " << num(an.x_star) << '\n';
  out << "U'(x*): " << num(an.stability.u_prime_at_star) << " -> " << to_string(an.stability.type) << '\n';
  if (an.x_min) out << "x_min: " << num(*an.x_min) << '\n';
  if (an.period2) {
    out << "period-2: " << to_string(an.period2->kind);
    for (double r : an.period2->roots) out << ' ' << num(r);
    out << " (containment condition " << (an.period2->containment_condition ? "holds" : "fails") << ")\n";
  }
  if (an.proof_roots) out << "proof roots: " << num((*an.proof_roots)[0]) << ", " << num((*an.proof_roots)[1]) << '\n';
  if (limit) {
    if (limit->kind == ULimit::Kind::two_cycle)
      out << "limit: two-cycle {" << num(limit->cycle[0]) << ", " << num(limit->cycle[1]) << "}\n";
    else
      out << "limit: " << num(limit->limit) << " after " << limit->iterations << " iterations\n";
  }
  if (a.orbit > 0 && a.csv.empty()) {
    out << "iter,x\n";
    for (std::size_t n = 0; n < orbit_xs.size(); ++n) out << n << ',' << num(orbit_xs[n]) << '\n';
  }
  bool ok = true;
  if (a.verify) ok = emit_checks(out, checks, nullptr);
  return ok ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------------- sweep

struct SweepArgs {
  std::string axis1, axis2, quantity = "region", out_path;
  unsigned threads = 0;
};

int cmd_sweep(const RawParams& fixed, const SweepArgs& a, bool json, std::ostream& out) {
  SweepSpec spec;
  spec.axis1 = parse_axis(a.axis1);
  spec.axis2 = parse_axis(a.axis2);
  spec.fixed = fixed;
  spec.quantity = parse_quantity(a.quantity);
  spec.threads = a.threads > 0 ? a.threads : std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  const auto cells = run_sweep(spec);

  if (!a.out_path.empty()) {
    auto os = open_output(a.out_path);
    write_sweep_csv(os, spec, cells);
    if (!os) throw IoError("failed writing '" + a.out_path + "'");
  }
  if (json) {
    Json j;
    j["axis1"] = spec.axis1.name;
    j["axis2"] = spec.axis2.name;
    j["quantity"] = std::string(to_string(spec.quantity));
    j["cells"] = cells.size();
    if (a.out_path.empty()) {
      Json rows = Json::array();
      for (const auto& c : cells)
        rows.push_back(Json::array({jnum(c.value1), jnum(c.value2), c.number ? jnum(*c.number) : Json(c.text)}));
      j["rows"] = rows;
    } else {
      j["output"] = a.out_path;
    }
    emit(out, j);
  } else if (a.out_path.empty()) {
    write_sweep_csv(out, spec, cells);
  } else {
    out << "wrote " << cells.size() << " cells to " << a.out_path << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(int draws, std::uint64_t seed, bool json, std::ostream& out) {
  const auto checks = run_verification(draws, seed);
  if (json) {
    Json j;
    j["draws"] = draws;
    j["seed"] = seed;
    const bool ok = emit_checks(out, checks, &j);
    emit(out, j);
    return ok ? kExitOk : kExitCheckFailed;
  }
  return emit_checks(out, checks, nullptr) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points, stability and orbits of a two-stage mosquito population map"};
  app.name("mosqdyn");
  app.require_subcommand(1, 1);

  bool json = false;
  const auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "emit a single JSON object"); };

  ParamArgs params;

  auto* classify_cmd = app.add_subcommand("classify", "region membership and r0");
  params.add_to(classify_cmd);
  add_json(classify_cmd);
  double eps = 0.0;
  classify_cmd->add_option("--eps", eps, "report flags that flip under +-eps perturbations")
      ->check(CLI::NonNegativeNumber);

  auto* fixed_cmd = app.add_subcommand("fixed-points", "closed-form fixed points");
  params.add_to(fixed_cmd);
  add_json(fixed_cmd);
  int samples = 0;
  bool verify = false;
  fixed_cmd->add_option("--samples", samples, "continuum sample count on x in [0, 10]")->check(CLI::PositiveNumber);
  fixed_cmd->add_flag("--verify", verify, "cross-check against the oracles");

  auto* stab_cmd = app.add_subcommand("stability", "Jacobian, eigenvalues and fixed-point types");
  params.add_to(stab_cmd);
  add_json(stab_cmd);
  std::vector<double> at;
  double stab_tol = 0.0;
  auto* at_opt = stab_cmd->add_option("--at", at, "evaluate at the state X Y")->expected(2);
  stab_cmd->add_flag("--all-fixed-points", "evaluate at every enumerated fixed point (default)")->excludes(at_opt);
  stab_cmd->add_option("--tol", stab_tol, "fixed-point residual tolerance (relative to max(1,|z|))");
  stab_cmd->add_flag("--verify", verify, "cross-check against the oracles");

  auto* sim_cmd = app.add_subcommand("simulate", "iterate the map and detect the limit");
  params.add_to(sim_cmd);
  add_json(sim_cmd);
  SimulateArgs sim;
  sim_cmd->add_option("--x0", sim.x0, "initial larvae density")->required();
  sim_cmd->add_option("--y0", sim.y0, "initial adult density")->required();
  sim_cmd->add_option("--iters", sim.iters, "maximum iterations")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--tol", sim.tol, "convergence tolerance (default 1e-9 or $MOSQDYN_TOL)");
  sim_cmd->add_option("--diverge", sim.diverge, "divergence threshold on x")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--csv", sim.csv, "write samples as iter,x,y");
  sim_cmd->add_option("--svg", sim.svg, "write x and y against iteration");

  auto* simplex_cmd = app.add_subcommand("simplex", "the special case beta = mu, d0 = d1 = 0");
  add_json(simplex_cmd);
  SimplexArgs sx;
  simplex_cmd->add_option("--alpha", sx.alpha, "maximum emergence rate (> 0)")->required();
  simplex_cmd->add_option("--beta", sx.beta, "oviposition = adult death rate (> 0)")->required();
  simplex_cmd->add_option("--x0", sx.x0, "initial point in [0, 1] for the limit");
  simplex_cmd->add_option("--orbit", sx.orbit, "emit N iterates of U from x0 (default 0.5)")
      ->check(CLI::NonNegativeNumber);
  simplex_cmd->add_option("--csv", sx.csv, "write the orbit as iter,x");
  simplex_cmd->add_flag("--verify", sx.verify, "cross-check against the oracles");

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a quantity over a two-parameter grid");
  add_json(sweep_cmd);
  SweepArgs sw;
  RawParams fixed{1.0, 1.0, 1.0, 0.0, 0.0};
  sweep_cmd->add_option("--axis1", sw.axis1, "name:lo:hi:step")->required();
  sweep_cmd->add_option("--axis2", sw.axis2, "name:lo:hi:step")->required();
  sweep_cmd->add_option("--quantity", sw.quantity,
                        "region | r0 | fixed_point_count | spectral_radius_at_origin | x_star");
  sweep_cmd->add_option("--alpha", fixed.alpha, "fixed alpha (default 1)");
  sweep_cmd->add_option("--beta", fixed.beta, "fixed beta (default 1)");
  sweep_cmd->add_option("--mu", fixed.mu, "fixed mu (default 1)");
  sweep_cmd->add_option("--d0", fixed.d0, "fixed d0 (default 0)");
  sweep_cmd->add_option("--d1", fixed.d1, "fixed d1 (default 0)");
  sweep_cmd->add_option("--out", sw.out_path, "CSV output path (stdout if omitted)");
  sweep_cmd->add_option("--threads", sw.threads, "worker threads (default: hardware, at most 8)");

  auto* verify_cmd = app.add_subcommand("verify", "randomised cross-checks against the oracles");
  add_json(verify_cmd);
  int draws = 1000;
  std::uint64_t seed = 20240917;
  verify_cmd->add_option("--draws", draws, "draws per check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(params.raw, json, eps, out);
    if (fixed_cmd->parsed()) return cmd_fixed_points(params.raw, json, samples, verify, out);
    if (stab_cmd->parsed())
      return cmd_stability(params.raw, json, at, stab_tol > 0.0 ? stab_tol : default_tolerance(), verify, out);
    if (sim_cmd->parsed()) return cmd_simulate(params.raw, json, sim, out);
    if (simplex_cmd->parsed()) return cmd_simplex(sx, json, out);
    if (sweep_cmd->parsed()) return cmd_sweep(fixed, sw, json, out);
    if (verify_cmd->parsed()) return cmd_verify(draws, seed, json, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {  // DomainError, bad axes
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {  // outside the set an operation needs
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace mosqdyn::cli
