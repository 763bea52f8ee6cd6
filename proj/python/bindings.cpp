#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mosqdyn/dynamics.hpp"
#include "mosqdyn/fixed_points.hpp"
#include "mosqdyn/oracles.hpp"
#include "mosqdyn/params.hpp"
#include "mosqdyn/simplex.hpp"
#include "mosqdyn/stability.hpp"

namespace py = pybind11;
using namespace mosqdyn;

namespace {

py::tuple as_tuple(State z) { return py::make_tuple(z.x, z.y); }

State as_state(const std::pair<double, double>& z) { return {z.first, z.second}; }

py::dict region_dict(const RegionLabel& r) {
  py::dict d;
  d["omega_star"] = r.in_omega_star;
  d["phi1"] = r.in_phi1;
  d["phi2"] = r.in_phi2;
  d["psi"] = r.in_psi;
  d["theta"] = r.in_theta;
  d["theta1"] = r.in_theta1;
  d["theta2"] = r.in_theta2;
  d["theta_star"] = r.in_theta_star;
  d["phi_star"] = r.in_phi_star;
  d["psi_star"] = r.in_psi_star;
  d["simplex_invariant"] = r.in_simplex_invariant;
  d["simplex_class"] = std::string(to_string(r.simplex_class));
  return d;
}

py::dict orbit_dict(const OrbitResult& r) {
  py::dict d;
  d["verdict"] = std::string(verdict_name(r.verdict));
  if (auto* c = std::get_if<Converged>(&r.verdict)) d["to"] = as_tuple(c->to);
  if (auto* x = std::get_if<DivergedX>(&r.verdict)) d["y_limit_estimate"] = x->y_limit_estimate;
  if (auto* per = std::get_if<Periodic>(&r.verdict)) d["period"] = per->period;
  d["iterations_used"] = r.iterations_used;
  d["left_positive_quadrant"] = r.left_positive_quadrant;
  py::list samples;
  for (const auto& s : r.samples) samples.append(py::make_tuple(s.iter, s.state.x, s.state.y));
  d["samples"] = samples;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fixed points, stability and orbits of a two-stage mosquito population map.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotAFixedPoint>(m, "NotAFixedPoint", PyExc_ValueError);
  py::register_exception<OutsideTheta>(m, "OutsideTheta", PyExc_ValueError);
  py::register_exception<NotQuadrantPreserving>(m, "NotQuadrantPreserving", PyExc_ValueError);
  py::register_exception<OutsideInvariantRegion>(m, "OutsideInvariantRegion", PyExc_ValueError);
  py::register_exception<DegenerateAllZero>(m, "DegenerateAllZero", PyExc_ValueError);

  py::class_<Params>(m, "Params")
      .def(py::init([](double a, double b, double mu, double d0, double d1) { return validate(a, b, mu, d0, d1); }),
           py::arg("alpha"), py::arg("beta"), py::arg("mu"), py::arg("d0") = 0.0, py::arg("d1") = 0.0)
      .def_property_readonly("alpha", &Params::alpha)
      .def_property_readonly("beta", &Params::beta)
      .def_property_readonly("mu", &Params::mu)
      .def_property_readonly("d0", &Params::d0)
      .def_property_readonly("d1", &Params::d1)
      .def("__repr__", [](const Params& p) {
        return py::str("Params(alpha={}, beta={}, mu={}, d0={}, d1={})")
            .format(p.alpha(), p.beta(), p.mu(), p.d0(), p.d1());
      });

  m.def("classify", [](const Params& p) { return region_dict(classify(p)); });
  m.def("basic_offspring_number", &basic_offspring_number);
  m.def("emergence_threshold", &emergence_threshold);
  m.def("simplex_class", [](double a, double b) { return std::string(to_string(simplex_class(a, b))); });

  m.def("step", [](const Params& p, std::pair<double, double> z) { return as_tuple(step(p, as_state(z))); });
  m.def("residual", [](const Params& p, std::pair<double, double> z) { return residual(p, as_state(z)); });
  m.def(
      "orbit",
      [](const Params& p, std::pair<double, double> z0, std::int64_t max_iter, double tol, double diverge) {
        OrbitOptions opt;
        opt.max_iter = max_iter;
        opt.tol = tol;
        opt.divergence_threshold = diverge;
        OrbitResult r;
        {
          py::gil_scoped_release release;
          r = orbit(p, as_state(z0), opt);
        }
        return orbit_dict(r);
      },
      py::arg("p"), py::arg("z0"), py::arg("max_iter") = 1'000'000, py::arg("tol") = 1e-9,
      py::arg("divergence_threshold") = 1e9);

  m.def("gamma", [](const Params& p, double x) { return mosqdyn::gamma(p, x); });
  m.def("find_fixed_points", [](const Params& p) {
    const FixedPointSet set = find_fixed_points(p);
    py::dict d;
    d["kind"] = std::string(to_string(set.kind));
    py::list pts;
    for (const auto& fp : set.points) pts.append(as_tuple(fp.location));
    d["points"] = pts;
    d["discriminant"] = set.discriminant;
    return d;
  });

  m.def("jacobian", [](const Params& p, std::pair<double, double> z) { return jacobian(p, as_state(z)); });
  m.def("eigenvalues", [](const Matrix2& j) { return eigenvalues(j); });
  m.def(
      "classify_fixed_point",
      [](const Params& p, std::pair<double, double> z, double tol) {
        const StabilityReport r = classify_fixed_point(p, as_state(z), tol);
        py::dict d;
        d["type"] = std::string(to_string(r.type));
        d["broad_type"] = std::string(to_string(r.broad));
        d["eigenvalues"] = r.eigenvalues;
        d["g"] = r.g;
        d["f"] = r.f;
        return d;
      },
      py::arg("p"), py::arg("z"), py::arg("tol") = 1e-9);

  m.def("u_map", [](double a, double b, double x) { return u_map(make_simplex_params(a, b), x); });
  m.def("fixed_point_u", [](double a, double b) { return fixed_point_u(make_simplex_params(a, b)); });
  m.def("simplex_invariant", [](double a, double b) { return simplex_invariant(make_simplex_params(a, b)).invariant; });
  m.def("u_stability", [](double a, double b) {
    const UStability s = u_stability(make_simplex_params(a, b));
    return py::make_tuple(s.u_prime_at_star, std::string(to_string(s.type)));
  });
  m.def("period2_set", [](double a, double b) {
    const Period2Set s = period2_set(make_simplex_params(a, b));
    return py::make_tuple(std::string(to_string(s.kind)), s.roots);
  });
  m.def(
      "u_orbit_limit",
      [](double a, double b, double x0) {
        const ULimit l = u_orbit_limit(make_simplex_params(a, b), x0);
        if (l.kind == ULimit::Kind::two_cycle) return py::tuple(py::make_tuple("two_cycle", l.cycle[0], l.cycle[1]));
        return py::tuple(py::make_tuple("converges", l.limit, l.iterations));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("x0"));

  m.def("quad_roots", [](double a, double b, double c) {
    const auto r = oracles::quad_roots(a, b, c);
    std::vector<std::complex<double>> out;
    if (r.count >= 1) out.push_back(r.first);
    if (r.count == 2) out.push_back(r.second);
    return out;
  });
}
