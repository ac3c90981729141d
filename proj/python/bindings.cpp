#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "strata/cli.hpp"
#include "strata/error.hpp"
#include "strata/homology.hpp"
#include "strata/surface.hpp"
#include "strata/torus.hpp"
#include "strata/twist_orbit.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<int> cycle_list(const Cycle& c) { return c.pairings(); }

py::dict stratum_dict(const HalfTranslationSurface& s, double tol) {
  const Stratum st = stratum(s, tol);
  py::dict d;
  d["genus"] = st.genus;
  d["orders"] = st.orders;
  d["name"] = to_string(st);
  return d;
}

py::dict count_dict(const ComponentCount& c) {
  py::dict d;
  d["kind"] = c.kind == CountKind::kExactly   ? "exactly"
              : c.kind == CountKind::kAtLeast ? "at_least"
                                              : "unknown";
  if (c.kind != CountKind::kUnknown) d["n"] = c.n;
  d["theorem"] = c.theorem;
  return d;
}

torus::HalfPeriod shift_of(const std::string& name) {
  if (name == "none") return torus::HalfPeriod::kNone;
  if (name == "h1") return torus::HalfPeriod::kH1;
  if (name == "h2") return torus::HalfPeriod::kH2;
  if (name == "h3") return torus::HalfPeriod::kH3;
  throw Error(ErrorCode::kInvalidArgument, "shift must be none, h1, h2 or h3");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Half-translation surfaces, Z/2 monodromy and Dehn-twist orbits.";

  static py::exception<Error> strata_error(m, "StrataError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(strata_error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(strata_error.ptr(), exc.ptr());
    }
  });

  py::class_<HalfTranslationSurface>(m, "Surface")
      .def_static("from_json", [](const std::string& text) { return parse_surface(text); })
      .def_static("load", &load_surface, py::arg("path"))
      .def("to_json", &serialize)
      .def_property_readonly("num_polygons", &HalfTranslationSurface::num_polygons)
      .def_property_readonly("num_pairings", &HalfTranslationSurface::num_pairings)
      .def("validate",
           [](const HalfTranslationSurface& s, double tol) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& v : validate(s, tol)) {
               out.emplace_back(std::string(to_string(v.kind)), v.message);
             }
             return out;
           },
           py::arg("tol") = kGeomTolerance)
      .def("genus", [](const HalfTranslationSurface& s) { return genus(s); })
      .def("euler_characteristic",
           [](const HalfTranslationSurface& s) { return euler_characteristic(s); })
      .def("vertex_orders", [](const HalfTranslationSurface& s) { return vertex_orders(s); })
      .def("stratum", &stratum_dict, py::arg("tol") = kGeomTolerance)
      .def("is_translation", [](const HalfTranslationSurface& s) { return is_translation(s); })
      .def("is_square", [](const HalfTranslationSurface& s) { return is_square(s); })
      .def("cycle_basis",
           [](const HalfTranslationSurface& s) {
             std::vector<std::vector<int>> out;
             for (const auto& c : cycle_basis(s)) out.push_back(cycle_list(c));
             return out;
           })
      .def("ga", [](const HalfTranslationSurface& s,
                    const std::vector<int>& c) { return ga(s, Cycle(s, c)); })
      .def("intersection",
           [](const HalfTranslationSurface& s, const std::vector<int>& a,
              const std::vector<int>& b) { return intersection_mod2(s, Cycle(s, a), Cycle(s, b)); })
      .def("symplectic_basis",
           [](const HalfTranslationSurface& s) {
             const auto b = symplectic_basis(s);
             std::vector<std::vector<int>> alpha, beta;
             for (const auto& c : b.alpha) alpha.push_back(cycle_list(c));
             for (const auto& c : b.beta) beta.push_back(cycle_list(c));
             return std::make_pair(alpha, beta);
           })
      .def("parity_vector",
           [](const HalfTranslationSurface& s) {
             return parity_vector(s, symplectic_basis(s)).to_string();
           })
      .def("double_cover", [](const HalfTranslationSurface& s) {
        return from_json(to_json(double_cover(s)));
      });

  m.def("orbit", [](const std::string& seed) {
    const auto v = ParityVector::parse(seed);
    std::vector<std::string> out;
    for (const auto& w : orbit(v, paper_generators(v.genus()))) out.push_back(w.to_string());
    return out;
  }, py::arg("seed"), "Dehn-twist orbit of a bitstring a1..ag b1..bg, sorted.");
  m.def("twist_action", [](const std::string& v, const std::string& c) {
    return twist_action(ParityVector::parse(v), TwistGenerator(ParityVector::parse(c))).to_string();
  }, py::arg("vector"), py::arg("curve"));
  m.def("sympl", [](const std::string& x, const std::string& y) {
    return sympl(ParityVector::parse(x), ParityVector::parse(y));
  });
  m.def("qd_components", [](int g, std::vector<int> orders) {
    return count_dict(qd_components(g, std::move(orders)));
  }, py::arg("genus"), py::arg("orders"));
  m.def("q_components_over_teich", [](int g, std::vector<int> orders) {
    return count_dict(q_components_over_teich(g, std::move(orders)));
  }, py::arg("genus"), py::arg("orders"));

  m.def("weierstrass_p", [](std::complex<double> z, std::complex<double> tau, double tol) {
    return torus::weierstrass_p(z, torus::Tau(tau), tol);
  }, py::arg("z"), py::arg("tau"), py::arg("tol") = torus::kDefaultTolerance);
  m.def("halfperiod_values", [](std::complex<double> tau) {
    const auto e = torus::halfperiod_values(torus::Tau(tau));
    return std::make_tuple(e.e1, e.e2, e.e3);
  }, py::arg("tau"));
  m.def("winding_ga", [](std::complex<double> tau, const std::string& shift,
                         const std::string& cycle, int samples) {
    const torus::TorusDifferential d{torus::Tau(tau), shift_of(shift)};
    const torus::TorusCycle c{cycle == "beta" ? torus::CycleKind::kBeta : torus::CycleKind::kAlpha, {}};
    const auto w = torus::winding_ga(d, c, samples);
    py::dict out;
    out["ga"] = w.ga;
    out["winding"] = w.winding;
    out["winding_residual"] = w.winding_residual;
    out["clearance"] = w.clearance;
    return out;
  }, py::arg("tau"), py::arg("shift") = "none", py::arg("cycle") = "alpha",
        py::arg("samples") = torus::kDefaultSamples);
  m.def("component_ga_vectors", [](std::complex<double> tau) {
    std::vector<std::string> out;
    for (const auto& v : torus::component_ga_vectors(torus::Tau(tau))) out.push_back(v.to_string());
    return out;
  }, py::arg("tau"));
  m.def("twist_consistency_check", [] { return torus::twist_consistency_check(); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    const int code = cli::run(args, out);
    return std::make_pair(code, out.str());
  }, py::arg("args"), "Run a strata_lab command; returns (exit code, stdout text).");
  m.attr("__version__") = cli::kVersion;
}
