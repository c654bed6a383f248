#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nearring/analyzer.hpp"
#include "nearring/aut.hpp"
#include "nearring/enumerator.hpp"
#include "nearring/mapdsl.hpp"
#include "nearring/maps.hpp"
#include "nearring/pgroup.hpp"
#include "nearring/verifier.hpp"
#include "nearring/version.hpp"

namespace py = pybind11;
using namespace nearring;

namespace {

using Coords = std::tuple<Residue, Residue, Residue>;

Element to_element(const Coords& c) { return {std::get<0>(c), std::get<1>(c), std::get<2>(c)}; }
Coords to_coords(const Element& x) { return {x.x1, x.x2, x.x3}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Local nearrings on metacyclic p-groups";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MapFormatError>(m, "MapFormatError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);

  py::class_<GroupParams>(m, "Group")
      .def(py::init(&make_params), py::arg("p"), py::arg("m"), py::arg("n"), py::arg("d"))
      .def_property_readonly("p", &GroupParams::p)
      .def_property_readonly("m", &GroupParams::m)
      .def_property_readonly("n", &GroupParams::n)
      .def_property_readonly("d", &GroupParams::d)
      .def_property_readonly("order", &GroupParams::order)
      .def_property_readonly("exponent", &GroupParams::exponent)
      .def("add", [](const GroupParams& g, const Coords& x, const Coords& y) {
        return to_coords(add(g, to_element(x), to_element(y)));
      })
      .def("neg", [](const GroupParams& g, const Coords& x) { return to_coords(neg(g, to_element(x))); })
      .def("commutator", [](const GroupParams& g, const Coords& x, const Coords& y) {
        return to_coords(commutator(g, to_element(x), to_element(y)));
      })
      .def("element_order", [](const GroupParams& g, const Coords& x) { return element_order(g, to_element(x)); })
      .def("rank", [](const GroupParams& g, const Coords& x) { return rank(g, to_element(x)); })
      .def("unrank", [](const GroupParams& g, std::uint64_t k) { return to_coords(unrank(g, k)); })
      .def("__eq__", [](const GroupParams& l, const GroupParams& r) { return l == r; })
      .def("__repr__", &GroupParams::to_string);

  py::class_<MapTriple>(m, "MapTriple")
      .def(py::init<GroupParams, std::vector<Residue>, std::vector<Residue>, std::vector<Residue>>(),
           py::arg("group"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
      .def_property_readonly("group", &MapTriple::params)
      .def_property_readonly("alpha", &MapTriple::alpha)
      .def_property_readonly("beta", &MapTriple::beta)
      .def_property_readonly("gamma", &MapTriple::gamma)
      .def("mul", [](const MapTriple& t, const Coords& x, const Coords& y) {
        return to_coords(mul(t, to_element(x), to_element(y)));
      })
      .def("to_json", [](const MapTriple& t) { return to_json(t); })
      .def_static("from_json", [](const std::string& s) { return map_triple_from_json(s); })
      .def("__eq__", [](const MapTriple& l, const MapTriple& r) { return l == r; });

  m.def("canonical_maps", &canonical_maps, py::arg("group"));
  m.def(
      "maps_from_exprs",
      [](const GroupParams& g, const std::string& a, const std::string& b, const std::string& c) {
        return triple_from_exprs(g, parse_map_expr(a), parse_map_expr(b), parse_map_expr(c));
      },
      py::arg("group"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

  // Reports and profiles cross the boundary as JSON text; the Python package decodes them.
  m.def(
      "_verify",
      [](const MapTriple& t, std::optional<std::uint64_t> samples, std::optional<std::uint64_t> seed,
         unsigned threads) {
        VerifyOptions vo;
        vo.threads = threads;
        if (samples) {
          if (!seed) throw Error("sampled verification needs a seed");
          vo.mode = VerifyMode::sampled(*samples, *seed);
        } else if (t.params().order() > kExhaustiveOrderLimit) {
          if (!seed) throw Error("order above the exhaustive limit needs a seed for sampling");
          vo.mode = default_mode(t.params(), *seed);
        }
        py::gil_scoped_release release;
        return to_json(verify_all(t, vo), false).dump();
      },
      py::arg("maps"), py::arg("samples") = py::none(), py::arg("seed") = py::none(),
      py::arg("threads") = 0);
  m.def("_analyze", [](const MapTriple& t) {
    py::gil_scoped_release release;
    const auto prof = analyze(t);
    Json out = to_json(prof);
    out["theorem1"] = to_json(check_theorem1(t, prof), false);
    return out.dump();
  });
  m.def("is_local", [](const MapTriple& t) { return is_local(t); });
  m.def("_aut", [](const GroupParams& g, unsigned threads) {
    AutOptions o;
    o.threads = threads;
    py::gil_scoped_release release;
    return to_json(aut_brute(g, o), false).dump();
  }, py::arg("group"), py::arg("threads") = 0);
  m.def("aut_order_formula", &aut_order_formula);
  m.def(
      "enumerate_local",
      [](const GroupParams& g, std::optional<std::uint64_t> max_solutions, unsigned threads, bool prune) {
        EnumerateOptions o;
        o.max_solutions = max_solutions;
        o.threads = threads;
        o.pointwise_pruning = prune;
        py::gil_scoped_release release;
        return enumerate_local(g, o).solutions;
      },
      py::arg("group"), py::arg("max_solutions") = py::none(), py::arg("threads") = 0,
      py::arg("prune") = true);
}
