#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cohcfg/analysis.hpp"
#include "cohcfg/closure.hpp"
#include "cohcfg/io.hpp"
#include "cohcfg/schemes.hpp"
#include "cohcfg/structure.hpp"
#include "cohcfg/tensor.hpp"

namespace py = pybind11;
using namespace cohcfg;

namespace {

ColorMatrix from_rows(const std::vector<std::vector<Color>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Color> cells;
  cells.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw py::value_error("matrix must be square");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return ColorMatrix(n, std::move(cells));
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["claim"] = r.claim;
  d["params"] = r.params;
  d["passed"] = r.pass;
  d["witnesses"] = r.witnesses;
  d["failures"] = r.failures;
  d["seconds"] = r.seconds;
  d["ledger"] = r.ledger_line();
  return d;
}

}  // namespace

PYBIND11_MODULE(_cohcfg, m) {
  m.doc() = "coherent configurations, Weisfeiler-Leman closure and scheme checks";

  py::class_<CoherentConfiguration>(m, "Configuration")
      .def(py::init([](const std::vector<std::vector<Color>>& rows) { return CoherentConfiguration(from_rows(rows)); }))
      .def_property_readonly("degree", &CoherentConfiguration::degree)
      .def_property_readonly("rank", &CoherentConfiguration::rank)
      .def("color", [](const CoherentConfiguration& c, Point a, Point b) {
        if (a >= c.degree() || b >= c.degree()) throw py::index_error("point out of range");
        return c.color(a, b);
      })
      .def("rows", [](const CoherentConfiguration& c) {
        std::vector<std::vector<Color>> out(c.degree());
        for (Point a = 0; a < c.degree(); ++a) out[a].assign(c.row(a), c.row(a) + c.degree());
        return out;
      })
      .def_property_readonly("fibers", &CoherentConfiguration::fibers)
      .def("valency", &CoherentConfiguration::valency)
      .def("transpose", &CoherentConfiguration::transpose)
      .def("is_reflexive", &CoherentConfiguration::is_reflexive)
      .def_property_readonly("is_homogeneous", &CoherentConfiguration::is_homogeneous)
      .def_property_readonly("is_symmetric", &CoherentConfiguration::is_symmetric)
      .def_property_readonly("is_discrete", &CoherentConfiguration::is_discrete)
      .def("to_text", &to_text)
      .def("__eq__", [](const CoherentConfiguration& a, const CoherentConfiguration& b) { return a == b; })
      .def("__repr__", [](const CoherentConfiguration& c) {
        return "<Configuration degree=" + std::to_string(c.degree()) + " rank=" + std::to_string(c.rank()) + ">";
      });

  m.def("from_text", [](const std::string& text) {
    std::istringstream in(text);
    return CoherentConfiguration(read_matrix(in));
  });
  m.def("families", &scheme_families);
  m.def("build", [](const std::string& family, std::uint32_t q) { return build_family(family, q).scheme; },
        py::arg("family"), py::arg("q"));
  m.def("closure", [](const std::vector<std::vector<Color>>& rows) { return coherent_closure(from_rows(rows)); });
  m.def("extend", [](const CoherentConfiguration& c, const std::vector<Point>& pts) { return extend_points(c, pts); });
  m.def("validate", [](const CoherentConfiguration& c, bool full) {
    return report_dict(validate(c, full ? ValidationLevel::full : ValidationLevel::axioms));
  }, py::arg("cfg"), py::arg("full") = true);
  m.def("indistinguishing_number", [](const CoherentConfiguration& c) { return indistinguishing_number(c).overall; });
  m.def("pseudocyclic", [](const CoherentConfiguration& c) {
    const auto r = is_pseudocyclic(c);
    return py::make_tuple(r.pseudocyclic, r.valency);
  });
  m.def("partly_regular", [](const CoherentConfiguration& c) { return partly_regular(c).regular_points; });
  m.def("m_t", &m_t);
  m.def("automorphism_order", [](const CoherentConfiguration& c) {
    py::gil_scoped_release release;
    return automorphism_group(c).order;
  });
  m.def("base_number", [](const CoherentConfiguration& c, bool exact) {
    return base_number(c, exact ? BaseMode::exact : BaseMode::greedy).value;
  }, py::arg("cfg"), py::arg("exact") = false);
  m.def("matching_graph", [](std::uint32_t d) {
    const auto g = matching_graph(d);
    py::dict out;
    out["vertices"] = g.vertices;
    out["edges"] = g.edges;
    out["connected"] = g.connected;
    out["components"] = g.components;
    return out;
  });
  m.def("claims", &known_claims);
  m.def("verify", [](const std::string& claim, const std::string& params) {
    VerificationReport r;
    {
      py::gil_scoped_release release;
      r = verify_theorem(claim, params);
    }
    return report_dict(r);
  }, py::arg("claim"), py::arg("params") = "");
}
