#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "comdet/constructions.hpp"
#include "comdet/io.hpp"
#include "comdet/varchenko.hpp"

namespace py = pybind11;
using namespace comdet;

namespace {

nlohmann::json pyToJson(const py::dict& d) {
  auto dumped = py::module_::import("json").attr("dumps")(d).cast<std::string>();
  return nlohmann::json::parse(dumped);
}

SignSystem systemFromDict(const py::dict& d) { return systemFromJson(pyToJson(d)); }

py::object jsonToPy(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

FinitePoset posetFromDict(const py::dict& d) { return posetFromJson(pyToJson(d)); }

std::vector<std::string> topeStrings(const SignSystem& s) {
  std::vector<std::string> out;
  for (const auto& t : topes(s)) out.push_back(t.str());
  return out;
}

py::list matrixStrings(const PolyMatrix& m, const GroundSet& g) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(m.at(r, c).str(g));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_comdet, m) {
  m.doc() = "Exact determinants of tope distance matrices";

  py::class_<SignSystem>(m, "SignSystem")
      .def_static("from_dict", &systemFromDict, py::arg("data"))
      .def("to_dict", [](const SignSystem& s) { return jsonToPy(systemToJson(s)); })
      .def_property_readonly("ground_set",
                             [](const SignSystem& s) { return s.ground()->names(); })
      .def_property_readonly("covectors",
                             [](const SignSystem& s) {
                               std::vector<std::string> out;
                               for (const auto& x : s.covectors()) out.push_back(x.str());
                               return out;
                             })
      .def("topes", &topeStrings)
      .def("check",
           [](const SignSystem& s) { return jsonToPy(axiomReportToJson(checkAxioms(s))); })
      .def("rank", [](const SignSystem& s) { return rank(s); })
      .def("matrix",
           [](const SignSystem& s, bool sign) {
             VarchenkoMatrix v = sign ? buildSigned(s) : buildUnsigned(s);
             py::dict out;
             out["labels"] = v.matrix.rowLabels();
             out["entries"] = matrixStrings(v.matrix, *s.ground());
             return out;
           },
           py::arg("signed") = true)
      .def("det",
           [](const SignSystem& s, bool sign) {
             VarchenkoMatrix v = sign ? buildSigned(s) : buildUnsigned(s);
             return bareissDet(v.matrix).str(*s.ground());
           },
           py::arg("signed") = true)
      .def("formula",
           [](const SignSystem& s, bool sign) {
             py::list out;
             for (const auto& f : closedFormDet(s, sign)) {
               py::dict d;
               d["factor"] = f.factor.str(*s.ground());
               d["exponent"] = f.exponent;
               d["zero_set"] = f.zeroSet;
               out.append(d);
             }
             return out;
           },
           py::arg("signed") = true)
      .def("verify",
           [](const SignSystem& s, bool sign) {
             FactorReport r = verifyFactorChain(s, sign);
             py::dict j = jsonToPy(factorReportToJson(r, *s.ground())).cast<py::dict>();
             j["all_hold"] = r.allHold();
             return j;
           },
           py::arg("signed") = true);

  m.def("cycle", &cycleOM, py::arg("n"));
  m.def("cube", &fullCube, py::arg("n"));
  m.def("random_com",
        [](std::uint64_t seed) { return randomCOM(seed); },
        py::arg("seed"));
  m.def("ideals", [](const py::dict& poset) { return idealsCOM(posetFromDict(poset)); },
        py::arg("poset"));
  m.def("ranking", [](const py::dict& poset) { return rankingCOM(posetFromDict(poset)); },
        py::arg("poset"));
  m.def("ideals_formula",
        [](const py::dict& poset) {
          FinitePoset p = posetFromDict(poset);
          py::list out;
          for (const auto& f : idealsClosedForm(p)) {
            py::dict d;
            d["factor"] = f.factor.str(GroundSet(p.elements()));
            d["exponent"] = f.exponent;
            out.append(d);
          }
          return out;
        },
        py::arg("poset"));
  m.def("k4_subdivision_det", [] {
    auto [g, ts] = k4SubdivisionTopes();
    return bareissDet(buildUnsignedFromTopes(g, ts).matrix).str(*g);
  });
}
