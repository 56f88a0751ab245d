#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hkr/cli.hpp"
#include "hkr/serialize.hpp"

namespace py = pybind11;

namespace {

std::string describe(const std::string& form) {
  return hkr::describe_json(hkr::FormAnalysis(hkr::FormId::parse(form))).dump();
}

std::string triple(const std::string& form) {
  return hkr::hkr_json(hkr::FormAnalysis(hkr::FormId::parse(form))).dump();
}

std::string dims(const std::string& form, int genus, const std::string& line) {
  auto ctx = hkr::CurveContext::parse(line, genus);
  hkr::FormAnalysis fa(hkr::FormId::parse(form));
  return hkr::dims_json(hkr::dimension_report(fa, ctx)).dump();
}

std::string section(const std::string& form, const std::vector<std::string>& gamma) {
  std::vector<hkr::Scalar> g;
  for (const auto& s : gamma) g.push_back(hkr::Scalar::parse(s));
  return hkr::section_json(hkr::FormAnalysis(hkr::FormId::parse(form)), g).dump();
}

std::string sl2_classify(const std::string& alpha, long d, long d_L) {
  return hkr::to_string(hkr::sl2_moduli_classify(hkr::Rational(alpha), d, d_L));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = hkr::run(args, out, err);
  return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_hkr, m) {
  m.doc() = "Exact Kostant-Rallis and Hitchin-section computations";
  py::register_exception<hkr::Error>(m, "HkrError", PyExc_ValueError);

  m.def("forms", [] {
    std::vector<std::string> out;
    for (const auto& id : hkr::default_forms()) out.push_back(id.str());
    return out;
  });
  m.def("describe", &describe, py::arg("form"));
  m.def("hkr", &triple, py::arg("form"));
  m.def("dims", &dims, py::arg("form"), py::arg("genus") = 2, py::arg("L") = "K");
  m.def("section", &section, py::arg("form"), py::arg("gamma"));
  m.def("sl2_moduli_classify", &sl2_classify, py::arg("alpha"), py::arg("d"), py::arg("d_L"));
  m.def("scalar", [](const std::string& s) { return hkr::Scalar::parse(s).str(); }, py::arg("text"));
  m.def("component_count", [](long n, int g) { return hkr::component_count(n, g).get_str(); },
        py::arg("N"), py::arg("genus"));
  m.def("run", &run_cli, py::arg("args"));
}
