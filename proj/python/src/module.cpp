// Python bindings. Values cross the boundary as JSON text in the same
// format the rcq tool reads and writes; rcq/__init__.py wraps them as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcq/fedosov.hpp"
#include "rcq/geometry.hpp"
#include "rcq/json_io.hpp"
#include "rcq/modular.hpp"
#include "rcq/suites.hpp"

namespace py = pybind11;
using namespace rcq;

namespace {

std::string star(const std::string& f, const std::string& g, const std::string& mu, int order) {
  LaurentPoly2 m = mu.empty() ? LaurentPoly2() : connection_mu_from_json(parse_json(mu));
  Json jf = parse_json(f), jg = parse_json(g);
  if (jf.value("type", "") == "crossed" || jg.value("type", "") == "crossed")
    return to_json(crossed_star(crossed_from_json(jf), crossed_from_json(jg), m, order)).dump();
  return to_json(fedosov_star(laurent_from_json(jf), laurent_from_json(jg), m, order)).dump();
}

std::string modular_rc(int n, const std::string& f, const std::string& g, int prec) {
  return to_json(rc_modular(n, named_form(f, prec), named_form(g, prec))).dump();
}

std::string flat(const std::string& f, const std::string& mu, int degree) {
  LaurentPoly2 m = mu.empty() ? LaurentPoly2() : connection_mu_from_json(parse_json(mu));
  FlatSection fs(laurent_from_json(parse_json(f)), m, degree);
  Json out = Json::array();
  for (const auto& [mn, a] : fs.table()) out.push_back(Json::object({{"m", mn.first}, {"n", mn.second}, {"a", to_json(a)}}));
  return out.dump();
}

std::string verify(const std::string& suite, const std::string& config) {
  SuiteConfig cfg = SuiteConfig::from_json(config.empty() ? Json::object() : parse_json(config));
  return run_suite(build_suite(canonical_suite(suite), cfg)).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_rcq, m) {
  m.doc() = "exact Rankin-Cohen, Fedosov and H1 computations";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

  m.def("star", &star, py::arg("f"), py::arg("g"), py::arg("mu") = "", py::arg("order") = 4);
  m.def("flat_section", &flat, py::arg("f"), py::arg("mu") = "", py::arg("degree") = 4);
  m.def("modular_rc", &modular_rc, py::arg("n"), py::arg("f"), py::arg("g"), py::arg("prec") = 20);
  m.def("rc_h1", [](int n) { return to_json(rc_h1(n)).dump(); }, py::arg("n"));
  m.def("rc_h1_text", [](int n) { return rc_h1(n).to_string(); }, py::arg("n"));
  m.def("omega_from_mu", [](const std::string& mu) { return to_json(omega_from_mu(laurent_from_json(parse_json(mu)))).dump(); });
  m.def("suite_names", &suite_names);
  m.def("verify", &verify, py::arg("suite"), py::arg("config") = "");
}
