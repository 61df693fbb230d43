#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "supercoh/catalog.hpp"
#include "supercoh/io.hpp"
#include "supercoh/selftest.hpp"
#include "supercoh/sixterm.hpp"

namespace py = pybind11;
using namespace supercoh;

namespace {

const io::NamedModule& module_of(const io::AlgebraFile& file, const std::string& name) {
  if (name.empty() && file.modules.size() == 1) return file.modules.front();
  const auto* m = file.module(name);
  if (!m) throw io::ParseError({{"no module named \"" + name + "\"", 0}});
  return *m;
}

std::string validate(const std::string& text, std::optional<unsigned> p) {
  auto file = io::read_algebra(text, p);
  return io::validation_to_json(io::validate_file(file)).dump();
}

std::size_t cohomology_dim(const std::string& text, const std::string& module, unsigned degree, const std::string& kind,
                           std::optional<unsigned> p) {
  auto file = io::parse_algebra(text, p);
  const auto& m = module_of(file, module);
  if (kind == "lie") return cohomology::lie_cohomology(cohomology::LieComplex(file.g, m.rep), degree).dim();
  if (kind == "restricted") return cohomology::restricted_cohomology(cohomology::BarComplex(file.g, m.rep), degree).dim();
  throw UsageError("kind must be \"lie\" or \"restricted\"");
}

std::string sixterm_report(const std::string& text, const std::string& module, std::optional<unsigned> p) {
  auto file = io::parse_algebra(text, p);
  const auto& m = module_of(file, module);
  return io::sixterm_to_json(sixterm::build_six_term(file.g, m.rep, "", m.name)).dump();
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> out;
  for (const auto& e : catalog::entries()) out.push_back(e.id);
  return out;
}

const catalog::Entry& entry(const std::vector<catalog::Entry>& all, const std::string& id) {
  const auto* e = catalog::find(all, id);
  if (!e) throw UsageError("unknown example \"" + id + "\"");
  return *e;
}

std::string catalog_file(const std::string& id) {
  auto all = catalog::entries();
  const auto& e = entry(all, id);
  return io::algebra_to_json(e.g, {{e.module_name, e.m, false}}).dump();
}

std::string catalog_sixterm(const std::string& id) {
  auto all = catalog::entries();
  const auto& e = entry(all, id);
  return io::sixterm_to_json(sixterm::build_six_term(e.g, e.m, e.id, e.module_name)).dump();
}

std::vector<std::tuple<std::string, bool, std::size_t>> run_selftest(std::uint64_t seed) {
  std::vector<std::tuple<std::string, bool, std::size_t>> out;
  for (const auto& s : selftest::run_all(seed)) out.emplace_back(s.name, s.ok, s.checks);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GF(p) cohomology of restricted Lie superalgebras";

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<io::ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("validate", &validate, py::arg("text"), py::arg("p_override") = py::none(),
        "Validation report of an algebra file as a JSON string.");
  m.def("cohomology_dim", &cohomology_dim, py::arg("text"), py::arg("module") = "", py::arg("degree") = 1,
        py::arg("kind") = "lie", py::arg("p_override") = py::none());
  m.def("sixterm", &sixterm_report, py::arg("text"), py::arg("module") = "", py::arg("p_override") = py::none(),
        "Six-term report payload as a JSON string.");
  m.def("catalog_ids", &catalog_ids);
  m.def("catalog_file", &catalog_file, py::arg("id"));
  m.def("catalog_sixterm", &catalog_sixterm, py::arg("id"));
  m.def("selftest", &run_selftest, py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());
  m.attr("schema_version") = io::schema_version;
}
