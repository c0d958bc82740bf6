#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "subshift/cli.hpp"
#include "subshift/error.hpp"
#include "subshift/io.hpp"

namespace py = pybind11;
using namespace subshift;

namespace {

std::vector<std::string> words_of(const Subshift& x, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& w : x.language(n)) out.push_back(x.alphabet().format(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on one-dimensional subshifts";

  py::register_exception<Error>(m, "SubshiftError", PyExc_ValueError);

  py::class_<Subshift>(m, "Subshift")
      .def_static("from_json", [](const std::string& text) { return spec_from_json(Json::parse(text)); })
      .def_static("builtin", [](const std::string& name) { return make_example(name).spec; })
      .def("to_json", [](const Subshift& x) { return spec_to_json(x).dump(); })
      .def_property_readonly("alphabet", [](const Subshift& x) { return x.alphabet().letters(); })
      .def("empty", &Subshift::empty)
      .def("complexity", [](const Subshift& x, std::size_t n) { return complexity(x, n); }, py::arg("n"))
      .def("language", &words_of, py::arg("n"))
      .def("contains", [](const Subshift& x, const std::string& w) { return x.contains(x.alphabet().parse(w)); })
      .def("forbid",
           [](const Subshift& x, const std::vector<std::string>& ws) {
             std::vector<Word> parsed;
             for (const auto& w : ws) parsed.push_back(x.alphabet().parse(w));
             return x.forbid(parsed);
           })
      .def("__repr__", [](const Subshift& x) { return "<Subshift " + spec_to_json(x).dump() + ">"; });

  m.def("example_names", &example_names);
  m.def("export_example", [](const std::string& name, const std::string& dir) { export_example(make_example(name), dir); },
        py::arg("name"), py::arg("dir"));
  m.def("complexity_table",
        [](const Subshift& x, std::size_t max_n) { return complexity_table(x, max_n).values; },
        py::arg("spec"), py::arg("max_n"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
