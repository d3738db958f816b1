#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinetorsion/io.hpp"
#include "spinetorsion/report.hpp"

namespace py = pybind11;
using namespace spinetorsion;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Branched spines, sliding moves and Reidemeister torsion";

  static py::exception<SpineError> error(m, "SpineError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SpineError& e) {
      error(e.what());
    }
  });

  m.def("normalize", [](const std::string& text) { return serialize_spine(read_spine(text)); }, py::arg("text"));
  m.def("validate", [](const std::string& text) { return dump(validate_report(read_spine(text))); }, py::arg("text"));
  m.def("summary", [](const std::string& text) { return dump(summary_report(read_spine(text))); }, py::arg("text"));
  m.def(
      "branchings", [](const std::string& text) { return dump(branchings_report(read_spine(text))); },
      py::arg("text"));
  m.def(
      "move",
      [](const std::string& text, std::optional<int> face, std::optional<int> variant, std::optional<int> edge) {
        return dump(move_report(read_spine(text), face, variant, edge));
      },
      py::arg("text"), py::arg("face") = py::none(), py::arg("variant") = py::none(), py::arg("edge") = py::none());
  m.def(
      "walk",
      [](const std::string& text, int steps, std::uint64_t seed, bool h_null_only, int max_tets) {
        return dump(walk_report(read_spine(text), steps, seed, h_null_only, max_tets));
      },
      py::arg("text"), py::arg("steps"), py::arg("seed"), py::arg("h_null_only") = false, py::arg("max_tets") = 6);
  m.def(
      "replay",
      [](const std::string& text, const std::string& log) { return dump(replay_report(read_spine(text), log)); },
      py::arg("text"), py::arg("log"));
  m.def(
      "hcheck",
      [](const std::string& text, int face, int variant) { return dump(hcheck_report(read_spine(text), face, variant)); },
      py::arg("text"), py::arg("face"), py::arg("variant") = 0);
  m.def(
      "torsion",
      [](const std::string& text, const std::string& rep, bool sign_refined, bool auto_basis) {
        return dump(torsion_report(read_spine(text), RepSpec::parse(rep), sign_refined, auto_basis));
      },
      py::arg("text"), py::arg("rep") = "trivial", py::arg("sign_refined") = false, py::arg("auto_basis") = false);
  m.def("euler", [](const std::string& text) { return dump(euler_report(read_spine(text))); }, py::arg("text"));
  m.def(
      "census", [](int tets) { return dump(census_report(tets, true)); }, py::arg("tets"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "invariance",
      [](const std::string& text, int steps, std::uint64_t seed, const std::string& rep, int max_tets) {
        return dump(invariance_report(read_spine(text), steps, seed, RepSpec::parse(rep), max_tets));
      },
      py::arg("text"), py::arg("steps"), py::arg("seed"), py::arg("rep") = "free-abelian", py::arg("max_tets") = 6,
      py::call_guard<py::gil_scoped_release>());
}
