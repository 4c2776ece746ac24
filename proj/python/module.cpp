#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "desargues/cli.hpp"
#include "desargues/json_io.hpp"
#include "desargues/scene.hpp"

namespace py = pybind11;
using namespace desargues;

namespace {

// Library errors surface as ValueError carrying the machine-readable code.
[[noreturn]] void raise(const Error& e) {
  throw py::value_error(std::string(e.code_name()) + ": " + e.what());
}

std::pair<int, std::string> py_run(const std::vector<std::string>& args) {
  RunResult r = run_cli(args);
  return {r.exit_code, r.output};
}

std::string py_harmonic(const std::string& m, const std::string& p, const std::string& q) {
  try {
    auto v = [](const std::string& text) {
      if (text == "inf") return HomParam::infinity();
      return HomParam::from_affine(Scalar(parse_rat(text)));
    };
    Json j = value_json(harmonic_conjugate(v(m), v(p), v(q)));
    return j.get<std::string>();
  } catch (const Error& e) {
    raise(e);
  }
}

std::string py_involution(const std::string& scene_text, const std::string& pencil,
                          const std::string& line) {
  try {
    Scene sc = Scene::parse(scene_text);
    auto [inv, chart] = sc.pencil(pencil).desargues_involution(sc.line(line));
    Json j;
    j["line"] = line_json(chart.line());
    j["involution"] = involution_json(inv);
    j["fixed"] = rootpair_json(fixed_points(inv));
    return dump_json(j);
  } catch (const Error& e) {
    raise(e);
  }
}

std::string py_eleven_point(const std::string& scene_text, const std::string& pencil) {
  try {
    Scene sc = Scene::parse(scene_text);
    return dump_json(report_json(eleven_point_conic(sc.pencil(pencil))));
  } catch (const Error& e) {
    raise(e);
  }
}

std::string py_butterfly_point(const std::string& scene_text, const std::string& pencil,
                               const std::string& point) {
  try {
    Scene sc = Scene::parse(scene_text);
    return dump_json(report_json(butterfly_point(sc.pencil(pencil), sc.point(point))));
  } catch (const Error& e) {
    raise(e);
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact pencil-of-conics toolkit: involutions induced on lines, member "
            "chord checks, center loci and SVG renderings. All values are exact "
            "rationals or quadratic irrationals, serialized as strings.";

  m.def("run", &py_run, py::arg("args"),
        "Run the command-line interface in-process. Returns (exit_code, output).");
  m.def("harmonic", &py_harmonic, py::arg("m"), py::arg("p"), py::arg("q"),
        "Harmonic conjugate of m with respect to {p, q}; values are rational "
        "strings or 'inf'.");
  m.def("involution", &py_involution, py::arg("scene"), py::arg("pencil"), py::arg("line"),
        "Involution induced on a named line by a named pencil of a scene JSON "
        "text; returns a JSON report string.");
  m.def("eleven_point", &py_eleven_point, py::arg("scene"), py::arg("pencil"),
        "Locus of member centers with its 11 incidence witnesses; returns a "
        "JSON report string.");
  m.def("butterfly_point", &py_butterfly_point, py::arg("scene"), py::arg("pencil"),
        py::arg("point"),
        "Whether a named point is the center of some pencil member; returns a "
        "JSON report string.");
  m.attr("__version__") = "0.1.0";
}
