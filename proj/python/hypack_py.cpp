#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/io.hpp"
#include "hypack/monte_carlo.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/special_functions.hpp"
#include "hypack/truncation.hpp"
#include "hypack/verify.hpp"
#include "hypack/volumes.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace hypack;

namespace {

py::dict report_dict(const DensityReport& r) {
  py::dict d;
  d["p"] = r.p;
  d["s"] = r.s;
  d["h"] = r.h;
  d["theta"] = r.theta;
  d["vol3_base"] = r.vol3_base;
  d["vol4_orthoscheme"] = r.vol4_orthoscheme;
  d["vol4_hyperball"] = r.vol4_hyperball_piece;
  d["delta"] = r.delta;
  return d;
}

py::object parse_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(json_text(j));
}

}  // namespace

PYBIND11_MODULE(hypack, m) {
  m.doc() = "Hyperball packing densities for regular truncated 4-simplices";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_RuntimeError);
  py::register_exception<FixtureError>(m, "FixtureError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("p_lower", &p_lower);
  m.def("s_upper", &s_upper);
  m.def("p_to_s", &p_to_s, py::arg("p"));
  m.def("s_to_p", &s_to_p, py::arg("s"));
  m.def("lobachevsky", &lobachevsky, py::arg("x"));
  m.def("height", &height, py::arg("p"));
  m.def("base_orthoscheme_volume", &base_orthoscheme_volume, py::arg("p"));
  m.def("truncated_orthoscheme4_volume", &truncated_orthoscheme4_volume, py::arg("p"));
  m.def("hyperball_piece_volume",
        [](int n, double base_volume, double h) { return hyperball_piece_volume({n, base_volume, h}); },
        py::arg("n"), py::arg("base_volume"), py::arg("height"));

  m.def("density", [](double p) { return report_dict(density(p)); }, py::arg("p"));
  m.def(
      "sweep",
      [](double from, double to, int steps) {
        py::list out;
        for (const auto& r : sweep(from, to, steps)) out.append(report_dict(r));
        return out;
      },
      py::arg("p_from"), py::arg("p_to"), py::arg("steps"));
  m.def(
      "maximize",
      [](double tol) {
        const OptimumResult r = maximize(tol);
        py::dict d;
        d["p_opt"] = r.p_opt;
        d["delta_opt"] = r.delta_opt;
        d["iterations"] = r.iterations;
        d["bracket_width"] = r.bracket_width;
        return d;
      },
      py::arg("tol") = 1e-10);

  m.def("geometry", [](double s) { return parse_json(geometry_json(build_simplex(s))); }, py::arg("s"));

  m.def(
      "mc_truncated_orthoscheme4_volume",
      [](double p, std::uint64_t samples, std::uint64_t seed) {
        const auto e = mc_truncated_orthoscheme4_volume(p, {samples, seed, 0});
        return py::make_tuple(e.volume, e.std_error);
      },
      py::arg("p"), py::arg("samples") = 1'000'000, py::arg("seed") = 42);

  m.def(
      "decompose",
      [](const std::string& fixture_text, bool lexicographic) {
        const DecompositionFixture fx = parse_fixture(fixture_text);
        const auto bases = fx.base_planes();
        const Decomposition d =
            decompose(vertex_enumeration(fx.halfspaces, fx.dim), bases, fx.height,
                      lexicographic ? CutPolicy::MostIncidentThenLexicographic : CutPolicy::MostIncidentThenClearance);
        py::list events;
        for (const auto& e : d.events) events.append(parse_json(to_json(e)));
        py::list pieces;
        for (const auto& piece : d.pieces) {
          py::dict pd = parse_json(to_json(piece));
          pd["truncated_simplex"] = is_truncated_simplex(piece, bases);
          pieces.append(pd);
        }
        return py::make_tuple(events, pieces);
      },
      py::arg("fixture_json"), py::arg("lexicographic") = false);

  m.def(
      "verify",
      [](std::uint64_t mc_samples, std::uint64_t seed) {
        py::list out;
        VerifyOptions opt;
        opt.mc_samples = mc_samples;
        opt.seed = seed;
        for (const auto& r : run_checks(opt)) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("mc_samples") = 1'000'000, py::arg("seed") = 42);
}
