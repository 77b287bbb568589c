#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotmosaic/render.hpp"
#include "knotmosaic/search.hpp"

namespace py = pybind11;
using namespace knotmosaic;

namespace {

py::dict invariants(const Mosaic& m) {
  const DiagramCode code = to_diagram_code(m);
  py::dict d;
  d["pd"] = format_pd(code);
  d["jones"] = jones(code).to_string();
  d["alexander"] = alexander(code).to_string();
  d["determinant"] = determinant(code);
  d["writhe"] = writhe(code);
  d["fingerprint"] = fingerprint(code).key();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Knot mosaics: tiles, moves, invariants and the 7-mosaic survey";
  mod.attr("SOURCE_DATA_DIR") = KNOTMOSAIC_DATA_DIR;

  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<DiagramError>(mod, "DiagramError", PyExc_ValueError);
  py::register_exception<MoveError>(mod, "MoveError", PyExc_ValueError);
  py::register_exception<TableError>(mod, "TableError", PyExc_ValueError);

  py::class_<Mosaic>(mod, "Mosaic")
      .def(py::init<int>(), py::arg("n"))
      .def_static("parse", [](const std::string& text) { return parse_mosaic(text); })
      .def_property_readonly("size", &Mosaic::size)
      .def("at", [](const Mosaic& m, int r, int c) { return to_token(m.at(r, c)); })
      .def("set", [](Mosaic& m, int r, int c, const std::string& token) { m.set(r, c, parse_cell(token)); })
      .def("rows", &row_strings)
      .def("non_blank_count", &Mosaic::non_blank_count)
      .def("crossing_count", &Mosaic::crossing_count)
      .def("is_suitably_connected", &is_suitably_connected)
      .def("violation",
           [](const Mosaic& m) -> std::optional<std::tuple<int, int, int>> {
             auto v = check_connections(m);
             if (!v) return std::nullopt;
             return std::tuple{v->pos.row, v->pos.col, static_cast<int>(v->side)};
           })
      .def("components", [](const Mosaic& m) { return trace(m).size(); })
      .def("transform", [](const Mosaic& m, int rotation, bool reflect) { return transform(m, {rotation, reflect}); },
           py::arg("rotation"), py::arg("reflect") = false)
      .def("canonical_form", &canonical_form, py::arg("with_mirror") = false)
      .def("__str__", &serialize)
      .def("__repr__", [](const Mosaic& m) { return "Mosaic.parse('''" + serialize(m) + "''')"; })
      .def(py::self == py::self);

  py::class_<KnotTable>(mod, "KnotTable")
      .def_static("load", &load_table_file, py::arg("path"))
      .def("__len__", &KnotTable::size)
      .def("names", [](const KnotTable& t) {
        std::vector<std::string> out;
        for (const auto& r : t.records()) out.push_back(r.name);
        return out;
      })
      .def("identify", [](const KnotTable& t, const Mosaic& m) { return t.identify(to_diagram_code(m)); });

  mod.def("invariants", &invariants, py::arg("mosaic"), "PD code, Jones, Alexander, determinant and writhe");
  mod.def("render_ascii", &render_ascii);
  mod.def("render_svg", &render_svg, py::arg("mosaic"), py::arg("cell") = 40, py::arg("gap") = 0.3);
  mod.def("tile_bounds", &tile_bounds);
  mod.def(
      "reduce",
      [](const Mosaic& m, int budget) {
        const Reduction r = reduce(m, budget);
        std::vector<std::tuple<std::string, int, int>> steps;
        for (const auto& s : r.steps) steps.emplace_back(s.rule, s.anchor.row, s.anchor.col);
        return std::tuple{r.result, steps, r.exhausted};
      },
      py::arg("mosaic"), py::arg("budget") = 1000, "(result, [(rule, row, col)], exhausted)");
  mod.def("prune", [](const Mosaic& m) {
    const PruneResult r = prune(m);
    return std::pair{to_string(r.verdict), r.witness};
  });
  mod.def("layouts", [] {
    std::vector<std::tuple<int, Mosaic, int>> out;
    for (const Layout& l : layout_catalog()) out.emplace_back(l.id, l.cells, l.declared_count);
    return out;
  });
  mod.def(
      "survey_jsonl",
      [](const KnotTable& table, std::vector<int> layouts, int min_crossings, int jobs,
         std::set<std::string> exclusion) {
        py::gil_scoped_release release;
        return to_jsonl(run_survey({std::move(layouts), min_crossings, jobs, std::move(exclusion), {}}, table));
      },
      py::arg("table"), py::arg("layouts") = std::vector<int>{1, 2, 3}, py::arg("min_crossings") = 9,
      py::arg("jobs") = 1, py::arg("exclusion") = std::set<std::string>{});
}
