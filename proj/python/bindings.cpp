// Python bindings. Structured values cross the boundary as JSON text in the
// same formats the CLI reads and writes; the package wrapper decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "upbforge/bounds.hpp"
#include "upbforge/json_io.hpp"
#include "upbforge/parallel.hpp"
#include "upbforge/pipeline.hpp"

namespace py = pybind11;
using namespace upbforge;

namespace {

AnySet parse_set(const std::string& text, bool allow_numerical) {
    AnySet set = set_from_json(json::parse(text));
    if (std::holds_alternative<FloatSet>(set) && !allow_numerical) {
        throw FormatError("floating-point input needs allow_numerical=True");
    }
    return set;
}

std::string verify_upb(const std::string& text, bool allow_numerical) {
    const AnySet set = parse_set(text, allow_numerical);
    py::gil_scoped_release release;
    return std::visit([](const auto& s) { return verdict_to_json(is_upb(s)).dump(); }, set);
}

std::string verify_gupb(const std::string& text, bool allow_numerical) {
    const AnySet set = parse_set(text, allow_numerical);
    py::gil_scoped_release release;
    return std::visit([](const auto& s) { return gupb_to_json(is_gupb(s)).dump(); }, set);
}

std::string compare_bounds(const std::vector<int>& dims) {
    return bound_report_to_json(bounds::compare(bounds::DimensionVector(dims))).dump();
}

std::string table1() {
    json out = json::array();
    for (const auto& dv : bounds::table1_dims()) out.push_back(bound_report_to_json(bounds::compare(dv)));
    return out.dump();
}

std::string k13_decompositions() {
    json out = json::array();
    for (const auto& d : enumerate_k13_decompositions()) {
        json g = json::array();
        for (const auto& graph : d.graphs) g.push_back(graph_to_json(graph));
        out.push_back({{"label", to_string(d.partition)}, {"graphs", g}});
    }
    return out.dump();
}

std::string solve_graph(const std::string& graph_text, const std::string& config_text) {
    const Graph g = graph_from_json(json::parse(graph_text));
    const SolverConfig cfg = solver_config_from_json(json::parse(config_text));
    py::gil_scoped_release release;
    return orthrep_to_json(cfg.genericity_penalty_weight > 0 ? solve_with_genericity(g, cfg) : solve(g, cfg)).dump();
}

std::string search(const std::string& source, const std::string& config_text, bool include_timing) {
    SearchConfig cfg;
    cfg.source = source;
    cfg.solver = solver_config_from_json(json::parse(config_text));
    py::gil_scoped_release release;
    return search_report_to_json(search_gupb_333(cfg), include_timing).dump();
}

std::string construct(const std::string& recipe_text) {
    const UpbRecipe recipe = recipe_from_json(json::parse(recipe_text));
    py::gil_scoped_release release;
    return construct_to_json(construct_upb(recipe)).dump();
}

}  // namespace

PYBIND11_MODULE(_upbforge, m) {
    m.doc() = "UPB and GUPB verification, bounds and orthogonal representation search";
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<json::exception>(m, "JsonError", PyExc_ValueError);

    m.def("verify_upb", &verify_upb, py::arg("set_json"), py::arg("allow_numerical") = false);
    m.def("verify_gupb", &verify_gupb, py::arg("set_json"), py::arg("allow_numerical") = false);
    m.def("compare_bounds", &compare_bounds, py::arg("dims"));
    m.def("table1", &table1);
    m.def("nn_bound", [](int n) { return bounds::nn_bound(n).get_str(); }, py::arg("n"));
    m.def("k13_decompositions", &k13_decompositions);
    m.def("solve", &solve_graph, py::arg("graph_json"), py::arg("config_json"));
    m.def("example_upb", [](int which) { return set_to_json(example_upb(which)).dump(); }, py::arg("which"));
    m.def("search_gupb", &search, py::arg("source"), py::arg("config_json"), py::arg("include_timing"));
    m.def("construct_upb", &construct, py::arg("recipe_json"));
    m.def("worker_count", &worker_count);
}
