#pragma once

// JSON wire formats.
//
//   vector:  [[re, im], ...]; exact mode writes rationals as strings "p/q"
//            (or "p" when the denominator is 1), float mode as numbers.
//   graph:   {"k": int, "edges": [[i, j], ...]}, 1-based vertices.
//   set:     {"dims": [...], "mode": "exact"|"float", "states": [[vec, ...], ...]}
//   recipe:  {"dims": [...], "k": int, "graphs": [graph, ...], "configs": [...]}
//
// Readers throw FormatError on malformed input.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "upbforge/bounds.hpp"
#include "upbforge/graph.hpp"
#include "upbforge/orthrep.hpp"
#include "upbforge/pipeline.hpp"
#include "upbforge/product_basis.hpp"

namespace upbforge {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const json& j);

mpq_class rational_from_json(const json& j);
json rational_to_json(const mpq_class& q);

template <Scalar T>
json vector_to_json(const Vector<T>& v);
template <Scalar T>
Vector<T> vector_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

template <Scalar T>
json set_to_json(const ProductStateSet<T>& set);
AnySet set_from_json(const json& j);

json mask_to_json(VertexMask m);

template <Scalar T>
json verdict_to_json(const UpbVerdict<T>& v);
template <Scalar T>
json gupb_to_json(const GupbVerdict<T>& v);

json degree_report_to_json(const DegreeBoundsReport& r);
json regularity_to_json(const std::vector<RegularityResult>& r);
json prop7_to_json(const Prop7Report& r);

json bound_report_to_json(const bounds::BoundReport& r);

json solver_config_to_json(const SolverConfig& c);
/// Missing keys keep the values already in `base`.
SolverConfig solver_config_from_json(const json& j, SolverConfig base = {});
json orthrep_to_json(const OrthRepResult& r);
OrthRepResult orthrep_from_json(const json& j);

json search_report_to_json(const SearchReport& r, bool include_timing = true);

/// {"dims": [...], "k": int, "graphs": [graph, ...], "configs": [config, ...]?}
UpbRecipe recipe_from_json(const json& j);
json recipe_to_json(const UpbRecipe& r);
json construct_to_json(const ConstructResult& r);

}  // namespace upbforge
