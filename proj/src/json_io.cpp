#include "upbforge/json_io.hpp"

#include <cmath>
#include <fstream>
#include <regex>

namespace upbforge {

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

mpq_class rational_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw FormatError("exact amplitude must be a \"p/q\" string, got " + j.dump());
    static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
    const auto s = j.get<std::string>();
    if (!std::regex_match(s, pattern)) throw FormatError("malformed rational '" + s + "'");
    mpq_class q;
    q.set_str(s, 10);
    if (sgn(mpz_class(q.get_den())) == 0) throw FormatError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

json rational_to_json(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_str();
}

template <Scalar T>
json vector_to_json(const Vector<T>& v) {
    json out = json::array();
    for (const auto& z : v.components()) {
        if constexpr (scalar_traits<T>::mode == Mode::exact) {
            out.push_back({rational_to_json(z.real()), rational_to_json(z.imag())});
        } else {
            out.push_back({z.real(), z.imag()});
        }
    }
    return out;
}

template <Scalar T>
Vector<T> vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw FormatError("vector must be a nonempty array of [re, im] pairs");
    Vector<T> v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& c = j[i];
        if (!c.is_array() || c.size() != 2) throw FormatError("vector component must be a [re, im] pair");
        if constexpr (scalar_traits<T>::mode == Mode::exact) {
            v[i] = QComplex(rational_from_json(c[0]), rational_from_json(c[1]));
        } else {
            if (!c[0].is_number() || !c[1].is_number()) {
                throw FormatError("float amplitudes must be JSON numbers, got " + c.dump());
            }
            v[i] = FComplex(c[0].get<double>(), c[1].get<double>());
        }
    }
    return v;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
    return {{"k", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("edges")) {
        throw FormatError("graph must be an object with \"k\" and \"edges\"");
    }
    if (!j["k"].is_number_integer()) throw FormatError("graph \"k\" must be an integer");
    const int k = j["k"].get<int>();
    if (k < 1 || k > kMaxVertices) throw FormatError("graph \"k\" must lie in [1, 64]");
    if (!j["edges"].is_array()) throw FormatError("graph \"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw FormatError("edge must be a pair of integers, got " + e.dump());
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(k, edges);
    } catch (const std::exception& ex) {
        throw FormatError(std::string("invalid graph: ") + ex.what());
    }
}

template <Scalar T>
json set_to_json(const ProductStateSet<T>& set) {
    json states = json::array();
    for (const auto& st : set.states()) {
        json locals = json::array();
        for (const auto& v : st) locals.push_back(vector_to_json(v));
        states.push_back(std::move(locals));
    }
    return {{"dims", set.dims()}, {"mode", to_string(scalar_traits<T>::mode)}, {"states", states}};
}

namespace {

template <Scalar T>
ProductStateSet<T> typed_set_from_json(const json& j, const std::vector<int>& dims) {
    std::vector<ProductState<T>> states;
    for (const auto& st : j["states"]) {
        if (!st.is_array()) throw FormatError("each state must be an array of local vectors");
        ProductState<T> ps;
        for (const auto& v : st) ps.push_back(vector_from_json<T>(v));
        states.push_back(std::move(ps));
    }
    try {
        return ProductStateSet<T>(dims, std::move(states));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid product-state set: ") + e.what());
    }
}

}  // namespace

AnySet set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("states")) {
        throw FormatError("product-state set must have \"dims\" and \"states\"");
    }
    if (!j["dims"].is_array() || !j["states"].is_array()) throw FormatError("\"dims\" and \"states\" must be arrays");
    std::vector<int> dims;
    for (const auto& d : j["dims"]) {
        if (!d.is_number_integer()) throw FormatError("dims must be integers");
        dims.push_back(d.get<int>());
    }
    Mode mode = Mode::exact;
    if (j.contains("mode")) {
        try {
            mode = mode_from_string(j["mode"].get<std::string>());
        } catch (const std::exception& e) {
            throw FormatError(e.what());
        }
    }
    if (mode == Mode::exact) return typed_set_from_json<QComplex>(j, dims);
    return typed_set_from_json<FComplex>(j, dims);
}

json mask_to_json(VertexMask m) { return mask_to_vertices(m); }

template <Scalar T>
json verdict_to_json(const UpbVerdict<T>& v) {
    json out;
    out["is_upb"] = v.is_upb;
    out["numerical"] = v.numerical;
    out["failure"] = to_string(v.failure);
    if (v.witness) {
        json w = json::array();
        for (const auto& local : *v.witness) w.push_back(vector_to_json(local));
        out["witness"] = w;
    }
    if (v.non_orthogonal_pair) out["non_orthogonal_pair"] = {v.non_orthogonal_pair->first, v.non_orthogonal_pair->second};
    if (v.deficient_party) out["deficient_party"] = *v.deficient_party;
    if (!v.cover.empty()) {
        json c = json::array();
        for (auto m : v.cover) c.push_back(mask_to_json(m));
        out["cover"] = c;
    }
    json graphs = json::array();
    for (const auto& g : v.graphs) graphs.push_back(graph_to_json(g));
    out["graphs"] = graphs;
    json sets = json::array();
    for (const auto& party : v.maximal_sets) {
        json ps = json::array();
        for (const auto& w : party) ps.push_back(mask_to_json(w.members));
        sets.push_back(ps);
    }
    out["maximal_unsaturated_sets"] = sets;
    out["degrees"] = v.degrees;
    return out;
}

template <Scalar T>
json gupb_to_json(const GupbVerdict<T>& v) {
    json results = json::array();
    for (const auto& r : v.results) {
        json verdict = {{"is_upb", r.verdict.is_upb}, {"failure", to_string(r.verdict.failure)}};
        if (r.verdict.witness) {
            json w = json::array();
            for (const auto& local : *r.verdict.witness) w.push_back(vector_to_json(local));
            verdict["witness"] = w;
        }
        results.push_back({{"bipartition", to_string(r.bipartition)},
                           {"side1", r.bipartition.side1},
                           {"side2", r.bipartition.side2},
                           {"verdict", verdict}});
    }
    json out = {{"is_gupb", v.is_gupb}, {"results", results}};
    if (v.first_failure) out["first_failure"] = *v.first_failure;
    return out;
}

json degree_report_to_json(const DegreeBoundsReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"party", v.party}, {"vertex", v.vertex}, {"degree", v.degree},
                              {"lower", v.lower}, {"upper", v.upper}});
    }
    return {{"lower", r.lower}, {"upper", r.upper}, {"violations", violations}, {"tight", r.tight}};
}

json regularity_to_json(const std::vector<RegularityResult>& rs) {
    json out = json::array();
    for (const auto& r : rs) {
        out.push_back({{"party", r.party}, {"target_degree", r.target_degree},
                       {"regular", r.regular}, {"offending_vertices", r.offending_vertices}});
    }
    return out;
}

json prop7_to_json(const Prop7Report& r) {
    auto masks = [](const std::vector<std::optional<VertexMask>>& ms) {
        json out = json::array();
        for (const auto& m : ms) out.push_back(m ? mask_to_json(*m) : json(nullptr));
        return out;
    };
    return {
        {"condition1", {{"holds", r.condition1}, {"union_complete", r.union_complete}, {"four_regular", r.four_regular}}},
        {"condition2", {{"holds", r.condition2},
                        {"subsets_per_party", r.five_subsets_per_party},
                        {"rank_deficient", r.rank_deficient_five_subsets},
                        {"first_bad_subset", masks(r.first_bad_five_subset)}}},
        {"condition3", {{"holds", r.condition3},
                        {"subsets_per_pair", r.nine_subsets_per_pair},
                        {"rank_deficient", r.rank_deficient_nine_subsets},
                        {"first_bad_subset", masks(r.first_bad_nine_subset)}}},
        {"all", r.all()},
    };
}

json bound_report_to_json(const bounds::BoundReport& r) {
    json out = {
        {"dims", r.dims.dims()},
        {"bennett", r.bennett.value},
        {"bennett_strict_applies", r.bennett.strict_applies},
        {"bennett_effective", r.bennett.effective()},
        {"trivial_gupb", r.trivial_gupb},
        {"demianowicz", r.demianowicz},
        {"new_bound", r.new_bound},
        {"improved_applies", r.improved_applies},
        {"improved", r.improved ? json(*r.improved) : json(nullptr)},
        {"gupb_admissible", r.gupb_admissible},
        {"new_dominates_demianowicz", r.new_dominates_demianowicz},
        {"new_beats_trivial", r.new_beats_trivial},
    };
    return out;
}

json solver_config_to_json(const SolverConfig& c) {
    return {
        {"dimension", c.dimension},
        {"restarts", c.restarts},
        {"max_iterations", c.max_iterations},
        {"objective_tolerance", c.objective_tolerance},
        {"seed", c.seed},
        {"genericity_penalty_weight", c.genericity_penalty_weight},
        {"genericity_threshold", c.genericity_threshold},
        {"step", {{"initial_damping", c.step.initial_damping},
                  {"gradient_tolerance", c.step.gradient_tolerance},
                  {"step_tolerance", c.step.step_tolerance},
                  {"max_damping", c.step.max_damping}}},
    };
}

SolverConfig solver_config_from_json(const json& j, SolverConfig c) {
    if (!j.is_object()) throw FormatError("solver config must be an object");
    try {
        c.dimension = j.value("dimension", c.dimension);
        c.restarts = j.value("restarts", c.restarts);
        c.max_iterations = j.value("max_iterations", c.max_iterations);
        c.objective_tolerance = j.value("objective_tolerance", c.objective_tolerance);
        c.seed = j.value("seed", c.seed);
        c.genericity_penalty_weight = j.value("genericity_penalty_weight", c.genericity_penalty_weight);
        c.genericity_threshold = j.value("genericity_threshold", c.genericity_threshold);
        if (j.contains("step")) {
            const auto& s = j["step"];
            c.step.initial_damping = s.value("initial_damping", c.step.initial_damping);
            c.step.gradient_tolerance = s.value("gradient_tolerance", c.step.gradient_tolerance);
            c.step.step_tolerance = s.value("step_tolerance", c.step.step_tolerance);
            c.step.max_damping = s.value("max_damping", c.step.max_damping);
        }
        c.validate();
    } catch (const json::exception& e) {
        throw FormatError(std::string("solver config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("solver config: ") + e.what());
    }
    return c;
}

json orthrep_to_json(const OrthRepResult& r) {
    json vectors = json::array();
    for (const auto& v : r.vectors) vectors.push_back(vector_to_json(v));
    json faithfulness = json::array();
    for (const auto& [i, j] : r.faithfulness) faithfulness.push_back({i, j});
    json out = {
        {"vectors", vectors},
        {"objective", r.objective},
        {"smoothed_objective", r.smoothed_objective},
        {"converged", r.converged},
        {"restart_index", r.restart_index},
        {"iterations", r.iterations},
        {"restarts_run", r.restarts_run},
        {"faithfulness", faithfulness},
    };
    if (r.genericity) {
        out["genericity"] = {{"subsets", r.genericity->subsets},
                             {"rank_deficient", r.genericity->rank_deficient},
                             {"below_threshold", r.genericity->below_threshold},
                             {"min_ratio", r.genericity->min_ratio},
                             {"penalty", r.genericity->penalty}};
    }
    return out;
}

OrthRepResult orthrep_from_json(const json& j) {
    OrthRepResult r;
    try {
        for (const auto& v : j.at("vectors")) r.vectors.push_back(vector_from_json<FComplex>(v));
        r.objective = j.at("objective").get<double>();
        r.smoothed_objective = j.at("smoothed_objective").get<double>();
        r.converged = j.at("converged").get<bool>();
        r.restart_index = j.at("restart_index").get<int>();
        r.iterations = j.at("iterations").get<int>();
        r.restarts_run = j.at("restarts_run").get<int>();
        for (const auto& e : j.at("faithfulness")) r.faithfulness.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        if (j.contains("genericity")) {
            const auto& g = j["genericity"];
            r.genericity = GenericityDiagnostics{g.at("subsets").get<std::int64_t>(),
                                                 g.at("rank_deficient").get<std::int64_t>(),
                                                 g.at("below_threshold").get<std::int64_t>(),
                                                 g.at("min_ratio").get<double>(),
                                                 g.at("penalty").get<double>()};
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("orthrep result: ") + e.what());
    }
    return r;
}

json search_report_to_json(const SearchReport& r, bool include_timing) {
    json records = json::array();
    for (const auto& rec : r.records) {
        json graphs = json::array();
        for (const auto& g : rec.graphs) {
            json faithfulness = json::array();
            for (const auto& [i, j] : g.faithfulness) faithfulness.push_back({i, j});
            graphs.push_back({{"valid", g.valid},
                              {"converged", g.converged},
                              {"faithful", g.faithful},
                              {"objective", g.objective},
                              {"smoothed_objective", g.smoothed_objective},
                              {"restart_index", g.restart_index},
                              {"restarts_run", g.restarts_run},
                              {"seed", g.seed},
                              {"faithfulness", faithfulness}});
        }
        json entry = {{"label", rec.label},
                      {"decomposition_valid", rec.decomposition_valid},
                      {"graphs", graphs},
                      {"solved", rec.solved},
                      {"prop7", rec.prop7 ? prop7_to_json(*rec.prop7) : json(nullptr)},
                      {"numerical_candidate", rec.numerical_candidate},
                      {"gupb_found", rec.gupb_found}};
        if (rec.partition) {
            json blocks = json::array();
            for (const auto& b : rec.partition->blocks) blocks.push_back({b[0], b[1]});
            entry["partition"] = blocks;
        }
        if (!rec.error.empty()) entry["error"] = rec.error;
        if (include_timing) entry["elapsed_ms"] = rec.elapsed_ms;
        records.push_back(std::move(entry));
    }
    json best = json::array();
    for (double b : r.best_objective) best.push_back(std::isfinite(b) ? json(b) : json(nullptr));
    return {{"source", r.source},
            {"solver", solver_config_to_json(r.solver)},
            {"decompositions", r.records.size()},
            {"records", records},
            {"summary", {{"solved_histogram", r.solved_histogram},
                         {"best_objective", best},
                         {"gupb_found", r.gupb_found},
                         {"gupb_size_window", SearchReport::kSizeWindow}}}};
}

UpbRecipe recipe_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("k") || !j.contains("graphs")) {
        throw FormatError("recipe must have \"dims\", \"k\" and \"graphs\"");
    }
    UpbRecipe r;
    try {
        r.dims = j["dims"].get<std::vector<int>>();
        r.k = j["k"].get<int>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("recipe: ") + e.what());
    }
    if (!j["graphs"].is_array()) throw FormatError("recipe \"graphs\" must be an array");
    for (const auto& g : j["graphs"]) r.graphs.push_back(graph_from_json(g));
    if (j.contains("configs")) {
        if (!j["configs"].is_array()) throw FormatError("recipe \"configs\" must be an array");
        for (const auto& c : j["configs"]) r.configs.push_back(solver_config_from_json(c));
    }
    return r;
}

json recipe_to_json(const UpbRecipe& r) {
    json graphs = json::array();
    for (const auto& g : r.graphs) graphs.push_back(graph_to_json(g));
    json out = {{"dims", r.dims}, {"k", r.k}, {"graphs", graphs}};
    if (!r.configs.empty()) {
        json configs = json::array();
        for (const auto& c : r.configs) configs.push_back(solver_config_to_json(c));
        out["configs"] = configs;
    }
    return out;
}

json construct_to_json(const ConstructResult& r) {
    json solves = json::array();
    for (const auto& s : r.solves) solves.push_back(orthrep_to_json(s));
    json out = {{"solves", solves},
                {"rationalized", r.rationalized},
                {"all_converged", r.all_converged},
                {"is_upb", r.upb.has_value()},
                {"diagnostics", r.diagnostics}};
    if (r.assembled) out["assembled"] = std::visit([](const auto& s) { return set_to_json(s); }, *r.assembled);
    if (r.verdict) out["verdict"] = std::visit([](const auto& v) { return verdict_to_json(v); }, *r.verdict);
    if (r.upb) out["upb"] = std::visit([](const auto& s) { return set_to_json(s); }, *r.upb);
    return out;
}

template json vector_to_json<QComplex>(const ExactVector&);
template json vector_to_json<FComplex>(const FloatVector&);
template ExactVector vector_from_json<QComplex>(const json&);
template FloatVector vector_from_json<FComplex>(const json&);
template json set_to_json<QComplex>(const ExactSet&);
template json set_to_json<FComplex>(const FloatSet&);
template json verdict_to_json<QComplex>(const UpbVerdict<QComplex>&);
template json verdict_to_json<FComplex>(const UpbVerdict<FComplex>&);
template json gupb_to_json<QComplex>(const GupbVerdict<QComplex>&);
template json gupb_to_json<FComplex>(const GupbVerdict<FComplex>&);

}  // namespace upbforge
