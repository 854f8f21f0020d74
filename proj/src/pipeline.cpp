#include "upbforge/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "upbforge/json_io.hpp"
#include "upbforge/parallel.hpp"

namespace upbforge {

namespace {

constexpr int kSearchVertices = 13;
constexpr int kSearchDegree = 4;
constexpr int kSearchDim = 3;

std::array<Graph, 3> triple_from_json(const json& j) {
    const json& arr = j.is_object() && j.contains("graphs") ? j["graphs"] : j;
    if (!arr.is_array() || arr.size() != 3) throw FormatError("decomposition must hold exactly three graphs");
    return {graph_from_json(arr[0]), graph_from_json(arr[1]), graph_from_json(arr[2])};
}

// Assembles states (phi^1_i, ..., phi^N_i) from per-party vector lists.
template <Scalar T>
ProductStateSet<T> assemble(const std::vector<std::vector<Vector<T>>>& vectors, const std::vector<int>& dims) {
    if (vectors.size() != dims.size()) throw std::invalid_argument("one vector list per party required");
    const std::size_t k = vectors.empty() ? 0 : vectors.front().size();
    for (const auto& party : vectors) {
        if (party.size() != k) throw std::invalid_argument("every party needs the same number of vectors");
    }
    std::vector<ProductState<T>> states(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& party : vectors) states[i].push_back(party[i]);
    }
    return ProductStateSet<T>(dims, std::move(states));
}

DecompositionRecord run_decomposition(const DecompositionInput& input, std::size_t index,
                                      const SearchConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    DecompositionRecord rec;
    rec.label = input.label;
    rec.partition = input.partition;

    bool shapes_ok = true;
    for (std::size_t g = 0; g < 3; ++g) {
        const Graph& graph = input.graphs[g];
        rec.graphs[g].valid = graph.vertex_count() == kSearchVertices && graph.is_regular(kSearchDegree);
        shapes_ok = shapes_ok && rec.graphs[g].valid;
    }
    if (!shapes_ok) {
        rec.error = "every graph must be 4-regular on 13 vertices";
    } else if (!edge_disjoint(std::span<const Graph>(input.graphs)) ||
               !(graph_union(std::span<const Graph>(input.graphs)) == complete_graph(kSearchVertices))) {
        rec.error = "graphs must be edge-disjoint with union K_13";
    } else {
        rec.decomposition_valid = true;
    }

    if (rec.decomposition_valid) {
        std::array<OrthRepResult, 3> solves;
        for (std::size_t g = 0; g < 3; ++g) {
            SolverConfig cfg = config.solver;
            cfg.dimension = kSearchDim;
            cfg.seed = config.solver.seed + SearchConfig::kSeedStride * (3 * index + g);
            solves[g] = solve(input.graphs[g], cfg);
            auto& out = rec.graphs[g];
            out.seed = cfg.seed;
            out.converged = solves[g].converged;
            out.faithfulness = solves[g].faithfulness;
            out.faithful = out.faithfulness.empty();
            out.objective = solves[g].objective;
            out.smoothed_objective = solves[g].smoothed_objective;
            out.restart_index = solves[g].restart_index;
            out.restarts_run = solves[g].restarts_run;
            if (out.converged) ++rec.solved;
        }

        if (rec.solved == 3) {
            const std::vector<int> dims(3, kSearchDim);
            std::vector<std::vector<FloatVector>> vectors;
            for (const auto& s : solves) vectors.push_back(s.vectors);
            const FloatSet set = assemble(vectors, dims);
            rec.prop7 = check_prop7(set);

            const bool all_faithful = std::all_of(rec.graphs.begin(), rec.graphs.end(),
                                                  [](const GraphOutcome& o) { return o.faithful; });
            if (all_faithful && !rec.prop7->condition1) {
                throw std::logic_error("faithful converged triple of " + rec.label +
                                       " fails the regularity/completeness condition");
            }

            if (rec.prop7->all()) {
                std::vector<std::vector<ExactVector>> exact;
                for (std::size_t g = 0; g < 3; ++g) {
                    auto r = rationalize(std::span<const FloatVector>(solves[g].vectors), input.graphs[g]);
                    if (!r) break;
                    exact.push_back(std::move(*r));
                }
                if (exact.size() == 3) {
                    rec.gupb_found = is_gupb(assemble(exact, dims)).is_gupb;
                    rec.numerical_candidate = rec.gupb_found;
                } else {
                    rec.numerical_candidate = is_gupb(set).is_gupb;
                }
            }
        }
    }

    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

}  // namespace

std::vector<DecompositionInput> load_decompositions(const std::string& source) {
    std::vector<DecompositionInput> out;
    if (source == "cayley") {
        for (const auto& d : enumerate_k13_decompositions()) {
            out.push_back({to_string(d.partition), d.partition, d.graphs});
        }
        return out;
    }
    if (source.rfind("dir:", 0) == 0) {
        const std::filesystem::path dir = source.substr(4);
        if (!std::filesystem::is_directory(dir)) throw FormatError("not a directory: " + dir.string());
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            try {
                out.push_back({f.filename().string(), std::nullopt, triple_from_json(load_json_file(f))});
            } catch (const FormatError& e) {
                throw FormatError(f.string() + ": " + e.what());
            }
        }
        return out;
    }
    throw std::invalid_argument("unknown decomposition source '" + source + "' (use cayley or dir:<path>)");
}

SearchReport search_gupb_333(const SearchConfig& config) {
    SolverConfig solver = config.solver;
    solver.dimension = kSearchDim;
    solver.validate();
    const auto inputs = load_decompositions(config.source);

    SearchReport report;
    report.source = config.source;
    report.solver = solver;
    report.records.resize(inputs.size());
    SearchConfig effective = config;
    effective.solver = solver;
    parallel_for(inputs.size(), [&](std::size_t i) {
        report.records[i] = run_decomposition(inputs[i], i, effective);
    });

    report.best_objective.fill(std::numeric_limits<double>::infinity());
    for (const auto& rec : report.records) {
        ++report.solved_histogram[static_cast<std::size_t>(rec.solved)];
        if (rec.decomposition_valid) {
            for (std::size_t g = 0; g < 3; ++g) {
                report.best_objective[g] = std::min(report.best_objective[g], rec.graphs[g].objective);
            }
        }
        report.gupb_found = report.gupb_found || rec.gupb_found;
    }
    return report;
}

ConstructResult construct_upb(const UpbRecipe& recipe) {
    const std::size_t n = recipe.dims.size();
    if (n < 2) throw std::invalid_argument("recipe needs at least two parties");
    if (recipe.graphs.size() != n) throw std::invalid_argument("recipe needs one graph per party");
    if (!recipe.configs.empty() && recipe.configs.size() != n) {
        throw std::invalid_argument("recipe solver configs must be empty or one per party");
    }
    if (recipe.k < 1 || recipe.k > kMaxVertices) throw std::invalid_argument("recipe k must lie in [1, 64]");
    for (const auto& g : recipe.graphs) {
        if (g.vertex_count() != recipe.k) throw std::invalid_argument("every recipe graph must have k vertices");
    }
    if (!(graph_union(std::span<const Graph>(recipe.graphs)) == complete_graph(recipe.k))) {
        throw std::invalid_argument("union-not-complete: recipe graphs do not cover every pair of states");
    }

    ConstructResult res;
    res.all_converged = true;
    std::ostringstream diag;
    for (std::size_t m = 0; m < n; ++m) {
        SolverConfig cfg = recipe.configs.empty() ? SolverConfig{} : recipe.configs[m];
        if (recipe.configs.empty()) cfg.seed = m;
        cfg.dimension = recipe.dims[m];
        res.solves.push_back(solve(recipe.graphs[m], cfg));
        const auto& s = res.solves.back();
        if (!s.converged) {
            res.all_converged = false;
            diag << "party " << m + 1 << ": solver did not converge (objective " << s.objective << "); ";
        }
    }

    if (!res.all_converged) {
        res.rationalized.assign(n, false);
        res.diagnostics = diag.str();
        return res;
    }

    std::vector<std::vector<ExactVector>> exact;
    for (std::size_t m = 0; m < n; ++m) {
        auto r = rationalize(std::span<const FloatVector>(res.solves[m].vectors), recipe.graphs[m]);
        res.rationalized.push_back(r.has_value());
        if (r) exact.push_back(std::move(*r));
    }

    auto finish = [&](auto set) {
        auto verdict = is_upb(set);
        const bool ok = verdict.is_upb;
        if (!ok) diag << "assembled set is not a UPB: " << to_string(verdict.failure) << "; ";
        res.assembled = set;
        res.verdict = std::move(verdict);
        if (ok) res.upb = std::move(set);
    };
    if (exact.size() == n) {
        finish(assemble(exact, recipe.dims));
    } else {
        std::vector<std::vector<FloatVector>> vectors;
        for (const auto& s : res.solves) vectors.push_back(s.vectors);
        finish(assemble(vectors, recipe.dims));
    }
    res.diagnostics = diag.str();
    return res;
}

template <Scalar T>
UpbVerdict<T> recompute_and_verify(const std::vector<std::vector<Vector<T>>>& vectors,
                                   const std::vector<int>& dims) {
    return is_upb(assemble(vectors, dims));
}

template UpbVerdict<QComplex> recompute_and_verify<QComplex>(const std::vector<std::vector<ExactVector>>&,
                                                             const std::vector<int>&);
template UpbVerdict<FComplex> recompute_and_verify<FComplex>(const std::vector<std::vector<FloatVector>>&,
                                                             const std::vector<int>&);

}  // namespace upbforge
