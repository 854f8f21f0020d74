// upbforge: command-line front end for UPB/GUPB verification, bounds,
// orthogonal-representation solving and the K_13 search.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "upbforge/bounds.hpp"
#include "upbforge/graph.hpp"
#include "upbforge/json_io.hpp"
#include "upbforge/orthrep.hpp"
#include "upbforge/pipeline.hpp"
#include "upbforge/product_basis.hpp"

using namespace upbforge;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <Scalar T>
std::string label() {
    return scalar_traits<T>::mode == Mode::exact ? "exact" : "numerical";
}

template <Scalar T>
std::string witness_string(const ProductState<T>& w) {
    std::string out;
    for (std::size_t m = 0; m < w.size(); ++m) {
        if (m) out += " (x) ";
        out += vector_to_json(w[m]).dump();
    }
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        save_json_file(out_path, j);
    }
}

AnySet read_set(const std::string& path, bool allow_numerical) {
    AnySet set = set_from_json(load_json_file(path));
    if (std::holds_alternative<FloatSet>(set) && !allow_numerical) {
        throw UsageError(path + ": floating-point input needs --allow-numerical");
    }
    if (std::holds_alternative<FloatSet>(set)) {
        std::cerr << "warning: floating-point input; the verdict is numerical and not an exact proof\n";
    }
    return set;
}

template <Scalar T>
int report_upb(const UpbVerdict<T>& v, const ProductStateSet<T>& set, bool as_json) {
    if (as_json) {
        std::cout << verdict_to_json(v).dump(2) << '\n';
        return v.is_upb ? kOk : kNegative;
    }
    std::cout << "UPB: " << (v.is_upb ? "true" : "false") << " (" << label<T>() << ")\n";
    std::cout << "states: " << set.size() << ", parties: " << set.parties() << '\n';
    if (v.is_upb) return kOk;
    std::cout << "reason: " << to_string(v.failure) << '\n';
    if (v.non_orthogonal_pair) {
        std::cout << "non-orthogonal pair: " << v.non_orthogonal_pair->first << ", " << v.non_orthogonal_pair->second
                  << '\n';
    }
    if (v.deficient_party) std::cout << "deficient party: " << *v.deficient_party << '\n';
    if (!v.cover.empty()) {
        std::cout << "cover:";
        for (std::size_t m = 0; m < v.cover.size(); ++m) {
            std::cout << " W" << m + 1 << "=" << mask_to_json(v.cover[m]).dump();
        }
        std::cout << '\n';
    }
    if (v.witness) std::cout << "witness: " << witness_string(*v.witness) << '\n';
    return kNegative;
}

template <Scalar T>
int report_gupb(const GupbVerdict<T>& v, bool as_json) {
    if (as_json) {
        std::cout << gupb_to_json(v).dump(2) << '\n';
        return v.is_gupb ? kOk : kNegative;
    }
    std::cout << "GUPB: " << (v.is_gupb ? "true" : "false") << " (" << label<T>() << ")\n";
    std::cout << "bipartitions checked: " << v.results.size() << '\n';
    if (v.is_gupb) return kOk;
    const auto& r = v.results[*v.first_failure];
    std::cout << "failing bipartition: " << to_string(r.bipartition) << '\n';
    std::cout << "reason: " << to_string(r.verdict.failure) << '\n';
    if (r.verdict.witness) std::cout << "witness: " << witness_string(*r.verdict.witness) << '\n';
    return kNegative;
}

std::vector<int> parse_dims(const std::string& s) {
    std::vector<int> dims;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int d = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            dims.push_back(d);
        } catch (const std::exception&) {
            throw UsageError("malformed --dims entry '" + item + "'");
        }
    }
    return dims;
}

void print_bounds_table(const std::vector<bounds::BoundReport>& reports) {
    std::cout << std::left << std::setw(18) << "dims" << std::setw(14) << "demianowicz" << std::setw(10) << "trivial"
              << std::setw(8) << "new" << std::setw(10) << "improved" << "bennett\n";
    for (const auto& r : reports) {
        std::cout << std::setw(18) << bounds::to_string(r.dims) << std::setw(14) << r.demianowicz << std::setw(10)
                  << r.trivial_gupb << std::setw(8) << r.new_bound << std::setw(10)
                  << (r.improved ? std::to_string(*r.improved) : "-") << r.bennett.effective() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"upbforge: unextendible product basis verification, bounds and construction"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "upbforge 0.1.0");

    bool as_json = false;
    bool allow_numerical = false;
    std::string input;
    std::string out_path;

    auto* verify_upb = app.add_subcommand("verify-upb", "Decide whether a product-state set is a UPB");
    verify_upb->add_option("file", input, "Product-state set JSON")->required()->check(CLI::ExistingFile);
    verify_upb->add_flag("--allow-numerical", allow_numerical, "Accept floating-point input (verdict is numerical)");
    verify_upb->add_flag("--exact", "Exact mode (default; floating input is rejected)");
    verify_upb->add_flag("--json", as_json, "Emit the verdict as JSON");

    auto* verify_gupb = app.add_subcommand("verify-gupb", "Check UPB status across every bipartition");
    verify_gupb->add_option("file", input, "Product-state set JSON")->required()->check(CLI::ExistingFile);
    verify_gupb->add_flag("--allow-numerical", allow_numerical, "Accept floating-point input (verdict is numerical)");
    verify_gupb->add_flag("--exact", "Exact mode (default; floating input is rejected)");
    verify_gupb->add_flag("--json", as_json, "Emit the verdict as JSON");

    std::vector<std::string> dims_args;
    bool table1 = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on UPB and GUPB sizes");
    bounds_cmd->add_option("--dims", dims_args, "Local dimensions, comma separated (repeatable)");
    bounds_cmd->add_flag("--table1", table1, "The six reference dimension vectors");
    bounds_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string graph_path;
    SolverConfig solver;
    double genericity = 0.0;
    auto* orthrep_cmd = app.add_subcommand("orthrep", "Search for an orthogonal representation of a graph");
    orthrep_cmd->add_option("--graph", graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    orthrep_cmd->add_option("--dim", solver.dimension, "Vector dimension")->capture_default_str();
    orthrep_cmd->add_option("--restarts", solver.restarts, "Random restarts")->capture_default_str();
    orthrep_cmd->add_option("--iters", solver.max_iterations, "Iterations per restart")->capture_default_str();
    orthrep_cmd->add_option("--seed", solver.seed, "Base seed; restart r uses seed + r")->capture_default_str();
    orthrep_cmd->add_option("--tol", solver.objective_tolerance, "Edge-objective tolerance")->capture_default_str();
    orthrep_cmd->add_option("--genericity", genericity, "Genericity penalty weight (d = 3 only)")->capture_default_str();
    orthrep_cmd->add_option("--threshold", solver.genericity_threshold, "Genericity hinge threshold")
        ->capture_default_str();
    orthrep_cmd->add_option("--out", out_path, "Write the result here instead of stdout");

    auto* decompose_cmd = app.add_subcommand("decompose-k13", "List the Cayley decompositions of K_13");
    decompose_cmd->add_flag("--json", as_json, "Emit JSON including the graphs");

    SearchConfig search;
    bool no_timing = false;
    auto* search_cmd = app.add_subcommand("search-gupb", "Search for a 13-state GUPB in C^3 x C^3 x C^3");
    search_cmd->add_option("--source", search.source, "cayley or dir:<path>")->capture_default_str();
    search_cmd->add_option("--seed", search.solver.seed, "Base seed")->capture_default_str();
    search_cmd->add_option("--restarts", search.solver.restarts, "Restarts per graph")->capture_default_str();
    search_cmd->add_option("--iters", search.solver.max_iterations, "Iterations per restart")->capture_default_str();
    search_cmd->add_option("--tol", search.solver.objective_tolerance, "Edge-objective tolerance")
        ->capture_default_str();
    search_cmd->add_flag("--no-timing", no_timing, "Omit wall-clock fields so reports compare bit for bit");
    search_cmd->add_option("--out", out_path, "Write the JSON report here");

    std::string recipe_path;
    std::string report_path;
    auto* construct_cmd = app.add_subcommand("construct-upb", "Build a UPB from a graph decomposition");
    construct_cmd->add_option("--recipe", recipe_path, "Recipe JSON")->required()->check(CLI::ExistingFile);
    construct_cmd->add_option("--out", out_path, "Write the verified set here");
    construct_cmd->add_option("--report", report_path, "Write full diagnostics JSON here");

    std::string which = "all";
    bool verify = false;
    auto* examples_cmd = app.add_subcommand("examples", "Print or verify the bundled example UPBs");
    examples_cmd->add_option("--which", which, "1, 2 or all")->check(CLI::IsMember({"1", "2", "all"}))
        ->capture_default_str();
    examples_cmd->add_flag("--verify", verify, "Run the UPB check on each example");
    examples_cmd->add_flag("--json", as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify_upb) {
            const AnySet set = read_set(input, allow_numerical);
            return std::visit([&](const auto& s) { return report_upb(is_upb(s), s, as_json); }, set);
        }
        if (*verify_gupb) {
            const AnySet set = read_set(input, allow_numerical);
            return std::visit([&](const auto& s) { return report_gupb(is_gupb(s), as_json); }, set);
        }
        if (*bounds_cmd) {
            std::vector<bounds::DimensionVector> dvs;
            if (table1) dvs = bounds::table1_dims();
            for (const auto& d : dims_args) dvs.emplace_back(parse_dims(d));
            if (dvs.empty()) throw UsageError("bounds needs --dims or --table1");
            const auto reports = bounds::sweep(dvs);
            if (as_json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(bound_report_to_json(r));
                std::cout << arr.dump(2) << '\n';
            } else {
                print_bounds_table(reports);
            }
            return kOk;
        }
        if (*orthrep_cmd) {
            const Graph g = graph_from_json(load_json_file(graph_path));
            solver.genericity_penalty_weight = genericity;
            const OrthRepResult r = genericity > 0.0 ? solve_with_genericity(g, solver) : solve(g, solver);
            emit(orthrep_to_json(r), out_path);
            if (!out_path.empty()) {
                std::cout << "converged: " << (r.converged ? "true" : "false") << ", objective: " << r.objective
                          << ", restart: " << r.restart_index << ", non-edges orthogonal: " << r.faithfulness.size()
                          << '\n';
            }
            return r.converged ? kOk : kNegative;
        }
        if (*decompose_cmd) {
            const auto decs = enumerate_k13_decompositions();
            if (as_json) {
                json arr = json::array();
                for (const auto& d : decs) {
                    json graphs = json::array();
                    for (const auto& g : d.graphs) graphs.push_back(graph_to_json(g));
                    arr.push_back({{"partition", to_string(d.partition)}, {"graphs", graphs}});
                }
                std::cout << arr.dump(2) << '\n';
            } else {
                std::cout << decs.size() << " decompositions\n";
                for (const auto& d : decs) std::cout << to_string(d.partition) << '\n';
            }
            return kOk;
        }
        if (*search_cmd) {
            const SearchReport report = search_gupb_333(search);
            const json j = search_report_to_json(report, !no_timing);
            if (!out_path.empty()) save_json_file(out_path, j);
            for (const auto& rec : report.records) {
                std::cout << std::left << std::setw(24) << rec.label << " solved " << rec.solved << "/3";
                if (!rec.error.empty()) std::cout << "  error: " << rec.error;
                if (rec.prop7) {
                    std::cout << "  conditions " << rec.prop7->condition1 << rec.prop7->condition2
                              << rec.prop7->condition3;
                }
                if (rec.numerical_candidate) std::cout << "  numerical candidate";
                std::cout << '\n';
            }
            std::cout << "decompositions: " << report.records.size() << ", GUPB found: "
                      << (report.gupb_found ? "true" : "false") << '\n'
                      << "GUPB size window for 3x3x3 (reported only): " << SearchReport::kSizeWindow[0]
                      << " <= k <= " << SearchReport::kSizeWindow[1] << '\n';
            return kOk;
        }
        if (*construct_cmd) {
            const UpbRecipe recipe = recipe_from_json(load_json_file(recipe_path));
            const ConstructResult res = construct_upb(recipe);
            if (!report_path.empty()) save_json_file(report_path, construct_to_json(res));
            for (std::size_t m = 0; m < res.solves.size(); ++m) {
                std::cout << "party " << m + 1 << ": converged " << (res.solves[m].converged ? "true" : "false")
                          << ", objective " << res.solves[m].objective
                          << (m < res.rationalized.size() && res.rationalized[m] ? ", rationalized" : "") << '\n';
            }
            if (!res.diagnostics.empty()) std::cout << "diagnostics: " << res.diagnostics << '\n';
            if (!res.upb) {
                std::cout << "UPB: false\n";
                return kNegative;
            }
            const bool exact = std::holds_alternative<ExactSet>(*res.upb);
            std::cout << "UPB: true (" << (exact ? "exact" : "numerical") << ")\n";
            if (!out_path.empty()) {
                save_json_file(out_path, std::visit([](const auto& s) { return set_to_json(s); }, *res.upb));
            }
            return kOk;
        }
        if (*examples_cmd) {
            std::vector<int> ids = which == "all" ? std::vector<int>{1, 2} : std::vector<int>{std::stoi(which)};
            int code = kOk;
            for (int id : ids) {
                const ExactSet set = example_upb(id);
                if (!verify) {
                    std::cout << set_to_json(set).dump(as_json ? 2 : -1) << '\n';
                    continue;
                }
                if (ids.size() > 1 && !as_json) std::cout << "example " << id << '\n';
                code = std::max(code, report_upb(is_upb(set), set, as_json));
            }
            return code;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
