#pragma once

// End-to-end drivers: the 13-state GUPB search in C^3 x C^3 x C^3 over
// decompositions of K_13 into three 4-regular graphs, and the generic
// decomposition -> representation -> verification route for UPBs.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "upbforge/graph.hpp"
#include "upbforge/orthrep.hpp"
#include "upbforge/product_basis.hpp"

namespace upbforge {

/// A triple of graphs to try, with a label for reporting.
struct DecompositionInput {
    std::string label;
    std::optional<PairPartition> partition;  // set for Cayley decompositions
    std::array<Graph, 3> graphs;
};

/// "cayley" -> the 15 Cayley decompositions of K_13.
/// "dir:<path>" -> every *.json file in <path> (sorted by name), each holding
/// either [g1, g2, g3] or {"graphs": [g1, g2, g3]}.
/// Throws std::invalid_argument on an unknown source, FormatError on bad files.
std::vector<DecompositionInput> load_decompositions(const std::string& source);

struct SearchConfig {
    std::string source = "cayley";
    /// Dimension is forced to 3. Graph g of decomposition r is solved with
    /// seed = solver.seed + kSeedStride * (3 r + g).
    SolverConfig solver;
    static constexpr std::uint64_t kSeedStride = 1'000'003;
};

struct GraphOutcome {
    bool valid = false;  // 4-regular on 13 vertices
    bool converged = false;
    bool faithful = false;
    double objective = 0.0;
    double smoothed_objective = 0.0;
    int restart_index = -1;
    int restarts_run = 0;
    std::vector<Edge> faithfulness;
    std::uint64_t seed = 0;
};

struct DecompositionRecord {
    std::string label;
    std::optional<PairPartition> partition;
    std::array<GraphOutcome, 3> graphs;
    /// Every triple must be edge-disjoint 4-regular graphs with union K_13.
    bool decomposition_valid = false;
    std::string error;
    int solved = 0;
    std::optional<Prop7Report> prop7;
    /// Floating is_gupb on the assembled vectors passed (not a proof).
    bool numerical_candidate = false;
    /// Only true when is_gupb passed on exact (rationalized) vectors.
    bool gupb_found = false;
    double elapsed_ms = 0.0;
};

struct SearchReport {
    std::string source;
    SolverConfig solver;
    std::vector<DecompositionRecord> records;
    /// Histogram: decompositions with exactly s graphs solved, s = 0..3.
    std::array<int, 4> solved_histogram{};
    /// Smallest objective reached for graph slot 1, 2, 3 over all records.
    std::array<double, 3> best_objective{};
    bool gupb_found = false;
    /// Known size window for a 3x3x3 GUPB. The lower end is the GUPB size
    /// bound; the upper end rests on a PPT-rank argument and is reported,
    /// not checked.
    static constexpr std::array<int, 2> kSizeWindow{13, 23};
};

SearchReport search_gupb_333(const SearchConfig& config);

struct UpbRecipe {
    std::vector<int> dims;
    int k = 0;
    /// One graph per party, on k vertices.
    std::vector<Graph> graphs;
    /// Per party; empty means defaults. The dimension is always overwritten
    /// with the party's local dimension.
    std::vector<SolverConfig> configs;
};

struct ConstructResult {
    std::vector<OrthRepResult> solves;
    /// Per party: the float solution rounded to exact rationals that keep
    /// every required orthogonality.
    std::vector<bool> rationalized;
    bool all_converged = false;
    /// Exact when every party rationalized, floating otherwise.
    std::optional<AnySet> assembled;
    std::optional<std::variant<UpbVerdict<QComplex>, UpbVerdict<FComplex>>> verdict;
    /// The assembled set, present only when is_upb passed.
    std::optional<AnySet> upb;
    std::string diagnostics;
};

/// Throws std::invalid_argument if the graphs do not union to K_k or
/// shapes disagree. Solver non-convergence is reported, not thrown.
ConstructResult construct_upb(const UpbRecipe& recipe);

/// vectors[m][i] is the local vector of state i+1 at party m+1.
template <Scalar T>
UpbVerdict<T> recompute_and_verify(const std::vector<std::vector<Vector<T>>>& vectors,
                                   const std::vector<int>& dims);

}  // namespace upbforge
