#pragma once

// Numerical search for orthogonal representations of a graph: vectors
// phi_1..phi_k in C^d with <phi_i|phi_j> = 0 on every edge. Each vector has
// its first component pinned to 1, which keeps it nonzero and fixes its
// scale and phase, so vertex i owns 2(d-1) real unknowns. Vectors with a
// vanishing first component are only reachable as limits.
//
// Minimization runs on the smooth surrogate sum_E |<phi_i|phi_j>|^2 (same
// zero set as sum_E |<phi_i|phi_j>|) with a damped Gauss-Newton
// (Levenberg-Marquardt) iteration that only accepts decreasing steps.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "upbforge/graph.hpp"
#include "upbforge/linalg.hpp"

namespace upbforge {

struct StepParams {
    /// Initial damping relative to the largest diagonal entry of J^T J.
    double initial_damping = 1e-3;
    /// A restart stops once the gradient infinity norm falls below this.
    double gradient_tolerance = 1e-15;
    /// ... or once the accepted step is this small relative to |x|.
    double step_tolerance = 1e-15;
    /// ... or once the damping exceeds this.
    double max_damping = 1e16;
};

struct SolverConfig {
    int dimension = 3;
    int restarts = 100;
    int max_iterations = 2000;
    /// Convergence threshold on the absolute-value edge objective.
    double objective_tolerance = 1e-10;
    std::uint64_t seed = 0;
    StepParams step;
    /// Experimental. When > 0 (requires dimension 3), adds for every 5-subset
    /// S of vertices the squared hinge
    ///     weight * max(0, threshold - 3 * lambda_min(G_S) / tr(G_S))^2
    /// where G_S is the 3x3 Gram matrix sum_{i in S} conj(phi_i) phi_i^T.
    /// The ratio lies in [0, 1] and vanishes exactly when S spans < C^3.
    double genericity_penalty_weight = 0.0;
    double genericity_threshold = 0.05;

    void validate() const;
};

struct GenericityDiagnostics {
    std::int64_t subsets = 0;
    std::int64_t rank_deficient = 0;  // floating rank < 3
    std::int64_t below_threshold = 0;
    double min_ratio = 0.0;
    double penalty = 0.0;
};

struct OrthRepResult {
    std::vector<FloatVector> vectors;
    /// sum over edges of |<phi_i|phi_j>|
    double objective = 0.0;
    /// sum over edges of |<phi_i|phi_j>|^2
    double smoothed_objective = 0.0;
    bool converged = false;
    int restart_index = -1;
    int iterations = 0;
    int restarts_run = 0;
    /// Non-edges whose vectors came out orthogonal anyway.
    std::vector<Edge> faithfulness;
    std::optional<GenericityDiagnostics> genericity;
};

OrthRepResult solve(const Graph& g, const SolverConfig& config);

/// Same as solve, with the genericity penalty enabled by the config weight.
/// Throws std::invalid_argument for a positive weight unless dimension == 3
/// and the graph has at least five vertices.
OrthRepResult solve_with_genericity(const Graph& g, const SolverConfig& config);

template <Scalar T>
double edge_objective(std::span<const Vector<T>> vectors, const Graph& g);

double smoothed_objective(std::span<const FloatVector> vectors, const Graph& g);

/// Non-edges (i, j) whose vectors are orthogonal (exactly, or within the
/// normalized floating tolerance).
template <Scalar T>
std::vector<Edge> faithfulness_report(std::span<const Vector<T>> vectors, const Graph& g);

double genericity_penalty(std::span<const FloatVector> vectors, double weight, double threshold);
GenericityDiagnostics genericity_diagnostics(std::span<const FloatVector> vectors, double weight,
                                             double threshold);

/// Rounds every vector to rationals with bounded denominators and keeps the
/// result only if every edge of g is exactly orthogonal afterwards.
std::optional<std::vector<ExactVector>> rationalize(std::span<const FloatVector> vectors,
                                                    const Graph& g, long max_denominator = 1000);

}  // namespace upbforge
