#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "upbforge/orthrep.hpp"
#include "upbforge/product_basis.hpp"

using namespace upbforge;

namespace {

Graph two_triangles() {
    const std::vector<Edge> e = {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}};
    return Graph(6, e);
}

SolverConfig config(int dim, int restarts, std::uint64_t seed) {
    SolverConfig c;
    c.dimension = dim;
    c.restarts = restarts;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("config validation") {
    SolverConfig c;
    c.dimension = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = SolverConfig{};
    c.restarts = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = SolverConfig{};
    c.objective_tolerance = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("two triangles have a representation in C^3") {
    const Graph g = two_triangles();
    const auto r = solve(g, config(3, 100, 7));
    CHECK(r.converged);
    CHECK(r.smoothed_objective <= 1e-10);
    CHECK(r.objective <= 1e-10);
    CHECK(r.vectors.size() == 6);
    for (const auto& v : r.vectors) CHECK(v[0] == FComplex(1.0, 0.0));
    CHECK(r.faithfulness.empty());
    CHECK(r.restarts_run == r.restart_index + 1);
    CHECK(edge_objective(std::span<const FloatVector>(r.vectors), g) == doctest::Approx(r.objective));
}

TEST_CASE("K_4 has no representation in C^3") {
    const auto r = solve(complete_graph(4), config(3, 20, 1));
    CHECK_FALSE(r.converged);
    CHECK(r.restarts_run == 20);
    CHECK(r.objective > 1e-3);
}

TEST_CASE("matchings solve in C^2") {
    const std::vector<Edge> e = {{1, 4}, {2, 5}, {3, 6}};
    const auto r = solve(Graph(6, e), config(2, 10, 3));
    CHECK(r.converged);
}

TEST_CASE("solutions are reproducible across seeds and thread counts") {
    const Graph g = cayley_z13(1, 5);
    SolverConfig c = config(3, 6, 11);
    c.max_iterations = 300;
    const auto a = solve(g, c);
    const auto b = solve(g, c);
    CHECK(a.vectors == b.vectors);
    CHECK(a.objective == b.objective);
    ::setenv("UPBFORGE_THREADS", "3", 1);
    const auto t = solve(g, c);
    ::unsetenv("UPBFORGE_THREADS");
    CHECK(t.vectors == a.vectors);
    CHECK(t.restart_index == a.restart_index);
    CHECK(t.restarts_run == a.restarts_run);
    c.seed = 1000;  // seeds 11 + r and 12 + r share streams, so jump far
    CHECK_FALSE(solve(g, c).vectors == a.vectors);
}

TEST_CASE("exact objective and faithfulness") {
    const ExactSet s = example_upb(1);
    const auto party4 = s.party_vectors(4);
    const Graph g4 = orthogonality_graph(s, 4);
    CHECK(edge_objective(std::span<const ExactVector>(party4), g4) == 0.0);
    CHECK(faithfulness_report(std::span<const ExactVector>(party4), g4).empty());
    // Dropping an edge from the graph turns it into a reported non-edge.
    const std::vector<Edge> fewer = {{1, 2}, {1, 3}, {4, 5}, {4, 6}, {5, 6}};
    const auto unfaithful = faithfulness_report(std::span<const ExactVector>(party4), Graph(6, fewer));
    CHECK(unfaithful == std::vector<Edge>{{2, 3}});
}

TEST_CASE("rationalize keeps exact orthogonality") {
    const ExactSet s = example_upb(1);
    const Graph g4 = orthogonality_graph(s, 4);
    std::vector<FloatVector> fv;
    for (const auto& v : s.party_vectors(4)) fv.push_back(to_float(v));
    const auto exact = rationalize(std::span<const FloatVector>(fv), g4);
    REQUIRE(exact.has_value());
    CHECK(*exact == s.party_vectors(4));

    fv[0][1] += FComplex(1e-3, 0.0);
    CHECK_FALSE(rationalize(std::span<const FloatVector>(fv), g4).has_value());
}

TEST_CASE("genericity penalty") {
    SolverConfig c = config(2, 2, 0);
    c.genericity_penalty_weight = 1.0;
    CHECK_THROWS_AS(solve_with_genericity(two_triangles(), c), std::invalid_argument);
    c.dimension = 3;
    CHECK_THROWS_AS(solve_with_genericity(complete_graph(4), c), std::invalid_argument);

    // Five coplanar vectors: one deficient 5-subset with ratio zero.
    std::vector<FloatVector> vs = {FloatVector({1.0, 0.0, 0.0}), FloatVector({0.0, 1.0, 0.0}),
                                   FloatVector({1.0, 1.0, 0.0}), FloatVector({1.0, -1.0, 0.0}),
                                   FloatVector({1.0, 2.0, 0.0})};
    const auto d = genericity_diagnostics(std::span<const FloatVector>(vs), 2.0, 0.1);
    CHECK(d.subsets == 1);
    CHECK(d.rank_deficient == 1);
    CHECK(d.below_threshold == 1);
    CHECK(d.min_ratio == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.penalty == doctest::Approx(2.0 * 0.1 * 0.1));
    CHECK(genericity_penalty(std::span<const FloatVector>(vs), 2.0, 0.1) == doctest::Approx(d.penalty));
    vs[4] = FloatVector({0.0, 0.0, 1.0});
    const auto ok = genericity_diagnostics(std::span<const FloatVector>(vs), 2.0, 0.1);
    CHECK(ok.rank_deficient == 0);

    // Penalized solve on the two triangles keeps converging; orthonormal
    // triangles are as generic as 3-subsets allow.
    SolverConfig pc = config(3, 20, 5);
    pc.genericity_penalty_weight = 1.0;
    const auto r = solve_with_genericity(two_triangles(), pc);
    REQUIRE(r.genericity.has_value());
    CHECK(r.genericity->subsets == 6);
    CHECK(r.objective <= 1e-10);
    CHECK_FALSE(solve(two_triangles(), pc).genericity.has_value());
}
