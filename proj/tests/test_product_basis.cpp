#include <doctest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "upbforge/product_basis.hpp"

using namespace upbforge;

namespace {

ExactVector ev(std::initializer_list<QComplex> xs) { return ExactVector(xs); }

Graph graph(int k, std::vector<Edge> edges) { return Graph(k, edges); }

// |0,1,+>, |1,+,0>, |+,0,1>, |-,-,->
ExactSet shifts() {
    const auto z = ev({1, 0}), o = ev({0, 1}), p = ev({1, 1}), m = ev({1, -1});
    return ExactSet({2, 2, 2}, {{z, o, p}, {o, p, z}, {p, z, o}, {m, m, m}});
}

ExactSet without_state(const ExactSet& s, int drop) {
    std::vector<ProductState<QComplex>> states;
    for (int i = 1; i <= s.size(); ++i) {
        if (i != drop) states.push_back(s.states()[static_cast<std::size_t>(i - 1)]);
    }
    return ExactSet(s.dims(), states);
}

}  // namespace

TEST_CASE("set construction validates shapes") {
    CHECK_THROWS_AS(ExactSet({2}, {{ev({1, 0})}}), std::invalid_argument);
    CHECK_THROWS_AS(ExactSet({2, 2}, {{ev({1, 0})}}), std::invalid_argument);
    CHECK_THROWS_AS(ExactSet({2, 2}, {{ev({1, 0}), ev({1, 0, 0})}}), std::invalid_argument);
    CHECK_THROWS_AS(ExactSet({2, 2}, {{ev({1, 0}), ev({0, 0})}}), std::invalid_argument);
    CHECK_THROWS_AS(ExactSet({2, 2}, {}), std::invalid_argument);
    const ExactSet s = example_upb(1);
    CHECK(s.total_dim() == 24);
    CHECK(s.local(4, 4) == ev({1, 1, 1}));
    CHECK(s.full_state(1).dim() == 24);
    CHECK_THROWS(example_upb(3));
}

TEST_CASE("orthogonality graphs of the first example") {
    const ExactSet s = example_upb(1);
    const auto gs = orthogonality_graphs(s);
    REQUIRE(gs.size() == 4);
    CHECK(gs[0] == graph(6, {{1, 4}, {2, 5}, {3, 6}}));
    CHECK(gs[1] == graph(6, {{1, 5}, {2, 6}, {3, 4}}));
    CHECK(gs[2] == graph(6, {{1, 6}, {2, 4}, {3, 5}}));
    CHECK(gs[3] == graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}));
    for (int m = 0; m < 3; ++m) CHECK(gs[static_cast<std::size_t>(m)].is_regular(1));
    CHECK(gs[3].is_regular(2));
    CHECK(graph_union(std::span<const Graph>(gs)) == complete_graph(6));
    CHECK(mutual_orthogonality(s));
}

TEST_CASE("maximal unsaturated sets of the first example") {
    const ExactSet s = example_upb(1);
    for (int m = 1; m <= 3; ++m) {
        const auto sets = maximal_unsaturated_sets(s, m);
        CHECK(sets.size() == 6);
        for (const auto& w : sets) {
            CHECK(popcount(w.members) == 1);
            for (int i = 1; i <= 6; ++i) {
                CHECK(((w.members & vertex_bit(i)) != 0) == is_orthogonal(w.normal, s.local(i, m)));
            }
        }
    }
    const auto sets4 = maximal_unsaturated_sets(s, 4);
    CHECK(sets4.size() == 15);
    for (const auto& w : sets4) CHECK(popcount(w.members) == 2);
    CHECK(unsaturated_size_bound(s.dims(), 6, 1) == 1);
    CHECK(unsaturated_size_bound(s.dims(), 6, 4) == 2);
}

TEST_CASE("degree bounds are tight on the first example") {
    const auto r = degree_bounds_check(example_upb(1));
    CHECK(r.violations.empty());
    CHECK(r.tight);
    CHECK(r.lower == std::vector<int>{1, 1, 1, 2});
    CHECK(r.upper == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("both examples are UPBs in exact and floating mode") {
    for (int which : {1, 2}) {
        const ExactSet s = example_upb(which);
        const auto v = is_upb(s);
        CHECK(v.is_upb);
        CHECK_FALSE(v.numerical);
        CHECK(v.failure == UpbFailure::none);
        CHECK_FALSE(v.witness.has_value());
        const auto f = is_upb(to_float(s));
        CHECK(f.is_upb);
        CHECK(f.numerical);
    }
    const auto gs = orthogonality_graphs(example_upb(2));
    CHECK(graph_union(std::span<const Graph>(gs)) == complete_graph(8));
}

TEST_CASE("known small UPB and its extendible subsets") {
    CHECK(is_upb(shifts()).is_upb);
    for (int drop = 1; drop <= 4; ++drop) {
        const ExactSet sub = without_state(shifts(), drop);
        const auto v = is_upb(sub);
        CHECK_FALSE(v.is_upb);
        REQUIRE(v.witness.has_value());
        CHECK(witness_is_orthogonal(sub, *v.witness));
        CHECK(oracle::witness_orthogonal(sub, [&] {
            std::vector<oracle::Vec> w;
            for (const auto& x : *v.witness) w.push_back(oracle::from_lib(x));
            return w;
        }()));
    }
}

TEST_CASE("dropping a state from the first example leaves it extendible") {
    const ExactSet sub = without_state(example_upb(1), 6);
    const auto v = is_upb(sub);
    CHECK_FALSE(v.is_upb);
    CHECK(v.failure == UpbFailure::cover_found);
    REQUIRE(v.witness.has_value());
    CHECK(witness_is_orthogonal(sub, *v.witness));
    VertexMask covered = 0;
    for (auto m : v.cover) covered |= m;
    CHECK(covered == all_vertices(5));
}

TEST_CASE("perturbing one amplitude breaks the first example") {
    auto states = example_upb(1).states();
    states[3][0] = ev({1, 1});  // (0,1) -> (1,1) on state 4, party 1
    const ExactSet s({2, 2, 2, 3}, states);
    const auto v = is_upb(s);
    CHECK_FALSE(v.is_upb);
    CHECK(v.failure == UpbFailure::not_mutually_orthogonal);
    REQUIRE(v.non_orthogonal_pair.has_value());
    CHECK(*v.non_orthogonal_pair == Edge{1, 4});
    CHECK_FALSE(oracle::brute_force(s).orthogonal);
}

TEST_CASE("failure modes") {
    // Every party-1 vector is |0>: |1> at party 1 extends the set.
    const ExactSet flat({2, 2}, {{ev({1, 0}), ev({1, 0})}, {ev({1, 0}), ev({0, 1})}});
    const auto v = is_upb(flat);
    CHECK(v.failure == UpbFailure::trivially_extendible);
    CHECK(v.deficient_party == 1);
    REQUIRE(v.witness.has_value());
    CHECK(witness_is_orthogonal(flat, *v.witness));
    CHECK_THROWS_AS(maximal_unsaturated_sets(flat, 1), TriviallyExtendible);

    // A full product basis spans the space.
    const auto z = ev({1, 0}), o = ev({0, 1});
    const ExactSet basis({2, 2}, {{z, z}, {z, o}, {o, z}, {o, o}});
    const auto b = is_upb(basis);
    CHECK_FALSE(b.is_upb);
    CHECK(b.failure == UpbFailure::spans_full_space);
}

TEST_CASE("bipartitions and grouping") {
    const auto bps = enumerate_bipartitions(4);
    REQUIRE(bps.size() == 7);
    CHECK(to_string(bps.front()) == "A1|A2A3A4");
    CHECK(enumerate_bipartitions(3).size() == 3);
    CHECK(enumerate_bipartitions(2).size() == 1);
    for (const auto& bp : bps) CHECK(bp.side1.front() == 1);

    const ExactSet s = example_upb(1);
    const ExactSet g = group(s, bps.front());
    CHECK(g.dims() == std::vector<int>{2, 12});
    CHECK(g.parties() == 2);
    for (int i = 1; i <= s.size(); ++i) CHECK(g.local(i, 1) == s.local(i, 1));
    CHECK_THROWS(group(s, Bipartition{{1, 2}, {2, 3, 4}}));
    CHECK_THROWS(group(s, Bipartition{{1}, {2, 3}}));
}

TEST_CASE("the first example is not a GUPB") {
    const ExactSet s = example_upb(1);
    const auto v = is_gupb(s);
    CHECK_FALSE(v.is_gupb);
    REQUIRE(v.first_failure.has_value());
    const auto& r = v.results[*v.first_failure];
    CHECK(to_string(r.bipartition) == "A1|A2A3A4");
    REQUIRE(r.verdict.witness.has_value());
    CHECK(witness_is_orthogonal(group(s, r.bipartition), *r.verdict.witness));
    CHECK(v.results.size() == 7);
}

TEST_CASE("minimal GUPB regularity targets") {
    const auto rs = check_minimal_gupb_regularity(example_upb(1));
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].target_degree == 6 - 12);
    CHECK(rs[3].target_degree == 6 - 8);
    for (const auto& r : rs) CHECK_FALSE(r.regular);
}

TEST_CASE("13-state qutrit condition checks reject other shapes") {
    CHECK_THROWS_AS(check_prop7(example_upb(1)), std::invalid_argument);
}

TEST_CASE("spanning conditions on random qutrit triples") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> amp(-9, 9);
    std::vector<ProductState<QComplex>> states;
    for (int i = 0; i < 13; ++i) {
        ProductState<QComplex> st;
        for (int m = 0; m < 3; ++m) st.push_back(ev({amp(rng), amp(rng), amp(rng)}));
        states.push_back(st);
    }
    const auto r = check_prop7(ExactSet({3, 3, 3}, states));
    CHECK_FALSE(r.condition1);
    CHECK_FALSE(r.union_complete);
    CHECK(r.five_subsets_per_party == 1287);
    CHECK(r.nine_subsets_per_pair == 715);
    CHECK(r.condition2);
    CHECK(r.condition3);

    // Five party-1 vectors in the plane z = 0 make one 5-subset deficient.
    for (int i = 0; i < 5; ++i) states[static_cast<std::size_t>(i)][0][2] = QComplex(0);
    const auto d = check_prop7(ExactSet({3, 3, 3}, states));
    CHECK_FALSE(d.condition2);
    std::int64_t expected = 0;
    for (VertexMask m = 0; m < all_vertices(13) + 1; ++m) {
        if (popcount(m) != 5) continue;
        std::vector<oracle::Vec> rows;
        for (int v : mask_to_vertices(m)) rows.push_back(oracle::from_lib(states[static_cast<std::size_t>(v - 1)][0]));
        expected += oracle::rank(rows, 3) < 3;
    }
    CHECK(expected >= 1);
    CHECK(d.rank_deficient_five_subsets[0] == expected);
    CHECK(d.rank_deficient_five_subsets[1] == 0);
    REQUIRE(d.first_bad_five_subset[0].has_value());
    CHECK(*d.first_bad_five_subset[0] == all_vertices(5));
}
