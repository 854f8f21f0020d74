#include <doctest.h>

#include <filesystem>

#include "upbforge/json_io.hpp"

using namespace upbforge;

#ifndef UPBFORGE_FIXTURES
#error "UPBFORGE_FIXTURES must point at the fixtures directory"
#endif

namespace {

const std::filesystem::path kFixtures = UPBFORGE_FIXTURES;

}  // namespace

TEST_CASE("rationals") {
    CHECK(rational_from_json("3/6") == mpq_class(1, 2));
    CHECK(rational_from_json("-7") == mpq_class(-7));
    CHECK(rational_from_json(json(4)) == mpq_class(4));
    CHECK(rational_to_json(mpq_class(-2, 4)) == "-1/2");
    CHECK_THROWS_AS(rational_from_json("1/0"), FormatError);
    CHECK_THROWS_AS(rational_from_json("1.5"), FormatError);
    CHECK_THROWS_AS(rational_from_json("abc"), FormatError);
    CHECK_THROWS_AS(rational_from_json(json(0.5)), FormatError);
}

TEST_CASE("vectors round-trip in both modes") {
    const ExactVector e({QComplex(mpq_class(1, 3), -2), 5});
    CHECK(vector_from_json<QComplex>(vector_to_json(e)) == e);
    CHECK(vector_to_json(e) == json::parse(R"([["1/3","-2"],["5","0"]])"));
    const FloatVector f({FComplex(0.1, -0.7), FComplex(1e-300, 3.0)});
    CHECK(vector_from_json<FComplex>(vector_to_json(f)) == f);
    CHECK_THROWS_AS(vector_from_json<QComplex>(json::parse("[]")), FormatError);
    CHECK_THROWS_AS(vector_from_json<QComplex>(json::parse("[[1]]")), FormatError);
    CHECK_THROWS_AS(vector_from_json<FComplex>(json::parse(R"([["1","0"]])")), FormatError);
}

TEST_CASE("graphs round-trip and reject bad edges") {
    const Graph g = cayley_z13(2, 3);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"k":3,"edges":[[1,1]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"k":3,"edges":[[1,2],[2,1]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"k":3,"edges":[[0,2]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"k":3,"edges":[[1,4]]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"k":0,"edges":[]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"k":3,"edges":[[1,"2"]]})")), FormatError);
}

TEST_CASE("fixtures match the built-in examples") {
    for (int which : {1, 2}) {
        const auto set = set_from_json(load_json_file(kFixtures / ("example" + std::to_string(which) + ".json")));
        REQUIRE(std::holds_alternative<ExactSet>(set));
        const auto& s = std::get<ExactSet>(set);
        const ExactSet ref = example_upb(which);
        CHECK(s.dims() == ref.dims());
        CHECK(s.states() == ref.states());
    }
}

TEST_CASE("sets round-trip") {
    const ExactSet s = example_upb(2);
    const auto back = set_from_json(set_to_json(s));
    REQUIRE(std::holds_alternative<ExactSet>(back));
    CHECK(std::get<ExactSet>(back).states() == s.states());

    const FloatSet f = to_float(s);
    const auto fb = set_from_json(set_to_json(f));
    REQUIRE(std::holds_alternative<FloatSet>(fb));
    CHECK(std::get<FloatSet>(fb).states() == f.states());

    CHECK_THROWS_AS(set_from_json(json::parse(R"({"dims":[2,2]})")), FormatError);
    CHECK_THROWS_AS(set_from_json(json::parse(R"({"dims":[2,2],"mode":"fuzzy","states":[]})")), FormatError);
    CHECK_THROWS_AS(set_from_json(json::parse(R"({"dims":[2,2],"states":[[[["1","0"],["0","0"]]]]})")),
                    FormatError);
    CHECK_THROWS_AS(load_json_file("/nonexistent.json"), FormatError);
}

TEST_CASE("solver results and configs round-trip") {
    SolverConfig c;
    c.dimension = 2;
    c.restarts = 3;
    c.seed = 42;
    const Graph g(2, std::vector<Edge>{{1, 2}});
    const OrthRepResult r = solve(g, c);
    const json j = orthrep_to_json(r);
    const OrthRepResult back = orthrep_from_json(j);
    CHECK(back.vectors == r.vectors);
    CHECK(back.objective == r.objective);
    CHECK(orthrep_to_json(back) == j);

    const SolverConfig cb = solver_config_from_json(solver_config_to_json(c));
    CHECK(cb.seed == 42);
    CHECK(cb.restarts == 3);
    CHECK(solver_config_from_json(json::parse(R"({"restarts": 5})")).restarts == 5);
    CHECK_THROWS_AS(solver_config_from_json(json::parse(R"({"restarts": 0})")), FormatError);
    CHECK_THROWS_AS(solver_config_from_json(json::parse(R"({"restarts": "many"})")), FormatError);
}

TEST_CASE("recipes round-trip") {
    const ExactSet s = example_upb(1);
    const UpbRecipe r{s.dims(), 6, orthogonality_graphs(s), {SolverConfig{}, SolverConfig{}, SolverConfig{}, SolverConfig{}}};
    const UpbRecipe back = recipe_from_json(recipe_to_json(r));
    CHECK(back.dims == r.dims);
    CHECK(back.k == 6);
    CHECK(back.graphs == r.graphs);
    CHECK(back.configs.size() == 4);
    CHECK_THROWS_AS(recipe_from_json(json::parse(R"({"dims":[2,2]})")), FormatError);
}

TEST_CASE("verdict JSON carries the witness") {
    const ExactSet s = example_upb(1);
    const json j = gupb_to_json(is_gupb(s));
    CHECK(j["is_gupb"] == false);
    CHECK(j["results"][0]["bipartition"] == "A1|A2A3A4");
    CHECK(j["results"][0]["verdict"].contains("witness"));
    const json v = verdict_to_json(is_upb(s));
    CHECK(v["is_upb"] == true);
    CHECK(v["degrees"][3] == json::array({2, 2, 2, 2, 2, 2}));
    CHECK(v["graphs"].size() == 4);
}
