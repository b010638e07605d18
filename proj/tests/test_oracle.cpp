#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "coatss/oracle.hpp"
#include "oracles.hpp"

using namespace coatss;
using testref::make_inst;

TEST_CASE("oracle limit honors the environment override", "[oracle]") {
    unsetenv("COA_TSS_ORACLE_LIMIT");
    CHECK(oracle_limit(20) == 20);
    setenv("COA_TSS_ORACLE_LIMIT", "7", 1);
    CHECK(oracle_limit(20) == 7);
    setenv("COA_TSS_ORACLE_LIMIT", "junk", 1);
    CHECK(oracle_limit(22) == 22);
    unsetenv("COA_TSS_ORACLE_LIMIT");
}

TEST_CASE("minimum target sets on fixtures", "[oracle]") {
    Instance c4 = make_inst(4, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {1, 1, 1, 1});
    CHECK(exact_min_target_set(c4) == VertexSet{1});

    Instance tri2 = make_inst(3, false, {{1, 2}, {2, 3}, {1, 3}}, {2, 2, 2});
    CHECK(exact_min_target_set(tri2) == VertexSet{1, 2});

    Instance zero = make_inst(1, false, {}, {0});
    CHECK(exact_min_target_set(zero).empty());

    // A vertex whose threshold exceeds its degree must be seeded.
    Instance mix = make_inst(5, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {1, 1, 1, 1, 1});
    CHECK(exact_min_target_set(mix) == VertexSet{1, 5});

    Instance dir = make_inst(3, true, {{1, 2}, {2, 3}, {3, 1}}, {1, 1, 1});
    CHECK(exact_min_target_set(dir) == VertexSet{1});

    CHECK_THROWS_AS(exact_min_target_set(mix, 4), std::invalid_argument);
}

TEST_CASE("minimum target sets agree with exhaustive search", "[oracle]") {
    std::mt19937_64 eng(9101);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(eng() % 7);
        bool directed = eng() % 2;
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), directed);
        Instance inst = testref::random_thresholds(
            eng, std::move(g), [](const Graph&, Vertex) { return 0; },
            [](const Graph& gg, Vertex v) { return gg.activation_degree(v) + 1; });
        VertexSet got = exact_min_target_set(inst);
        VertexSet want = testref::brute_min_target_set(inst);
        CHECK(got == want);
        CHECK(is_contagious(inst, got));
        for (Vertex drop : got) {
            VertexSet smaller;
            for (Vertex v : got)
                if (v != drop) smaller.push_back(v);
            CHECK_FALSE(is_contagious(inst, smaller));
        }
    }
}

TEST_CASE("minimum incentives on fixtures", "[oracle]") {
    Instance star = make_inst(4, false, {{1, 2}, {1, 3}, {1, 4}}, {3, 1, 1, 1});
    IncentiveAssignment ia = exact_min_incentives(star);
    CHECK(ia.weight() == 3);
    CHECK(is_valid_incentive(star, ia));

    Instance c4 = make_inst(4, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {1, 1, 1, 1});
    CHECK(exact_min_incentives(c4).weight() == 1);

    Instance edge = make_inst(2, false, {{1, 2}}, {1, 1});
    CHECK(exact_min_incentives(edge).weight() == 1);

    Instance empty(Graph(0, false, {}), std::vector<int>{0});
    CHECK(exact_min_incentives(empty).weight() == 0);

    Instance heavy = make_inst(2, false, {{1, 2}}, {2, 1});
    CHECK_THROWS_AS(exact_min_incentives(heavy), std::invalid_argument);
    CHECK_THROWS_AS(exact_min_incentives(c4, 3), std::invalid_argument);
}

TEST_CASE("capped incentives respect per-vertex limits", "[oracle]") {
    Instance c4 = make_inst(4, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {1, 1, 1, 1});
    std::vector<int> none(5, 0);
    CHECK_FALSE(exact_min_incentives_capped(c4, none).has_value());
    std::vector<int> one(5, 0);
    one[3] = 1;
    auto got = exact_min_incentives_capped(c4, one);
    REQUIRE(got.has_value());
    CHECK(got->weight() == 1);
    CHECK(got->q[3] == 1);
    CHECK_THROWS_AS(exact_min_incentives_capped(c4, std::vector<int>(4, 1)),
                    std::invalid_argument);
    // Unbounded caps reproduce the uncapped optimum.
    std::vector<int> big(5, 100);
    CHECK(exact_min_incentives_capped(c4, big)->weight() == exact_min_incentives(c4).weight());
}

TEST_CASE("minimum incentives agree with exhaustive search", "[oracle]") {
    std::mt19937_64 eng(9102);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(eng() % 6);
        bool directed = eng() % 2;
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), directed);
        Instance inst = testref::random_thresholds(
            eng, std::move(g), [](const Graph&, Vertex) { return 0; },
            [](const Graph& gg, Vertex v) { return gg.activation_degree(v); });
        IncentiveAssignment ia = exact_min_incentives(inst);
        CHECK(ia.weight() == testref::brute_min_incentives(inst));
        CHECK(ia.weight() == testref::brute_min_incentives_raw(inst));
        CHECK(is_valid_incentive(inst, ia));
    }
}

TEST_CASE("incentive optimum never beats thresholds of a minimum target set", "[oracle]") {
    std::mt19937_64 eng(9103);
    for (int it = 0; it < 25; ++it) {
        int n = 1 + static_cast<int>(eng() % 6);
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), false);
        Instance inst = testref::random_thresholds(
            eng, std::move(g), [](const Graph&, Vertex) { return 0; },
            [](const Graph& gg, Vertex v) { return gg.degree(v); });
        long long w = exact_min_incentives(inst).weight();
        VertexSet ts = exact_min_target_set(inst);
        long long paid = 0;
        for (Vertex v : ts) paid += inst.t[v];
        CHECK(w <= paid);  // paying a target set's thresholds is one valid assignment
    }
}

TEST_CASE("cutwidth on fixtures", "[oracle]") {
    Graph p4(4, false, {{1, 2}, {2, 3}, {3, 4}});
    Arrangement a = exact_cutwidth(p4);
    CHECK(a.width == 1);
    CHECK(a.exact);
    CHECK(cut_profile(p4, a.order).width == 1);

    Graph c4(4, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(exact_cutwidth(c4).width == 2);

    Graph k4(4, false, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(exact_cutwidth(k4).width == 4);

    Graph anti(2, true, {{1, 2}, {2, 1}});
    CHECK(exact_cutwidth(anti).width == 2);

    Graph empty(0, false, {});
    CHECK(exact_cutwidth(empty).width == 0);
    Graph lone(1, false, {});
    CHECK(exact_cutwidth(lone).width == 0);

    CHECK_THROWS_AS(exact_cutwidth(p4, 3), std::invalid_argument);
}

TEST_CASE("cutwidth agrees with exhaustive search", "[oracle]") {
    std::mt19937_64 eng(9104);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(eng() % 7);
        bool directed = eng() % 2;
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), directed);
        Arrangement arr = exact_cutwidth(g);
        CHECK(arr.width == testref::brute_cutwidth(g));
        CHECK(cut_profile(g, arr.order).width == arr.width);
    }
}
