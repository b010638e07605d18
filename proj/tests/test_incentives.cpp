#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coatss/incentives.hpp"
#include "coatss/oracle.hpp"
#include "oracles.hpp"

using namespace coatss;
using testref::make_inst;

static Instance c4_ones() {
    return make_inst(4, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {1, 1, 1, 1});
}

TEST_CASE("incentive lower bounds on fixtures", "[incentives]") {
    Instance star = make_inst(4, false, {{1, 2}, {1, 3}, {1, 4}}, {3, 1, 1, 1});
    IncentiveLowerBounds b = incentive_lower_bounds(star);
    CHECK(b.edge_bound == 3);
    CHECK(b.tmin_bound == 1);
    CHECK(b.best == 3);

    Instance k4 = make_inst(4, false, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                            {2, 2, 2, 2});
    IncentiveLowerBounds bk = incentive_lower_bounds(k4);
    CHECK(bk.edge_bound == 2);
    CHECK(bk.tmin_bound == 3);
    CHECK(bk.best == 3);

    IncentiveLowerBounds bc = incentive_lower_bounds(c4_ones());
    CHECK(bc.edge_bound == 0);
    CHECK(bc.tmin_bound == 1);
    CHECK(bc.best == 1);

    CHECK_THROWS_AS(incentive_lower_bounds(make_inst(2, false, {{1, 2}}, {2, 1})),
                    std::invalid_argument);
}

TEST_CASE("incentive lower bounds never exceed the optimum", "[incentives]") {
    std::mt19937_64 eng(9301);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + static_cast<int>(eng() % 7);
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), false);
        Instance inst = testref::random_thresholds(
            eng, std::move(g), [](const Graph&, Vertex) { return 0; },
            [](const Graph& gg, Vertex v) { return gg.degree(v); });
        CHECK(incentive_lower_bounds(inst).best <= exact_min_incentives(inst).weight());
    }
}

TEST_CASE("greedy payer on fixtures", "[incentives]") {
    CHECK(greedy_min_threshold(c4_ones()).weight() == 1);
    Instance star = make_inst(4, false, {{1, 2}, {1, 3}, {1, 4}}, {3, 1, 1, 1});
    IncentiveAssignment ia = greedy_min_threshold(star);
    CHECK(ia.weight() == 3);
    CHECK(is_valid_incentive(star, ia));
    Instance zero = make_inst(3, false, {{1, 2}, {2, 3}}, {0, 1, 1});
    CHECK(greedy_min_threshold(zero).weight() == 0);
    CHECK_THROWS_AS(greedy_min_threshold(make_inst(2, false, {{1, 2}}, {2, 1})),
                    std::invalid_argument);
}

TEST_CASE("greedy payer is valid and within its bound", "[incentives]") {
    std::mt19937_64 eng(9302);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + static_cast<int>(eng() % 8);
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), eng() % 2);
        Instance inst = testref::random_thresholds(
            eng, std::move(g), [](const Graph&, Vertex) { return 0; },
            [](const Graph& gg, Vertex v) { return gg.activation_degree(v); });
        IncentiveAssignment ia = greedy_min_threshold(inst);
        CHECK(is_valid_incentive(inst, ia));
        long long opt = exact_min_incentives(inst).weight();
        long long w = ia.weight();
        CHECK(w * w <= 2LL * n * n * opt);  // weight <= n * sqrt(2 * opt)
    }
}

TEST_CASE("arrangement-driven solver on fixtures", "[incentives]") {
    Instance edge = make_inst(2, false, {{1, 2}}, {1, 1});
    ArrangementSolveResult r = algorithm_two(edge, Effort::exact_mode());
    CHECK(r.assignment.weight() == 2);
    CHECK(r.assignment.q[1] == 1);
    CHECK(r.assignment.q[2] == 1);
    REQUIRE(r.rounds.size() == 1);
    CHECK(r.rounds[0].width == 1);
    CHECK(r.rounds[0].paid == 2);
    CHECK(is_valid_incentive(edge, r.assignment));

    // Every arrangement of the 4-cycle stops at its last position and pays 3.
    ArrangementSolveResult rc = algorithm_two(c4_ones(), Effort::exact_mode());
    CHECK(rc.assignment.weight() == 3);
    REQUIRE(rc.rounds.size() == 1);
    CHECK(rc.rounds[0].paid == 3);
    CHECK(rc.rounds[0].prefix.size() == 4);
    CHECK(is_valid_incentive(c4_ones(), rc.assignment));

    Instance zero = make_inst(2, false, {}, {0, 0});
    ArrangementSolveResult rz = algorithm_two(zero, Effort::exact_mode());
    CHECK(rz.assignment.weight() == 0);
    CHECK(rz.rounds.empty());

    Instance star1 = make_inst(4, false, {{1, 2}, {1, 3}, {1, 4}}, {1, 1, 1, 1});
    CHECK_THROWS_AS(algorithm_two(star1, Effort::exact_mode()), std::invalid_argument);
    CHECK_THROWS_AS(algorithm_two(make_inst(2, true, {{1, 2}}, {1, 1}), Effort::exact_mode()),
                    std::invalid_argument);
}

TEST_CASE("arrangement-driven solver round accounting", "[incentives]") {
    std::mt19937_64 eng(9303);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(eng() % 9);
        Instance inst = testref::random_weak_majority(eng, n, static_cast<int>(eng() % (2 * n)),
                                                      true);
        ArrangementSolveResult r = algorithm_two(inst, Effort::exact_mode());
        CHECK(is_valid_incentive(inst, r.assignment));
        long long total = 0;
        for (const ArrangementRound& round : r.rounds) {
            CHECK(round.paid >= 1);
            CHECK(round.paid <= 3 * round.width);
            CHECK_FALSE(round.prefix.empty());
            total += round.paid;
        }
        CHECK(total == r.assignment.weight());
    }
}

TEST_CASE("arrangement-driven solver is deterministic per seed", "[incentives]") {
    std::mt19937_64 eng(777);
    Instance inst = testref::random_weak_majority(eng, 12, 20, true);
    ArrangementSolveResult a = algorithm_two(inst, Effort::heuristic(200), 5);
    ArrangementSolveResult b = algorithm_two(inst, Effort::heuristic(200), 5);
    CHECK(a.assignment.q == b.assignment.q);
    CHECK(is_valid_incentive(inst, a.assignment));
}

TEST_CASE("block solver on fixtures", "[incentives]") {
    Instance edge = make_inst(2, false, {{1, 2}}, {1, 1});
    IncentiveAssignment ia = algorithm_three_single(edge, 1, Effort::exact_mode());
    CHECK(ia.weight() == 1);
    CHECK(is_valid_incentive(edge, ia));

    CHECK_THROWS_AS(algorithm_three_single(edge, 0, Effort::exact_mode()), std::invalid_argument);
    CHECK(algorithm_three_single(Instance(Graph(0, false, {}), std::vector<int>{0}), 1,
                                 Effort::exact_mode())
              .weight() == 0);

    IncentiveAssignment best = algorithm_three(c4_ones(), GuessPolicy::coarse,
                                               Effort::exact_mode());
    CHECK(is_valid_incentive(c4_ones(), best));
    CHECK(best.weight() >= 1);
    CHECK(best.weight() <= c4_ones().threshold_sum());
    IncentiveAssignment all = algorithm_three(c4_ones(), GuessPolicy::all, Effort::exact_mode());
    CHECK(all.weight() <= best.weight());

    Instance star1 = make_inst(4, false, {{1, 2}, {1, 3}, {1, 4}}, {1, 1, 1, 1});
    CHECK_THROWS_AS(algorithm_three(star1), std::invalid_argument);
}

TEST_CASE("block solver is valid on random weak majority instances", "[incentives]") {
    std::mt19937_64 eng(9304);
    for (int it = 0; it < 15; ++it) {
        int n = 2 + static_cast<int>(eng() % 8);
        Instance inst = testref::random_weak_majority(eng, n, static_cast<int>(eng() % (2 * n)),
                                                      true);
        IncentiveAssignment ia = algorithm_three(inst, GuessPolicy::coarse, Effort::exact_mode());
        CHECK(is_valid_incentive(inst, ia));
        CHECK(ia.weight() >= exact_min_incentives(inst).weight());
        IncentiveAssignment again =
            algorithm_three(inst, GuessPolicy::coarse, Effort::exact_mode());
        CHECK(ia.q == again.q);
    }
}

TEST_CASE("peeling payer solves degenerate instances exactly", "[incentives]") {
    Instance star = make_inst(4, false, {{4, 1}, {4, 2}, {4, 3}}, {1, 1, 1, 3});
    IncentiveAssignment ia = exact_degenerate_incentives(star);
    CHECK(ia.weight() == 3);
    CHECK(ia.q[4] == 3);
    CHECK(is_valid_incentive(star, ia));

    Instance p3 = make_inst(3, false, {{1, 2}, {2, 3}}, {1, 1, 1});
    IncentiveAssignment ip = exact_degenerate_incentives(p3);
    CHECK(ip.weight() == 1);
    CHECK(ip.q[3] == 1);

    Instance tri = make_inst(3, false, {{1, 2}, {2, 3}, {1, 3}}, {1, 1, 1});
    CHECK_THROWS_AS(exact_degenerate_incentives(tri), NotDegenerateError);
    CHECK_THROWS_AS(exact_degenerate_incentives(make_inst(2, true, {{1, 2}}, {1, 1})),
                    std::invalid_argument);

    std::mt19937_64 eng(9305);
    for (int it = 0; it < 25; ++it) {
        int n = 1 + static_cast<int>(eng() % 8);
        Instance inst = testref::random_degenerate(eng, n, static_cast<int>(eng() % (2 * n)),
                                                   static_cast<int>(eng() % 3), true);
        IncentiveAssignment got = exact_degenerate_incentives(inst);
        CHECK(got.weight() == inst.threshold_sum() - inst.m());
        CHECK(is_valid_incentive(inst, got));
        CHECK(got.weight() == exact_min_incentives(inst).weight());
    }
}

TEST_CASE("near-unanimous exact solver", "[incentives]") {
    Instance tri2 = make_inst(3, false, {{1, 2}, {2, 3}, {1, 3}}, {2, 2, 2});
    IncentiveAssignment u = exact_near_unanimous_incentives(tri2);
    CHECK(u.weight() == 3);
    CHECK(is_valid_incentive(tri2, u));

    Instance tri1 = make_inst(3, false, {{1, 2}, {2, 3}, {1, 3}}, {1, 1, 1});
    IncentiveAssignment v = exact_near_unanimous_incentives(tri1);
    CHECK(v.weight() == 1);
    CHECK(is_valid_incentive(tri1, v));

    Instance c41 = c4_ones();  // all thresholds are d - 1
    IncentiveAssignment w = exact_near_unanimous_incentives(c41);
    CHECK(w.weight() == 1);
    CHECK(is_valid_incentive(c41, w));

    Instance edge = make_inst(2, false, {{1, 2}}, {1, 1});
    CHECK(exact_near_unanimous_incentives(edge).weight() == 1);

    Instance p3u = make_inst(3, false, {{1, 2}, {2, 3}}, {1, 2, 1});
    CHECK(exact_near_unanimous_incentives(p3u).weight() == 2);

    Instance bad = make_inst(4, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {0, 1, 1, 1});
    CHECK_THROWS_AS(exact_near_unanimous_incentives(bad), std::invalid_argument);

    std::mt19937_64 eng(9306);
    int done = 0;
    while (done < 25) {
        int n = 1 + static_cast<int>(eng() % 8);
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), false);
        std::vector<int> t(n + 1, 0);
        for (Vertex vx = 1; vx <= n; ++vx) {
            int d = g.degree(vx);
            t[vx] = d == 0 ? 0 : (eng() % 2 ? d : d - 1);
        }
        Instance inst(std::move(g), std::move(t));
        IncentiveAssignment got = exact_near_unanimous_incentives(inst);
        CHECK(is_valid_incentive(inst, got));
        CHECK(got.weight() == exact_min_incentives(inst).weight());
        ++done;
    }
}

TEST_CASE("one-or-unanimous exact solver", "[incentives]") {
    Instance p3 = make_inst(3, false, {{1, 2}, {2, 3}}, {1, 2, 1});
    IncentiveAssignment a = exact_one_or_unanimous_incentives(p3);
    CHECK(a.weight() == 2);
    CHECK(a.q[1] == 1);
    CHECK(a.q[3] == 1);
    CHECK(is_valid_incentive(p3, a));

    IncentiveAssignment b = exact_one_or_unanimous_incentives(c4_ones());
    CHECK(b.weight() == 1);
    CHECK(b.q[1] == 1);

    Instance tri2 = make_inst(3, false, {{1, 2}, {2, 3}, {1, 3}}, {2, 2, 2});
    CHECK(exact_one_or_unanimous_incentives(tri2).weight() == 3);  // no threshold-1 side

    // Parallel connections between the contracted endpoints survive as
    // separate subdivided edges.
    Instance c4m = make_inst(4, false, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {1, 2, 1, 2});
    IncentiveAssignment c = exact_one_or_unanimous_incentives(c4m);
    CHECK(c.weight() == 2);
    CHECK(c.q[1] == 1);
    CHECK(c.q[3] == 1);
    CHECK(is_valid_incentive(c4m, c));

    Instance bad = make_inst(4, false, {{1, 2}, {1, 3}, {1, 4}}, {2, 1, 1, 1});
    CHECK_THROWS_AS(exact_one_or_unanimous_incentives(bad), std::invalid_argument);

    std::mt19937_64 eng(9307);
    for (int it = 0; it < 25; ++it) {
        int n = 1 + static_cast<int>(eng() % 8);
        Graph g = testref::random_graph(eng, n, static_cast<int>(eng() % (2 * n)), false);
        std::vector<int> t(n + 1, 0);
        for (Vertex vx = 1; vx <= n; ++vx) {
            int d = g.degree(vx);
            t[vx] = d == 0 ? 0 : (eng() % 2 ? 1 : d);
        }
        Instance inst(std::move(g), std::move(t));
        IncentiveAssignment got = exact_one_or_unanimous_incentives(inst);
        CHECK(is_valid_incentive(inst, got));
        CHECK(got.weight() == exact_min_incentives(inst).weight());
    }
}
