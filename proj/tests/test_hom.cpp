#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlab/errors.hpp"
#include "crlab/hom.hpp"
#include "crlab/kneser.hpp"

#include "enumeration.hpp"
#include "oracles.hpp"

#include <random>

using namespace crlab;

TEST_CASE("find_hom examples against the Petersen graph") {
    KneserGraph petersen = kneser_graph({5, 2});

    SearchOutcome c5 = find_hom(cycle_graph(5), petersen.graph, 1'000'000);
    REQUIRE(c5.status == SearchStatus::Found);
    CHECK(verify_hom(cycle_graph(5), petersen.graph, *c5.witness).empty());

    SearchOutcome k3 = find_hom(complete_graph(3), petersen.graph, 1'000'000);
    REQUIRE(k3.status == SearchStatus::Refuted);
    REQUIRE(k3.obstruction);
    CHECK(k3.obstruction->source_odd_girth == 3);
    CHECK(k3.obstruction->target_odd_girth == OddGirth::finite(5));

    SearchOutcome c6 = find_hom(cycle_graph(6), petersen.graph, 1'000'000);
    REQUIRE(c6.status == SearchStatus::Found);
    CHECK(verify_hom(cycle_graph(6), petersen.graph, *c6.witness).empty());
    // a bipartite graph lands on a single edge
    std::vector<int> used(10, 0);
    for (int v : c6.witness->map) used[v] = 1;
    CHECK(std::count(used.begin(), used.end(), 1) == 2);
}

TEST_CASE("verify_hom lists violations and rejects bad shapes") {
    Graph c5 = cycle_graph(5);
    Homomorphism id{{0, 1, 2, 3, 4}};
    CHECK(verify_hom(c5, c5, id).empty());

    Graph k2 = path_graph(2);
    Homomorphism constant{{0, 0}};
    auto violations = verify_hom(k2, k2, constant);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == std::pair<int, int>{0, 1});

    CHECK_THROWS_AS(verify_hom(c5, c5, Homomorphism{{0, 1}}), ShapeMismatch);
    CHECK_THROWS_AS(verify_hom(c5, c5, Homomorphism{{0, 1, 2, 3, 9}}), ShapeMismatch);
}

TEST_CASE("search agrees with brute-force enumeration: all sources n <= 6 into C5") {
    Graph c5 = cycle_graph(5);
    for (int n = 1; n <= 6; ++n) {
        long long disagreements = 0, unsound = 0;
        long long masks = (long long)corpus::mask_count(n);
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : disagreements, unsound)
        for (long long mask = 0; mask < masks; ++mask) {
            Graph g = corpus::graph_from_mask(n, (uint64_t)mask);
            SearchOutcome out = find_hom(g, c5, 100'000'000);
            bool want = oracle::brute_hom_exists(g, c5);
            bool got = out.status == SearchStatus::Found;
            if (out.status == SearchStatus::BudgetExceeded || got != want) ++disagreements;
            if (got && !verify_hom(g, c5, *out.witness).empty()) ++unsound;
        }
        REQUIRE(disagreements == 0);
        REQUIRE(unsound == 0);
    }
}

TEST_CASE("status matches brute existence on random instances") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        int ns = 1 + (int)(rng() % 6);
        int nt = 1 + (int)(rng() % 7);
        Graph s = corpus::random_graph(ns, 0.4, rng);
        Graph t = corpus::random_graph(nt, 0.4, rng);
        SearchOutcome out = find_hom(s, t, 100'000'000);
        REQUIRE(out.status != SearchStatus::BudgetExceeded);
        bool want = oracle::brute_hom_exists(s, t);
        CHECK((out.status == SearchStatus::Found) == want);
        if (out.witness) CHECK(verify_hom(s, t, *out.witness).empty());
        if (out.status == SearchStatus::Refuted) CHECK(!want);
    }
}

TEST_CASE("bipartite sources with an edge always map into a target with an edge") {
    std::mt19937_64 rng(37);
    KneserGraph petersen = kneser_graph({5, 2});
    for (int trial = 0; trial < 200; ++trial) {
        int half_a = 1 + (int)(rng() % 4), half_b = 1 + (int)(rng() % 4);
        Graph g(half_a + half_b);
        for (int i = 0; i < half_a; ++i)
            for (int j = 0; j < half_b; ++j)
                if (rng() % 2) g.add_edge(i, half_a + j);
        if (g.edge_count() == 0) g.add_edge(0, half_a);
        SearchOutcome out = find_hom(g, petersen.graph, 1'000'000);
        REQUIRE(out.status == SearchStatus::Found);
        CHECK(verify_hom(g, petersen.graph, *out.witness).empty());
    }
}

TEST_CASE("fixed budget and serial mode give identical witnesses") {
    std::mt19937_64 rng(41);
    KneserGraph k73 = kneser_graph({7, 3});
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = corpus::random_graph(8, 0.25, rng);
        SearchOutcome a = find_hom(g, k73.graph, 1'000'000);
        SearchOutcome b = find_hom(g, k73.graph, 1'000'000);
        REQUIRE(a.status == b.status);
        CHECK(a.nodes == b.nodes);
        if (a.witness) CHECK(a.witness->map == b.witness->map);
    }
}

TEST_CASE("parallel mode agrees with the serial reference on status") {
    std::mt19937_64 rng(43);
    KneserGraph k73 = kneser_graph({7, 3});
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = corpus::random_graph(9, 0.2, rng);
        SearchOptions serial;
        SearchOptions parallel;
        parallel.threads = 2;
        SearchOutcome a = find_hom(g, k73.graph, serial);
        SearchOutcome b = find_hom(g, k73.graph, parallel);
        REQUIRE(a.status == b.status);
        if (b.witness) CHECK(verify_hom(g, k73.graph, *b.witness).empty());
    }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
    // C7 into the Petersen graph needs more than one node of search
    SearchOutcome out = find_hom(cycle_graph(7), kneser_graph({5, 2}).graph, 1);
    CHECK(out.status == SearchStatus::BudgetExceeded);
    CHECK(out.nodes >= 1);
}

TEST_CASE("empty and edgeless corner cases") {
    Graph empty(0);
    SearchOutcome out = find_hom(empty, cycle_graph(3), 100);
    CHECK(out.status == SearchStatus::Found);
    CHECK(out.witness->map.empty());

    SearchOutcome iso = find_hom(Graph(3), cycle_graph(3), 100);
    REQUIRE(iso.status == SearchStatus::Found);
    CHECK(verify_hom(Graph(3), cycle_graph(3), *iso.witness).empty());

    // edges cannot map into an edgeless target
    SearchOutcome none = find_hom(path_graph(2), Graph(2), 100);
    CHECK(none.status == SearchStatus::NoneExhaustive);

    CHECK_THROWS(find_hom(path_graph(2), Graph(0), 100));
}

TEST_CASE("conjecture_instance examples") {
    ConjectureReport c5 = conjecture_instance(cycle_graph(5), 2, {});
    CHECK(c5.mad_value == Rational(2, 1));
    CHECK(c5.girth == OddGirth::finite(5));
    CHECK(c5.premises_pass);
    REQUIRE(c5.outcome);
    CHECK(c5.outcome->status == SearchStatus::Found);

    ConjectureReport c7 = conjecture_instance(cycle_graph(7), 3, {});
    CHECK(c7.mad_value == Rational(2, 1));
    CHECK(c7.girth == OddGirth::finite(7));
    CHECK(c7.premises_pass);
    REQUIRE(c7.outcome);
    CHECK(c7.outcome->status == SearchStatus::Found);

    ConjectureReport k4 = conjecture_instance(complete_graph(4), 2, {});
    CHECK(k4.mad_value == Rational(3, 1));
    CHECK(k4.girth == OddGirth::finite(3));
    CHECK(!k4.premises_pass);
    CHECK(!k4.outcome);

    CHECK_THROWS(conjecture_instance(cycle_graph(5), 1, {}));
}
