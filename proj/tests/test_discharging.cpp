#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlab/discharging.hpp"
#include "crlab/generate.hpp"
#include "crlab/graph.hpp"

#include "enumeration.hpp"

#include <algorithm>
#include <queue>
#include <random>

using namespace crlab;

namespace {

long long max_round(const ChargeState& s) {
    long long r = 0;
    for (const Transfer& t : s.log) r = std::max(r, (long long)t.round);
    return r;
}

// induced ball of the given radius around an edge, with the old labels of
// the kept vertices
Graph ball_around_edge(const Graph& g, int a, int b, int radius, std::vector<int>* old_of) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[a] = dist[b] = 0;
    q.push(a);
    q.push(b);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] == radius) continue;
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    std::vector<int> victims;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] < 0) victims.push_back(v);
    return g.remove_vertices(victims, old_of);
}

} // namespace

TEST_CASE("initial charges equal degrees") {
    ChargeState c5 = init_charges(cycle_graph(5));
    for (const Rational& c : c5.charges) CHECK(c == Rational(2));
    CHECK(c5.total() == Rational(10));

    ChargeState star = init_charges(star_graph(4));
    CHECK(star.charges[0] == Rational(4));
    for (int i = 1; i <= 4; ++i) CHECK(star.charges[i] == Rational(1));
    CHECK(star.total() == Rational(8));

    ChargeState empty = init_charges(Graph(3));
    CHECK(empty.total() == Rational(0));
}

TEST_CASE("the star K1,4 discharges its center in one round") {
    Graph star = star_graph(4);
    ChargeState s = run_discharging(star, 2, 10, init_charges(star));
    CHECK(s.charges[0] == Rational(2));
    for (int i = 1; i <= 4; ++i) CHECK(s.charges[i] == Rational(3, 2));
    CHECK(s.total() == Rational(8));
    CHECK(max_round(s) == 1);
    CHECK(s.log.size() == 4);
    for (const Transfer& t : s.log) {
        CHECK(t.rule == Rule::R1);
        CHECK(t.from == 0);
        CHECK(t.amount == Rational(1, 2));
    }
}

TEST_CASE("the degree-2-only R1 variant leaves K1,4 untouched") {
    Graph star = star_graph(4);
    RuleVariant narrow;
    narrow.r1_includes_degree1 = false;
    ChargeState s = run_discharging(star, 2, 10, init_charges(star), narrow);
    CHECK(s.log.empty());
    CHECK(s.charges[0] == Rational(4));
}

TEST_CASE("no rule fires on C5") {
    ChargeState s = run_discharging(cycle_graph(5), 2, 10, init_charges(cycle_graph(5)));
    CHECK(s.log.empty());
    for (const Rational& c : s.charges) CHECK(c == Rational(2));
}

TEST_CASE("R2 walks charge around a chorded odd cycle and conserves the total") {
    Graph g = cycle_graph(9);
    g.add_edge(0, 4);
    ChargeState s = run_discharging(g, 3, 30, init_charges(g));
    CHECK(s.total() == Rational(2 * g.edge_count()));
    int r2 = 0;
    for (const Transfer& t : s.log)
        if (t.rule == Rule::R2) ++r2;
    CHECK(r2 == 9); // once per cycle edge of the chorded 9-cycle
    // every cycle vertex both sends and receives 1/4: charges unchanged
    for (int v = 0; v < 9; ++v)
        CHECK(s.charges[v] == Rational(g.degree(v)));
}

TEST_CASE("R3 moves charge from long-path endpoints inward") {
    Graph p10 = path_graph(10);
    ChargeState s = run_discharging(p10, 2, 3, init_charges(p10));
    int r3 = 0;
    for (const Transfer& t : s.log)
        if (t.rule == Rule::R3) ++r3;
    CHECK(r3 == 2);
    CHECK(s.charges[0] == Rational(1, 2));
    CHECK(s.charges[1] == Rational(5, 2));
    CHECK(s.charges[8] == Rational(5, 2));
    CHECK(s.charges[9] == Rational(1, 2));
    CHECK(s.total() == Rational(18));
}

TEST_CASE("audit reports balance and deficits") {
    Graph star = star_graph(4);
    ChargeAudit fresh = audit_charges(star, init_charges(star));
    CHECK(fresh.balanced);
    CHECK(fresh.deficit_vertices.empty());

    ChargeState run = run_discharging(star, 2, 10, init_charges(star));
    ChargeAudit after = audit_charges(star, run);
    CHECK(after.balanced);
    CHECK(after.deficit_vertices.empty());

    ChargeState rigged = init_charges(star);
    rigged.charges[2] = Rational(-1, 2);
    ChargeAudit bad = audit_charges(star, rigged);
    CHECK(!bad.balanced);
    CHECK(bad.deficit_vertices == std::vector<int>{2});
}

TEST_CASE("conservation holds exactly across corpora") {
    // random constrained graphs
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 4 + (int)(rng() % 10);
        Graph g = gen_constrained(n, Rational(5, 2), 5, rng());
        ChargeState s = run_discharging(g, 2, 4, init_charges(g));
        REQUIRE(s.total() == Rational(2 * g.edge_count()));
    }
    // exhaustive small graphs
    for (int n = 1; n <= 7; ++n) {
        long long bad = 0;
        long long masks = (long long)corpus::mask_count(n);
#pragma omp parallel for schedule(dynamic, 512) reduction(+ : bad)
        for (long long mask = 0; mask < masks; ++mask) {
            Graph g = corpus::graph_from_mask(n, (uint64_t)mask);
            ChargeState s = run_discharging(g, 2, 2, init_charges(g));
            if (!(s.total() == Rational(2 * g.edge_count()))) ++bad;
            if (max_round(s) > (long long)g.vertex_count() * g.edge_count()) ++bad;
        }
        REQUIRE(bad == 0);
    }
}

TEST_CASE("identical logs across repeated runs") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gen_constrained(10, Rational(5, 2), 5, rng());
        ChargeState a = run_discharging(g, 2, 4, init_charges(g));
        ChargeState b = run_discharging(g, 2, 4, init_charges(g));
        REQUIRE(a.log.size() == b.log.size());
        for (size_t i = 0; i < a.log.size(); ++i) {
            CHECK(a.log[i].round == b.log[i].round);
            CHECK(a.log[i].rule == b.log[i].rule);
            CHECK(a.log[i].from == b.log[i].from);
            CHECK(a.log[i].to == b.log[i].to);
            CHECK(a.log[i].amount == b.log[i].amount);
        }
        CHECK(a.charges == b.charges);
    }
}

TEST_CASE("transfers re-validate inside a local ball around the edge") {
    std::mt19937_64 rng(71);
    int k = 2, L = 4;
    int radius = std::max(2 * k + 3, L + 1);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + (int)(rng() % 9);
        Graph g = gen_constrained(n, Rational(5, 2), 5, rng());
        ChargeState s = run_discharging(g, k, L, init_charges(g));
        if (s.log.empty()) continue;
        const Transfer& t = s.log[rng() % s.log.size()];
        std::vector<int> old_of;
        Graph ball = ball_around_edge(g, t.from, t.to, radius, &old_of);
        std::vector<int> new_id(n, -1);
        for (int i = 0; i < ball.vertex_count(); ++i) new_id[old_of[i]] = i;
        bool found = false;
        for (auto [rule, from, to] : eligible_transfers(ball, k, L)) {
            if (rule == t.rule && from == new_id[t.from] && to == new_id[t.to]) found = true;
        }
        REQUIRE(found);
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("transfer log exports as csv") {
    Graph star = star_graph(4);
    ChargeState s = run_discharging(star, 2, 10, init_charges(star));
    std::string csv = transfer_log_csv(s);
    CHECK(csv.find("round,rule,from,to,amount\n") == 0);
    CHECK(csv.find("1,R1,0,1,1/2\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
