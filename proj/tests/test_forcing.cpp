#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "leaky/families.hpp"
#include "leaky/forcing.hpp"
#include "leaky/random_gen.hpp"

using namespace leaky;

namespace {

// Independent oracle: apply one valid force at a time in random order.
VertexSet random_order_closure(const Graph& g, VertexSet blue, const VertexSet& leaks, Rng& rng) {
    while (true) {
        std::vector<std::pair<int, int>> moves;
        for (int v = blue.first(); v >= 0; v = blue.next(v)) {
            if (leaks.contains(v)) continue;
            VertexSet white = g.neighbors(v) - blue;
            int t = white.first();
            if (t >= 0 && white.next(t) < 0) moves.emplace_back(v, t);
        }
        if (moves.empty()) return blue;
        auto [f, t] = moves[rng.below(moves.size())];
        blue.insert(t);
    }
}

// Validates a chronology step by step and replays it.
void check_chronology(const Graph& g, const VertexSet& start, const VertexSet& leaks,
                      const ClosureResult& result) {
    VertexSet blue = start;
    std::set<int> forced;
    for (auto [f, t] : result.chronology.steps) {
        CHECK(blue.contains(f));
        CHECK(!leaks.contains(f));
        CHECK(!blue.contains(t));
        VertexSet white = g.neighbors(f) - blue;
        CHECK(white.size() == 1);
        CHECK(white.first() == t);
        CHECK(forced.insert(t).second);  // each vertex forced exactly once
        blue.insert(t);
    }
    CHECK(blue == result.blue);
}

// Exhaustive chronology oracle: every (forcer, target) pair that occurs in
// any maximal force sequence. Exponential; for tiny graphs only.
void all_chronology_pairs(const Graph& g, const VertexSet& blue, const VertexSet& leaks,
                          std::set<std::pair<int, int>>& pairs, std::set<std::string>& seen) {
    if (!seen.insert(blue.to_string()).second) return;
    for (int v = blue.first(); v >= 0; v = blue.next(v)) {
        if (leaks.contains(v)) continue;
        VertexSet white = g.neighbors(v) - blue;
        int t = white.first();
        if (t < 0 || white.next(t) >= 0) continue;
        pairs.emplace(v, t);
        VertexSet next = blue;
        next.insert(t);
        all_chronology_pairs(g, next, leaks, pairs, seen);
    }
}

VertexSet none(const Graph& g) { return VertexSet(g.vertex_count()); }

}  // namespace

TEST_CASE("closure on paths and cycles") {
    Graph p4 = make_path(4);
    auto r = closure(p4, VertexSet(4, {0}), none(p4));
    CHECK(r.blue == VertexSet::full(4));
    check_chronology(p4, VertexSet(4, {0}), none(p4), r);

    auto leaked = closure(p4, VertexSet(4, {0}), VertexSet(4, {0}));
    CHECK(leaked.blue == VertexSet(4, {0}));
    CHECK(leaked.chronology.steps.empty());

    Graph c5 = make_cycle(5);
    auto around = closure(c5, VertexSet(5, {0, 1}), VertexSet(5, {0}));
    CHECK(around.blue == VertexSet::full(5));
    check_chronology(c5, VertexSet(5, {0, 1}), VertexSet(5, {0}), around);
}

TEST_CASE("closure is deterministic and round-ordered") {
    Graph star = make_star(5);
    VertexSet leaves(5, {1, 2, 3, 4});
    auto r = closure(star, leaves, none(star));
    REQUIRE(r.chronology.steps.size() == 1);
    CHECK(r.chronology.steps[0] == std::pair{1, 0});  // lowest-id forcer wins
}

TEST_CASE("leaky forcing set checks") {
    for (int n : {4, 7, 11}) {
        Graph p = make_path(n);
        CHECK(is_leaky_forcing_set(p, VertexSet(n, {0, n - 1}), 1).ok);
    }

    Graph p4 = make_path(4);
    auto fail = is_leaky_forcing_set(p4, VertexSet(4, {0, 3}), 2);
    CHECK(!fail.ok);
    // first failing pair in lexicographic order: leaks {0,2} silence both
    // neighbors of vertex 1 ({0,1} still completes through vertex 2)
    CHECK(*fail.counterexample == VertexSet(4, {0, 2}));

    // with ell = n-1 leaks on K_n the adversary can disable every blue vertex
    Graph k4 = make_complete(4);
    CHECK(is_leaky_forcing_set(k4, VertexSet(4, {0, 1, 2}), 2).ok);
    auto saturated = is_leaky_forcing_set(k4, VertexSet(4, {0, 1, 2}), 3);
    CHECK(!saturated.ok);
    CHECK(*saturated.counterexample == VertexSet(4, {0, 1, 2}));

    // ell >= n: only the all-vertices set works
    Graph p3 = make_path(3);
    CHECK(is_leaky_forcing_set(p3, VertexSet::full(3), 5).ok);
    CHECK(!is_leaky_forcing_set(p3, VertexSet(3, {0, 1}), 5).ok);
}

TEST_CASE("feasible forcers on small graphs") {
    Graph p3 = make_path(3);
    CHECK(feasible_forcers(p3, VertexSet(3, {0, 2}), none(p3), 1) == VertexSet(3, {0, 2}));
    CHECK(feasible_forcers(p3, VertexSet(3, {0}), none(p3), 2) == VertexSet(3, {1}));
    CHECK_THROWS_AS(feasible_forcers(p3, VertexSet(3, {0}), none(p3), 0), std::domain_error);

    // C_4 from two adjacent blues: each white vertex can be reached around
    // either side, so two feasible forcers each; a leak on one start vertex
    // cuts that to one.
    Graph c4 = make_cycle(4);
    VertexSet start(4, {0, 1});
    CHECK(feasible_forcers(c4, start, none(c4), 2) == VertexSet(4, {1, 3}));
    CHECK(feasible_forcers(c4, start, none(c4), 3) == VertexSet(4, {0, 2}));
    CHECK(feasible_forcers(c4, start, VertexSet(4, {0}), 2) == VertexSet(4, {1}));
    CHECK(feasible_forcers(c4, start, VertexSet(4, {0}), 3) == VertexSet(4, {2}));
}

TEST_CASE("feasible forcers agree with the all-chronologies oracle") {
    Rng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        int n = rng.range(3, 6);
        Graph g = random_connected_graph(rng, n, 0.5);
        VertexSet start(n);
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.5)) start.insert(v);
        if (start.empty() || start == VertexSet::full(n)) continue;
        VertexSet leaks(n);
        if (rng.chance(0.5)) leaks.insert(rng.range(0, n - 1));

        std::set<std::pair<int, int>> pairs;
        std::set<std::string> seen;
        all_chronology_pairs(g, start, leaks, pairs, seen);
        for (int v = 0; v < n; ++v) {
            if (start.contains(v)) continue;
            VertexSet expected(n);
            for (auto [f, t] : pairs)
                if (t == v) expected.insert(f);
            CHECK(feasible_forcers(g, start, leaks, v) == expected);
        }
    }
}

TEST_CASE("confluence: random application orders reach the same closure") {
    Rng rng(12321);
    for (int graph_i = 0; graph_i < 50; ++graph_i) {
        int n = rng.range(3, 9);
        Graph g = random_connected_graph(rng, n, 0.45);
        VertexSet start(n);
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.4)) start.insert(v);
        VertexSet leaks(n);
        if (rng.chance(0.6)) leaks.insert(rng.range(0, n - 1));

        VertexSet engine = closure(g, start, leaks).blue;
        for (int order = 0; order < 100; ++order)
            CHECK(random_order_closure(g, start, leaks, rng) == engine);
    }
}

TEST_CASE("monotone in the start set, antitone in the leak set") {
    Rng rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(3, 9);
        Graph g = random_connected_graph(rng, n, 0.5);
        VertexSet small(n), extra(n), leaks(n), more_leaks(n);
        for (int v = 0; v < n; ++v) {
            if (rng.chance(0.35)) small.insert(v);
            if (rng.chance(0.2)) extra.insert(v);
            if (rng.chance(0.2)) leaks.insert(v);
            if (rng.chance(0.2)) more_leaks.insert(v);
        }
        VertexSet big = small | extra;
        VertexSet all_leaks = leaks | more_leaks;
        CHECK(closure(g, small, leaks).blue.is_subset_of(closure(g, big, leaks).blue));
        CHECK(closure(g, small, all_leaks).blue.is_subset_of(closure(g, small, leaks).blue));
    }
}

TEST_CASE("low-degree vertices must be in every forcing set") {
    Rng rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.range(3, 8);
        Graph g = random_connected_graph(rng, n, 0.45);
        for (int ell = 0; ell <= 3; ++ell) {
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) > ell) continue;
                VertexSet s = VertexSet::full(n);
                s.erase(v);
                CHECK(!is_leaky_forcing_set(g, s, ell).ok);
            }
        }
    }
}
