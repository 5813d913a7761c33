#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leaky/families.hpp"
#include "leaky/forcing.hpp"
#include "leaky/forts.hpp"
#include "leaky/random_gen.hpp"
#include "leaky/solver.hpp"

using namespace leaky;

namespace {

// Unrestricted reference: try every subset in (size, lex) order against the
// adversarial check directly, ignoring the mandatory-vertex restriction the
// solver relies on.
std::pair<int, VertexSet> naive_minimum(const Graph& g, int ell) {
    int n = g.vertex_count();
    for (int size = 0; size <= n; ++size) {
        std::pair<int, VertexSet> found{-1, VertexSet(n)};
        for_each_subset_of_size(n, size, [&](const VertexSet& s) {
            if (is_leaky_forcing_set(g, s, ell).ok) {
                found = {size, s};
                return false;
            }
            return true;
        });
        if (found.first >= 0) return found;
    }
    return {n, VertexSet::full(n)};
}

}  // namespace

TEST_CASE("mandatory vertices") {
    CHECK(mandatory_vertices(make_star(5), 1) == VertexSet(5, {1, 2, 3, 4}));
    CHECK(mandatory_vertices(make_cycle(6), 2) == VertexSet::full(6));
    CHECK(mandatory_vertices(make_generalized_petersen(7, 2), 2).empty());
}

TEST_CASE("known values") {
    CHECK(leaky_forcing_number(make_cycle(9), 1).value == 2);
    CHECK(leaky_forcing_number(make_generalized_petersen(5, 2), 2).value == 5);
    CHECK(leaky_forcing_number(make_generalized_petersen(8, 2), 1).value == 5);
}

TEST_CASE("monotonicity audit sequences") {
    CHECK(monotonicity_audit(make_path(5), 5) == std::vector<int>{1, 2, 5, 5, 5, 5});
    // once the adversary can leak every blue vertex (ell = n-1), only the
    // full vertex set survives
    CHECK(monotonicity_audit(make_complete(4), 4) == std::vector<int>{3, 3, 3, 4, 4});
    CHECK(monotonicity_audit(make_generalized_petersen(6, 2), 2) == std::vector<int>{4, 6, 6});
}

TEST_CASE("chain property on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected_graph(rng, rng.range(3, 7), 0.5);
        CHECK_NOTHROW(monotonicity_audit(g, 3));  // throws if the chain ever decreases
    }
}

TEST_CASE("solver matches the unrestricted reference") {
    Rng rng(909);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(rng, rng.range(2, 6), 0.5);
        for (int ell = 0; ell <= 3; ++ell) {
            auto [value, witness] = naive_minimum(g, ell);
            SolveResult result = leaky_forcing_number(g, ell);
            CHECK(result.value == value);
            CHECK(result.witness == witness);  // lexicographically least minimum set
        }
    }
}

TEST_CASE("subset search and fort hitting agree") {
    Rng rng(313);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(rng, rng.range(2, 9), 0.45);
        for (int ell = 0; ell <= 3; ++ell) {
            SolveOptions forts;
            forts.method = SolveMethod::fort_hitting;
            SolveResult by_search = leaky_forcing_number(g, ell);
            SolveResult by_forts = leaky_forcing_number(g, ell, forts);
            CHECK(by_search.value == by_forts.value);
            CHECK(by_search.witness == by_forts.witness);
        }
    }

    // a few larger instances to stress both routes
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_connected_graph(rng, rng.range(10, 12), 0.4);
        for (int ell = 0; ell <= 2; ++ell) {
            SolveOptions forts;
            forts.method = SolveMethod::fort_hitting;
            CHECK(leaky_forcing_number(g, ell).value == leaky_forcing_number(g, ell, forts).value);
        }
    }
}

TEST_CASE("witness passes and is minimal") {
    Rng rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(rng, rng.range(3, 8), 0.5);
        int ell = rng.range(0, 2);
        SolveResult result = leaky_forcing_number(g, ell);
        CHECK(is_leaky_forcing_set(g, result.witness, ell).ok);
        VertexSet mandatory = mandatory_vertices(g, ell);
        for (int v = result.witness.first(); v >= 0; v = result.witness.next(v)) {
            VertexSet smaller = result.witness;
            smaller.erase(v);
            CHECK(!is_leaky_forcing_set(g, smaller, ell).ok);
        }
        CHECK(mandatory.is_subset_of(result.witness));
    }
}

TEST_CASE("all vertices mandatory once ell reaches the maximum degree") {
    Rng rng(616);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_connected_graph(rng, rng.range(2, 7), 0.5);
        int max_degree = 0;
        for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
        SolveResult result = leaky_forcing_number(g, max_degree);
        CHECK(result.value == g.vertex_count());
    }
}

TEST_CASE("disconnected graphs solve as component sums") {
    // two paths: P_3 and P_4 side by side
    Graph g(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
    SolveResult r1 = leaky_forcing_number(g, 1);
    CHECK(r1.value == 4);  // 2 + 2
    CHECK(is_leaky_forcing_set(g, r1.witness, 1).ok);
    CHECK(leaky_forcing_number(g, 0).value == 2);

    SolveOptions forts;
    forts.method = SolveMethod::fort_hitting;
    CHECK(leaky_forcing_number(g, 1, forts).value == 4);
}

TEST_CASE("deadline produces bracketing bounds") {
    SolveOptions options;
    options.deadline = std::chrono::steady_clock::now();
    try {
        leaky_forcing_number(make_generalized_petersen(8, 2), 1, options);
        FAIL("expected SolverTimeout");
    } catch (const SolverTimeout& timeout) {
        CHECK(timeout.lower_bound <= 5);
        CHECK(timeout.upper_bound >= 5);
    }
}

TEST_CASE("stats are recorded") {
    SolveResult result = leaky_forcing_number(make_path(5), 1);
    CHECK(result.stats.candidates_tested >= 1);
    CHECK(result.stats.leak_sets_tested >= 1);
    CHECK(result.method == SolveMethod::subset_search);
}
