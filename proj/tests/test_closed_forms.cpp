#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "leaky/closed_forms.hpp"
#include "leaky/families.hpp"
#include "leaky/forcing.hpp"
#include "leaky/graph_io.hpp"
#include "leaky/random_gen.hpp"
#include "leaky/solver.hpp"

using namespace leaky;

namespace {

// Mixed-girth unicyclic corpus; girth targets rotate through 3, 4, 5, any.
Graph corpus_unicyclic(Rng& rng, int i, int max_n) {
    int girth_target[] = {3, 4, 5, 0};
    int target = girth_target[i % 4];
    int min_n = std::max(4, target + 1);
    int n = rng.range(min_n, max_n);
    return random_unicyclic(rng, n, target);
}

void check_report(const Graph& g, const CaseReport& report, int ell) {
    CAPTURE(to_graph6(g));
    CAPTURE(report.case_label);
    CHECK(report.witness.size() == report.value);
    CHECK(is_leaky_forcing_set(g, report.witness, ell).ok);
}

}  // namespace

TEST_CASE("tree formula") {
    CHECK(tree_value(make_path(7), 1).value == 2);
    CHECK(tree_value(make_star(6), 1).value == 5);
    CHECK_THROWS_AS(tree_value(make_cycle(4), 1), std::domain_error);
    CHECK_THROWS_AS(tree_value(make_path(4), 0), std::domain_error);

    Rng rng(100);
    for (int trial = 0; trial < 40; ++trial) {
        Graph t = random_tree(rng, rng.range(2, 12));
        for (int ell = 1; ell <= 3; ++ell) {
            CaseReport report = tree_value(t, ell);
            CHECK(report.value == leaky_forcing_number(t, ell).value);
            check_report(t, report, ell);
        }
    }
}

TEST_CASE("one leak, girth 3 samples") {
    // triangle with one pendant: one cycle vertex of degree 3, value q+2
    Graph pendant(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CaseReport r = unicyclic_z1(pendant);
    CHECK(r.value == 3);
    CHECK(r.base_count == 1);
    CHECK(r.case_label == "girth3/single-degree-3");
    check_report(pendant, r, 1);

    // all three cycle vertices branch: value q
    Graph busy(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}, {5, 6}});
    CaseReport rb = unicyclic_z1(busy);
    CHECK(rb.case_label == "girth3/all-degree-3plus");
    CHECK(rb.value == rb.base_count);
    check_report(busy, rb, 1);

    // one degree-4 cycle vertex, others bare: value q+1
    Graph deg4(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
    CaseReport r4 = unicyclic_z1(deg4);
    CHECK(r4.case_label == "girth3/one-degree-4plus-rest-2");
    CHECK(r4.value == r4.base_count + 1);
    CHECK(r4.value == leaky_forcing_number(deg4, 1).value);
    check_report(deg4, r4, 1);

    CHECK(unicyclic_z1(make_cycle(3)).value == 2);
    CHECK_THROWS_AS(unicyclic_z1(make_path(5)), NotUnicyclicError);
}

TEST_CASE("one leak, girth 4+ samples") {
    CHECK(unicyclic_z1(make_cycle(9)).value == 2);
    CHECK(unicyclic_z1(make_cycle(9)).case_label == "girth4plus/cycle-graph");

    // C_4 with one pendant: lone degree-3 vertex, value q+2
    Graph lone(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    CaseReport r = unicyclic_z1(lone);
    CHECK(r.case_label == "girth4plus/deg3s-pairwise-far");
    CHECK(r.value == 3);
    check_report(lone, r, 1);
}

TEST_CASE("two leaks samples") {
    // C_4 with a pendant on every cycle vertex: every cycle degree 3 -> r+2
    Graph full4(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CaseReport r = unicyclic_z2(full4);
    CHECK(r.case_label == "two-leaks/girth4-all-degree-3");
    CHECK(r.value == r.base_count + 2);
    CHECK(r.value == leaky_forcing_number(full4, 2).value);
    check_report(full4, r, 2);

    // girth 5 always lands on r
    Rng rng(321);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_unicyclic(rng, rng.range(6, 12), 5);
        CaseReport g5 = unicyclic_z2(g);
        CHECK(g5.case_label == "two-leaks/girth5plus");
        CHECK(g5.value == g5.base_count);
    }

    // bare cycles: every vertex is forced into the set at two leaks
    CHECK(unicyclic_z2(make_cycle(3)).value == 3);
    CHECK(unicyclic_z2(make_cycle(4)).value == 4);
    CHECK(unicyclic_z2(make_cycle(8)).value == 8);
}

TEST_CASE("three-plus leaks") {
    Rng rng(777);
    Graph g = random_unicyclic(rng, 9, 3);
    CHECK_THROWS_AS(unicyclic_zl(g, 2), std::domain_error);
    CaseReport r = unicyclic_zl(g, 3);
    CHECK(r.value == leaky_forcing_number(g, 3).value);
    check_report(g, r, 3);

    // triangle with three pendant leaves on every cycle vertex: the cycle
    // vertices have degree 5, so only the nine leaves count at ell = 3
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}};
    int next = 3;
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 3; ++i) edges.emplace_back(c, next++);
    Graph bushy(12, edges);
    CaseReport rb = unicyclic_zl(bushy, 3);
    CHECK(rb.value == 9);
    CHECK(rb.value == leaky_forcing_number(bushy, 3).value);
    check_report(bushy, rb, 3);
}

TEST_CASE("unicyclic closed forms match the exact solver on a mixed corpus") {
    Rng rng(20240601);
    std::map<std::string, int> labels_seen;
    for (int i = 0; i < 120; ++i) {
        Graph g = corpus_unicyclic(rng, i, 11);
        for (int ell = 1; ell <= 3; ++ell) {
            CaseReport report = unicyclic_value(g, ell);
            ++labels_seen[report.case_label];
            int exact = leaky_forcing_number(g, ell).value;
            CAPTURE(to_graph6(g));
            CAPTURE(ell);
            CAPTURE(report.case_label);
            CHECK(report.value == exact);
            check_report(g, report, ell);
        }
    }
    CHECK(labels_seen.size() >= 8);  // the corpus exercises a spread of cases
}

TEST_CASE("family values") {
    CHECK(family_value(FamilySpec::parse("path:6"), 0).value == 1);
    CHECK(family_value(FamilySpec::parse("path:6"), 1).value == 2);
    CHECK(family_value(FamilySpec::parse("path:6"), 2).value == 6);
    CHECK(family_value(FamilySpec::parse("cycle:9"), 1).value == 2);
    CHECK(family_value(FamilySpec::parse("cycle:4"), 2).value == 4);
    CHECK(family_value(FamilySpec::parse("complete:7"), 1).value == 6);
    CHECK(family_value(FamilySpec::parse("complete:7"), 5).value == 6);
    // once every blue vertex can be leaked, nothing short of everything works
    CHECK(family_value(FamilySpec::parse("complete:7"), 6).value == 7);
    CHECK(family_value(FamilySpec::parse("star:6"), 1).value == 5);
    CHECK(family_value(FamilySpec::parse("complete_minus_edge:5"), 1).value == 4);
    CHECK(family_value(FamilySpec::parse("complete_join_leaf:5"), 1).value == 4);

    CHECK(family_value(FamilySpec::parse("petersen:12,2"), 1).value == 6);
    CHECK(family_value(FamilySpec::parse("petersen:11,3"), 1).value == 7);
    CHECK(family_value(FamilySpec::parse("petersen:40,9"), 3).value == 80);

    CHECK_THROWS_AS(family_value(FamilySpec::parse("petersen:9,1"), 2), NotCovered);
    CHECK_THROWS_AS(family_value(FamilySpec::parse("petersen:9,4"), 1), NotCovered);
    CHECK_THROWS_AS(family_value(FamilySpec::parse("star:6"), 0), NotCovered);
    CHECK_THROWS_AS(family_value(FamilySpec::parse("complete_minus_edge:5"), 2), NotCovered);
}

TEST_CASE("family witnesses pass adversarially") {
    struct Cell {
        const char* spec;
        int ell;
    };
    const Cell cells[] = {
        {"path:6", 0},   {"path:6", 1},   {"path:5", 3},    {"cycle:7", 1},
        {"cycle:5", 2},  {"complete:6", 1}, {"complete:5", 4}, {"star:7", 1},
        {"star:7", 2},   {"complete_minus_edge:6", 1},        {"complete_join_leaf:6", 1},
        {"petersen:5,2", 1}, {"petersen:8,2", 1}, {"petersen:6,2", 1}, {"petersen:10,2", 1},
        {"petersen:7,3", 1}, {"petersen:9,3", 1}, {"petersen:11,3", 1}, {"petersen:4,1", 1},
        {"petersen:3,1", 0}, {"petersen:3,1", 2}, {"petersen:6,1", 0},
    };
    for (const Cell& cell : cells) {
        FamilySpec spec = FamilySpec::parse(cell.spec);
        CaseReport report = family_value(spec, cell.ell);
        Graph g = generate(spec);
        CAPTURE(cell.spec);
        CAPTURE(cell.ell);
        CHECK(report.witness.size() == report.value);
        CHECK(is_leaky_forcing_set(g, report.witness, cell.ell).ok);
    }
}

TEST_CASE("family values agree with the exact solver where feasible") {
    struct Cell {
        const char* spec;
        int ell;
    };
    const Cell cells[] = {
        {"path:7", 0},  {"path:7", 1},  {"path:7", 2},  {"cycle:8", 0},    {"cycle:8", 1},
        {"cycle:8", 2}, {"complete:6", 1}, {"complete:6", 4}, {"complete:6", 5},
        {"star:7", 1},  {"star:7", 3},  {"complete_minus_edge:6", 1},
        {"complete_join_leaf:6", 1},    {"petersen:4,1", 0}, {"petersen:4,1", 1},
        {"petersen:6,1", 1}, {"petersen:3,1", 1}, {"petersen:8,3", 1}, {"petersen:10,3", 1},
    };
    for (const Cell& cell : cells) {
        FamilySpec spec = FamilySpec::parse(cell.spec);
        CAPTURE(cell.spec);
        CAPTURE(cell.ell);
        CHECK(family_value(spec, cell.ell).value ==
              leaky_forcing_number(generate(spec), cell.ell).value);
    }
}

TEST_CASE("formula dispatcher") {
    Rng rng(5);
    Graph t = random_tree(rng, 8);
    CHECK(formula_value(t, 2).theorem == "tree-low-degree");
    Graph u = random_unicyclic(rng, 8, 4);
    CHECK(formula_value(u, 1).theorem == "unicyclic-girth4plus");
    CHECK_THROWS_AS(formula_value(make_complete(4), 1), NotCovered);
    CHECK_THROWS_AS(formula_value(t, 0), NotCovered);
}
