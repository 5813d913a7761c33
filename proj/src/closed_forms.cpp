#include "leaky/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>

#include "leaky/graph_io.hpp"
#include "leaky/petersen.hpp"

namespace leaky {

namespace {

VertexSet low_degree_vertices(const Graph& g, int ell) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= ell) out.insert(v);
    return out;
}

VertexSet leaves_of(const Graph& g) { return low_degree_vertices(g, 1); }

int cycle_distance(int i, int j, int g) {
    int d = std::abs(i - j) % g;
    return std::min(d, g - d);
}

}  // namespace

CaseReport tree_value(const Graph& g, int ell) {
    if (!is_tree(g)) throw std::domain_error("tree_value: input is not a tree");
    if (ell < 1) throw std::domain_error("tree_value: requires ell >= 1");
    CaseReport report;
    report.theorem = "tree-low-degree";
    report.case_label = "tree/low-degree-count";
    report.witness = low_degree_vertices(g, ell);
    report.value = report.witness.size();
    report.base_count = report.value;
    return report;
}

// --- one leak, girth 3 ------------------------------------------------------
//
// Cases keyed by the multiset of the three cycle-vertex degrees:
//   all >= 3, or two >= 4          -> q     (leaves alone suffice)
//   (2,2,2) or (3,2,2)             -> q + 2 (two cycle vertices needed)
//   (>=4,2,2) or (*,3,2)           -> q + 1
CaseReport girth3_z1(const Graph& g, const CycleDecomposition& dec) {
    CaseReport report;
    report.theorem = "unicyclic-girth3";
    VertexSet q_set = leaves_of(g);
    report.base_count = q_set.size();
    report.witness = q_set;

    std::array<int, 3> deg{dec.cycle_degrees[0], dec.cycle_degrees[1], dec.cycle_degrees[2]};
    std::array<int, 3> sorted = deg;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    auto add_cycle_vertices_of_degree2 = [&](int how_many) {
        for (int i = 0; i < 3 && how_many > 0; ++i)
            if (deg[i] == 2) {
                report.witness.insert(dec.cycle[i]);
                --how_many;
            }
    };

    if (sorted[2] >= 3) {
        report.case_label = "girth3/all-degree-3plus";
        report.value = report.base_count;
    } else if (sorted[1] >= 4) {
        report.case_label = "girth3/two-degree-4plus";
        report.value = report.base_count;
    } else if (sorted[0] == 2) {
        report.case_label = "girth3/triangle";
        report.value = report.base_count + 2;
        report.witness.insert(dec.cycle[0]);
        report.witness.insert(dec.cycle[1]);
    } else if (sorted[0] == 3 && sorted[1] == 2) {
        report.case_label = "girth3/single-degree-3";
        report.value = report.base_count + 2;
        add_cycle_vertices_of_degree2(2);
    } else if (sorted[1] == 3) {
        report.case_label = "girth3/degree-3-pair";
        report.value = report.base_count + 1;
        add_cycle_vertices_of_degree2(1);
    } else {
        // sorted: (>=4, 2, 2)
        report.case_label = "girth3/one-degree-4plus-rest-2";
        report.value = report.base_count + 1;
        add_cycle_vertices_of_degree2(1);
    }
    return report;
}

// --- one leak, girth >= 4 ---------------------------------------------------
CaseReport girth4plus_z1(const Graph& g, const CycleDecomposition& dec) {
    CaseReport report;
    report.theorem = "unicyclic-girth4plus";
    VertexSet q_set = leaves_of(g);
    report.base_count = q_set.size();
    report.witness = q_set;

    int girth = dec.girth;
    const std::vector<int>& cd = dec.cycle_degrees;
    auto at = [&](int i) { return cd[((i % girth) + girth) % girth]; };
    auto cyc = [&](int i) { return dec.cycle[((i % girth) + girth) % girth]; };

    // value q: two disjoint adjacent pairs of degree >= 3
    std::vector<int> adjacent_pairs;  // pair (i, i+1)
    for (int i = 0; i < girth; ++i)
        if (at(i) >= 3 && at(i + 1) >= 3) adjacent_pairs.push_back(i);
    bool disjoint_pairs = false;
    for (size_t a = 0; a < adjacent_pairs.size() && !disjoint_pairs; ++a)
        for (size_t b = a + 1; b < adjacent_pairs.size() && !disjoint_pairs; ++b)
            if (cycle_distance(adjacent_pairs[a], adjacent_pairs[b], girth) > 1)
                disjoint_pairs = true;
    if (disjoint_pairs) {
        report.case_label = "girth4plus/two-disjoint-adjacent-pairs";
        report.value = report.base_count;
        return report;
    }

    // value q: a degree >= 4 vertex with a degree >= 4 neighbor, or between
    // two degree-3 neighbors
    for (int i = 0; i < girth; ++i) {
        if (at(i) < 4) continue;
        if (at(i - 1) >= 4 || at(i + 1) >= 4) {
            report.case_label = "girth4plus/deg4-adjacent-deg4";
            report.value = report.base_count;
            return report;
        }
        if (at(i - 1) == 3 && at(i + 1) == 3) {
            report.case_label = "girth4plus/deg4-between-deg3s";
            report.value = report.base_count;
            return report;
        }
    }

    std::vector<int> threes;
    int max_cycle_degree = 2;
    for (int i = 0; i < girth; ++i) {
        if (cd[i] == 3) threes.push_back(i);
        max_cycle_degree = std::max(max_cycle_degree, cd[i]);
    }

    // value q+2: exactly two degree-3 cycle vertices, adjacent, rest degree 2
    if (max_cycle_degree == 3 && threes.size() == 2 &&
        cycle_distance(threes[0], threes[1], girth) == 1) {
        report.case_label = "girth4plus/exactly-one-adjacent-deg3-pair";
        report.value = report.base_count + 2;
        report.witness.insert(cyc(0));
        report.witness.insert(cyc(1));
        return report;
    }

    // value q+2: all cycle degrees <= 3 and degree-3 vertices pairwise at
    // cycle distance >= 3
    if (max_cycle_degree <= 3) {
        bool far_apart = true;
        for (size_t a = 0; a < threes.size() && far_apart; ++a)
            for (size_t b = a + 1; b < threes.size() && far_apart; ++b)
                if (cycle_distance(threes[a], threes[b], girth) < 3) far_apart = false;
        if (far_apart) {
            report.case_label =
                max_cycle_degree == 2 ? "girth4plus/cycle-graph" : "girth4plus/deg3s-pairwise-far";
            report.value = report.base_count + 2;
            report.witness.insert(cyc(0));
            report.witness.insert(cyc(1));
            return report;
        }
    }

    // value q+1, witness per the matching configuration
    report.value = report.base_count + 1;
    for (int i = 0; i < girth; ++i) {
        if (at(i) < 4) continue;
        if (at(i - 1) == 3 || at(i + 1) == 3) {
            report.case_label = "girth4plus/deg4-with-deg3-neighbor";
            report.witness.insert(at(i - 1) == 3 ? cyc(i - 1) : cyc(i + 1));
            return report;
        }
    }
    for (int i = 0; i < girth; ++i) {
        if (at(i) >= 4) {
            report.case_label = "girth4plus/deg4-isolated";
            report.witness.insert(cyc(i - 1));
            return report;
        }
    }
    for (int i = 0; i < girth; ++i) {
        if (at(i - 1) == 3 && at(i) == 3 && at(i + 1) == 3) {
            report.case_label = "girth4plus/three-consecutive-deg3";
            report.witness.insert(cyc(i));
            return report;
        }
    }
    for (int i = 0; i < girth; ++i) {
        if (at(i - 1) == 3 && at(i) == 2 && at(i + 1) == 3) {
            report.case_label = "girth4plus/deg3-gap2";
            report.witness.insert(cyc(i));
            return report;
        }
    }
    for (int i = 0; i < girth; ++i) {
        if (at(i) == 3 && at(i + 1) == 3) {
            for (int j : threes) {
                if (cycle_distance(j, i, girth) == 0 || cycle_distance(j, i + 1, girth) == 0)
                    continue;
                report.case_label = "girth4plus/adjacent-pair-plus-far-deg3";
                report.witness.insert(cyc(j + 1));
                return report;
            }
        }
    }
    throw std::logic_error("girth4plus_z1: unmatched case for graph " + to_graph6(g));
}

CaseReport unicyclic_z1(const Graph& g) {
    CycleDecomposition dec = unique_cycle(g);
    return dec.girth == 3 ? girth3_z1(g, dec) : girth4plus_z1(g, dec);
}

// --- two leaks ---------------------------------------------------------------
CaseReport unicyclic_z2(const Graph& g) {
    CycleDecomposition dec = unique_cycle(g);
    CaseReport report;
    report.theorem = "unicyclic-two-leaks";
    VertexSet r_set = low_degree_vertices(g, 2);
    report.base_count = r_set.size();
    report.witness = r_set;

    int girth = dec.girth;
    std::vector<int> threes;  // cycle indices with degree exactly 3
    for (int i = 0; i < girth; ++i)
        if (dec.cycle_degrees[i] == 3) threes.push_back(i);

    if (girth >= 5) {
        report.case_label = "two-leaks/girth5plus";
        report.value = report.base_count;
        return report;
    }

    if (girth == 3) {
        if (threes.size() == 3) {
            report.case_label = "two-leaks/girth3-all-degree-3";
            report.value = report.base_count + 2;
            report.witness.insert(dec.cycle[0]);
            report.witness.insert(dec.cycle[1]);
        } else if (threes.size() == 2) {
            report.case_label = "two-leaks/girth3-two-degree-3";
            report.value = report.base_count + 1;
            report.witness.insert(dec.cycle[threes[0]]);
        } else {
            report.case_label = "two-leaks/girth3-at-most-one-degree-3";
            report.value = report.base_count;
        }
        return report;
    }

    // girth 4
    if (threes.size() == 4) {
        report.case_label = "two-leaks/girth4-all-degree-3";
        report.value = report.base_count + 2;
        report.witness.insert(dec.cycle[0]);
        report.witness.insert(dec.cycle[1]);
        return report;
    }
    bool nonadjacent_pair = false;
    int member_of_pair = -1;
    for (size_t a = 0; a < threes.size() && !nonadjacent_pair; ++a)
        for (size_t b = a + 1; b < threes.size() && !nonadjacent_pair; ++b)
            if (cycle_distance(threes[a], threes[b], 4) == 2) {
                nonadjacent_pair = true;
                // pick a member with a cycle neighbor of degree != 3
                for (int idx : {threes[a], threes[b]}) {
                    if (dec.cycle_degrees[(idx + 1) % 4] != 3 ||
                        dec.cycle_degrees[(idx + 3) % 4] != 3) {
                        member_of_pair = idx;
                        break;
                    }
                }
            }
    if (nonadjacent_pair || threes.size() == 3) {
        report.case_label = "two-leaks/girth4-spread-degree-3";
        report.value = report.base_count + 1;
        report.witness.insert(dec.cycle[member_of_pair]);
        return report;
    }
    report.case_label = "two-leaks/girth4-adjacent-or-few-degree-3";
    report.value = report.base_count;
    return report;
}

CaseReport unicyclic_zl(const Graph& g, int ell) {
    if (ell < 3)
        throw std::domain_error("unicyclic_zl: requires ell >= 3 (use the one/two-leak classifiers)");
    unique_cycle(g);  // validates the input shape
    CaseReport report;
    report.theorem = "unicyclic-three-plus-leaks";
    report.case_label = "three-plus-leaks/low-degree-count";
    report.witness = low_degree_vertices(g, ell);
    report.value = report.witness.size();
    report.base_count = report.value;
    return report;
}

CaseReport unicyclic_value(const Graph& g, int ell) {
    if (ell == 1) return unicyclic_z1(g);
    if (ell == 2) return unicyclic_z2(g);
    if (ell >= 3) return unicyclic_zl(g, ell);
    throw NotCovered("unicyclic closed forms start at one leak", "unicyclic with ell >= 1");
}

// --- named families -----------------------------------------------------------

namespace {

CaseReport make_family_report(const char* theorem, const char* label, int value,
                              VertexSet witness) {
    CaseReport report;
    report.theorem = theorem;
    report.case_label = label;
    report.value = value;
    report.witness = std::move(witness);
    return report;
}

VertexSet range_set(int n, int count) {
    VertexSet s(n);
    for (int v = 0; v < count; ++v) s.insert(v);
    return s;
}

}  // namespace

CaseReport family_value(const FamilySpec& spec, int ell) {
    if (ell < 0) throw std::domain_error("family_value: ell must be >= 0");
    int n = spec.n;
    switch (spec.family) {
        case Family::path: {
            Graph g = make_path(n);
            if (ell == 0)
                return make_family_report("path-basic", "path/no-leaks", 1, VertexSet(n, {0}));
            if (ell == 1)
                return make_family_report("path-basic", "path/one-leak", 2, VertexSet(n, {0, n - 1}));
            return make_family_report("path-basic", "path/two-plus-leaks", n, VertexSet::full(n));
        }
        case Family::cycle: {
            make_cycle(n);
            if (ell <= 1)
                return make_family_report("cycle-basic", "cycle/at-most-one-leak", 2,
                                          VertexSet(n, {0, 1}));
            return make_family_report("cycle-basic", "cycle/two-plus-leaks", n, VertexSet::full(n));
        }
        case Family::complete: {
            make_complete(n);
            if (n < 2) throw NotCovered("complete graph closed form needs n >= 2", "complete:n>=2");
            // The adversary can disable all n-1 blue vertices once ell reaches
            // n-1, so the n-1 value holds only up to ell = n-2.
            if (ell <= n - 2)
                return make_family_report("complete-basic", "complete/fewer-leaks-than-blues", n - 1,
                                          range_set(n, n - 1));
            return make_family_report("complete-basic", "complete/saturated", n, VertexSet::full(n));
        }
        case Family::star: {
            Graph g = make_star(n);
            if (ell < 1)
                throw NotCovered("star closed form (tree rule) needs ell >= 1",
                                 "star with ell >= 1");
            CaseReport report = tree_value(g, ell);
            report.case_label = "tree/star";
            return report;
        }
        case Family::complete_minus_edge: {
            make_complete_minus_edge(n);
            if (ell != 1)
                throw NotCovered("complete-minus-edge has a published value only at ell = 1",
                                 "complete_minus_edge with ell = 1");
            return make_family_report("one-leak-max-family", "max-family/complete-minus-edge", n - 1,
                                      range_set(n, n - 1));
        }
        case Family::complete_join_leaf: {
            make_complete_join_leaf(n);
            if (ell != 1)
                throw NotCovered("complete-plus-leaf has a published value only at ell = 1",
                                 "complete_join_leaf with ell = 1");
            VertexSet witness = VertexSet::full(n);
            witness.erase(0);
            return make_family_report("one-leak-max-family", "max-family/complete-join-leaf", n - 1,
                                      std::move(witness));
        }
        case Family::generalized_petersen:
            return petersen_family_value(n, spec.k, ell);
        case Family::tree:
        case Family::unicyclic: {
            Graph g = generate(spec);
            return spec.family == Family::tree ? tree_value(g, ell) : unicyclic_value(g, ell);
        }
        case Family::gadget:
            throw NotCovered("gadgets have no closed form", "exact solver");
    }
    throw std::domain_error("family_value: unknown family");
}

CaseReport formula_value(const Graph& g, int ell) {
    if (is_tree(g)) {
        if (ell < 1) throw NotCovered("tree closed form needs ell >= 1", "tree with ell >= 1");
        return tree_value(g, ell);
    }
    if (is_connected(g) && g.edge_count() == g.vertex_count()) return unicyclic_value(g, ell);
    throw NotCovered("no closed form for this graph shape", "trees and unicyclic graphs");
}

std::string case_report_json(const CaseReport& report) {
    nlohmann::ordered_json out;
    out["value"] = report.value;
    out["theorem"] = report.theorem;
    out["case"] = report.case_label;
    if (report.base_count >= 0) out["base_count"] = report.base_count;
    nlohmann::ordered_json witness = nlohmann::ordered_json::array();
    for (int v = report.witness.first(); v >= 0; v = report.witness.next(v)) witness.push_back(v);
    out["witness"] = witness;
    return out.dump();
}

}  // namespace leaky
