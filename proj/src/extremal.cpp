#include "leaky/extremal.hpp"

#include <algorithm>

#include "leaky/forts.hpp"
#include "leaky/graph_io.hpp"
#include "leaky/solver.hpp"

namespace leaky {

const char* to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::path: return "path";
        case FamilyTag::cycle: return "cycle";
        case FamilyTag::complete: return "complete";
        case FamilyTag::star: return "star";
        case FamilyTag::complete_minus_edge: return "complete_minus_edge";
        case FamilyTag::complete_join_leaf: return "complete_join_leaf";
        case FamilyTag::none: return "none";
    }
    return "?";
}

namespace {

std::vector<int> degree_histogram(const Graph& g) {
    std::vector<int> hist(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
    return hist;
}

bool is_path_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return true;
    if (g.edge_count() != n - 1) return false;
    if (n == 2) return true;
    auto hist = degree_histogram(g);
    return hist[1] == 2 && hist[2] == n - 2;  // connectivity given
}

bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_complete_graph(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_star_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n - 1) return false;
    auto hist = degree_histogram(g);
    return hist[1] == n - 1 && hist[n - 1] == 1;
}

bool is_complete_minus_edge(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n * (n - 1) / 2 - 1) return false;
    int low = 0, high = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 2) ++low;
        else if (g.degree(v) == n - 1) ++high;
        else return false;
    }
    return low == 2 && high == n - 2;
}

bool is_complete_join_leaf(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    int leaf = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) {
            if (leaf >= 0) return false;
            leaf = v;
        }
    if (leaf < 0) return false;
    return is_complete_graph(remove_vertex(g, leaf).graph);
}

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw std::domain_error(std::string(who) + ": graph must be connected");
}

}  // namespace

ExtremalVerdict classify_min(const Graph& g) {
    if (g.vertex_count() < 2) throw std::domain_error("classify_min: needs n >= 2");
    require_connected(g, "classify_min");
    ExtremalVerdict v{ExtremalKind::min_is_2, false, FamilyTag::none};
    if (is_path_graph(g)) {
        v.matches = true;
        v.family_tag = FamilyTag::path;
    } else if (is_cycle_graph(g)) {
        v.matches = true;
        v.family_tag = FamilyTag::cycle;
    }
    return v;
}

ExtremalVerdict classify_max(const Graph& g) {
    if (g.vertex_count() < 3) throw std::domain_error("classify_max: needs n >= 3");
    require_connected(g, "classify_max");
    ExtremalVerdict v{ExtremalKind::max_is_n_minus_1, false, FamilyTag::none};
    if (is_complete_graph(g)) v.family_tag = FamilyTag::complete;
    else if (is_star_graph(g)) v.family_tag = FamilyTag::star;
    else if (is_complete_minus_edge(g)) v.family_tag = FamilyTag::complete_minus_edge;
    else if (is_complete_join_leaf(g)) v.family_tag = FamilyTag::complete_join_leaf;
    v.matches = v.family_tag != FamilyTag::none;
    return v;
}

bool minimal_fort_profile(const Graph& g, int ell, int cap) {
    int n = g.vertex_count();
    std::vector<VertexSet> expected;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= ell) expected.push_back(VertexSet(n, {v}));
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) <= ell) continue;
        for (int v = u + 1; v < n; ++v)
            if (g.degree(v) > ell) expected.push_back(VertexSet(n, {u, v}));
    }
    std::sort(expected.begin(), expected.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return VertexSet::lex_less(a, b);
    });
    return enumerate_minimal_forts(g, ell, cap) == expected;
}

AuditReport exhaustive_audit(int n_max,
                             std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (n_max < 2 || n_max > 7)
        throw std::domain_error("exhaustive_audit: n_max must be in 2..7");
    AuditReport report;
    report.n_max = n_max;
    auto start = std::chrono::steady_clock::now();

    for (int n = 2; n <= n_max && report.complete; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g) {
            if (deadline && std::chrono::steady_clock::now() >= *deadline) {
                report.complete = false;
                report.progress = "stopped at n=" + std::to_string(n) + " after " +
                                  std::to_string(report.graphs_checked) + " graphs";
                return false;
            }
            ++report.graphs_checked;
            int z1 = leaky_forcing_number(g, 1).value;

            bool min_match = classify_min(g).matches;
            if (min_match) ++report.min_matches;
            if ((z1 == 2) != min_match)
                report.violations.push_back("min classification vs Z_1=" + std::to_string(z1) +
                                            " on " + to_graph6(g));

            if (n >= 3) {
                bool max_match = classify_max(g).matches;
                if (max_match) ++report.max_matches;
                if ((z1 == n - 1) != max_match)
                    report.violations.push_back("max classification vs Z_1=" + std::to_string(z1) +
                                                " on " + to_graph6(g));
                int leaves = 0;
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) == 1) ++leaves;
                if (leaves >= 2 && z1 == n - 1 && !is_star_graph(g))
                    report.violations.push_back("two leaves with Z_1=n-1 but not a star on " +
                                                to_graph6(g));
            }
            return true;
        });
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace leaky
