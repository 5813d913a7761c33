#include "leaky/perturbation.hpp"

#include "leaky/forts.hpp"

namespace leaky {

DeltaReport edge_delta(const Graph& g, std::pair<int, int> e, int ell, const SolveOptions& options) {
    DeltaReport report;
    report.kind = DeltaReport::Kind::edge;
    report.ell = ell;
    report.before = leaky_forcing_number(g, ell, options).value;
    report.after = leaky_forcing_number(remove_edge(g, e.first, e.second), ell, options).value;
    report.delta = report.before - report.after;
    report.bound_low = -2;
    report.bound_high = 2;
    report.bound_ok = report.delta >= report.bound_low && report.delta <= report.bound_high;
    return report;
}

DeltaReport vertex_delta(const Graph& g, int v, int ell, const SolveOptions& options) {
    DeltaReport report;
    report.kind = DeltaReport::Kind::vertex;
    report.ell = ell;
    report.before = leaky_forcing_number(g, ell, options).value;
    report.after = leaky_forcing_number(remove_vertex(g, v).graph, ell, options).value;
    report.delta = report.after - report.before;
    report.bound_low = -1;
    report.bound_high = g.degree(v);
    report.bound_ok = report.delta >= report.bound_low && report.delta <= report.bound_high;
    return report;
}

Gadget make_gadget(GadgetKind kind, int ell, int d) {
    switch (kind) {
        case GadgetKind::double_star_bridge: {
            if (ell < 1) throw std::domain_error("double_star_bridge: ell must be >= 1");
            // Centers 0 and 1, ell leaves each; removing the bridge drops the
            // value by 2 (each center's degree falls to ell).
            std::vector<std::pair<int, int>> edges{{0, 1}};
            for (int i = 0; i < ell; ++i) {
                edges.emplace_back(0, 2 + i);
                edges.emplace_back(1, 2 + ell + i);
            }
            Gadget gadget{Graph(2 + 2 * ell, edges)};
            gadget.edge = {0, 1};
            gadget.expected_delta = -2;
            return gadget;
        }
        case GadgetKind::p6_plus_e: {
            if (ell != 1) throw std::domain_error("p6_plus_e: defined for ell = 1");
            Graph g = add_edge(make_path(6), 1, 4);
            Gadget gadget{g};
            gadget.edge = {1, 4};
            gadget.expected_delta = 2;
            return gadget;
        }
        case GadgetKind::clique_leaf_quad: {
            if (ell < 2) throw std::domain_error("clique_leaf_quad: ell must be >= 2");
            // K_4 on v[i][j]; floor(ell/2) leaves on each v[i][0], ceil(ell/2)
            // on each v[i][1], and floor(ell/2) shared vertices per pair
            // adjacent to both members. Removing v[0][0]v[1][0] drops the
            // value by 2.
            int lo = ell / 2, hi = ell - lo;
            std::vector<std::pair<int, int>> edges;
            // ids: 0=v00 1=v01 2=v10 3=v11, then per-pair leaves and shared
            int v00 = 0, v01 = 1, v10 = 2, v11 = 3;
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) edges.emplace_back(a, b);
            int next = 4;
            for (int pair = 0; pair < 2; ++pair) {
                int first = pair == 0 ? v00 : v10;
                int second = pair == 0 ? v01 : v11;
                for (int i = 0; i < lo; ++i) edges.emplace_back(first, next++);
                for (int i = 0; i < hi; ++i) edges.emplace_back(second, next++);
                for (int i = 0; i < lo; ++i) {
                    edges.emplace_back(first, next);
                    edges.emplace_back(second, next);
                    ++next;
                }
            }
            Gadget gadget{Graph(next, edges)};
            gadget.edge = {v00, v10};
            gadget.expected_delta = 2;
            return gadget;
        }
        case GadgetKind::shared_clique_leaf: {
            if (ell < 1) throw std::domain_error("shared_clique_leaf: ell must be >= 1");
            // Two cliques of order ell+1 sharing vertex 0, leaf on the shared
            // vertex. Non-shared clique vertices have degree exactly ell, the
            // shared vertex 2*ell; removing the leaf drops the value by 1.
            std::vector<std::pair<int, int>> edges;
            auto add_clique = [&](int base) {
                std::vector<int> members{0};
                for (int i = 0; i < ell; ++i) members.push_back(base + i);
                for (size_t a = 0; a < members.size(); ++a)
                    for (size_t b = a + 1; b < members.size(); ++b)
                        edges.emplace_back(members[a], members[b]);
            };
            add_clique(1);
            add_clique(1 + ell);
            int leaf = 1 + 2 * ell;
            edges.emplace_back(0, leaf);
            Gadget gadget{Graph(leaf + 1, edges)};
            gadget.vertex = leaf;
            gadget.expected_delta = -1;
            return gadget;
        }
        case GadgetKind::deep_star_tree: {
            if (ell < 1 || d <= ell)
                throw std::domain_error("deep_star_tree: requires ell >= 1 and d > ell");
            // Root 0 with d children, each carrying ell leaves; removing the
            // root raises the value by exactly d.
            std::vector<std::pair<int, int>> edges;
            int next = 1 + d;
            for (int c = 1; c <= d; ++c) {
                edges.emplace_back(0, c);
                for (int i = 0; i < ell; ++i) edges.emplace_back(c, next++);
            }
            Gadget gadget{Graph(next, edges)};
            gadget.vertex = 0;
            gadget.expected_delta = d;
            return gadget;
        }
    }
    throw std::domain_error("unknown gadget kind");
}

bool fort_transfer_check(const Graph& g, std::pair<int, int> e, int ell, int cap) {
    Graph without = remove_edge(g, e.first, e.second);
    auto touches_edge = [&](const VertexSet& f) {
        return f.contains(e.first) || f.contains(e.second);
    };
    for (const VertexSet& f : enumerate_minimal_forts(without, ell, cap))
        if (!touches_edge(f) && !is_fort(g, f, ell)) return false;
    for (const VertexSet& f : enumerate_minimal_forts(g, ell, cap))
        if (!touches_edge(f) && !is_fort(without, f, ell)) return false;
    return true;
}

}  // namespace leaky
