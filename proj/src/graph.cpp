#include "leaky/graph.hpp"

#include <algorithm>

namespace leaky {

std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    VertexSet seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(n);
        std::vector<int> stack{s};
        comp.insert(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const VertexSet& nb = g.neighbors(v);
            VertexSet fresh = nb - comp;
            for (int w = fresh.first(); w >= 0; w = fresh.next(w)) {
                comp.insert(w);
                stack.push_back(w);
            }
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return components(g).size() == 1;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    dist[src] = 0;
    std::vector<int> frontier{src};
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        std::vector<int> next;
        for (int v : frontier) {
            const VertexSet& nb = g.neighbors(v);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (dist[w] < 0) {
                    dist[w] = d;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> ids = vertices.to_vector();
    std::vector<int> old_to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < ids.size(); ++i) old_to_new[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < ids.size(); ++i) {
        const VertexSet& nb = g.neighbors(ids[i]);
        for (int w = nb.next(ids[i]); w >= 0; w = nb.next(w))
            if (old_to_new[w] >= 0) edges.emplace_back(static_cast<int>(i), old_to_new[w]);
    }
    return {Graph(static_cast<int>(ids.size()), edges), std::move(ids)};
}

VertexRemoval remove_vertex(const Graph& g, int v) {
    int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::out_of_range("remove_vertex: no such vertex");
    std::vector<int> old_to_new(n);
    for (int u = 0; u < n; ++u) old_to_new[u] = u < v ? u : u - 1;
    old_to_new[v] = -1;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) edges.emplace_back(old_to_new[a], old_to_new[b]);
    return {Graph(n - 1, edges), std::move(old_to_new)};
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::out_of_range("remove_edge: no such edge");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) edges.emplace_back(a, b);
    return Graph(g.vertex_count(), edges);
}

Graph add_edge(const Graph& g, int u, int v) {
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.vertex_count(), edges);
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

CycleDecomposition unique_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n)
        throw NotUnicyclicError("unique_cycle: graph has " + std::to_string(g.edge_count()) +
                                " edges on " + std::to_string(n) + " vertices (need exactly n)");
    if (!is_connected(g)) throw NotUnicyclicError("unique_cycle: graph is disconnected");

    // Strip leaves until only the 2-regular core (the cycle) remains.
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) queue.push_back(v);
    VertexSet removed(n);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        removed.insert(v);
        const VertexSet& nb = g.neighbors(v);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (removed.contains(w)) continue;
            if (--deg[w] == 1) queue.push_back(w);
        }
    }

    VertexSet core = removed.complement();
    CycleDecomposition dec;
    dec.girth = core.size();

    // Walk the cycle from its lowest id toward its lower-id core neighbor.
    int start = core.first();
    VertexSet core_nb_start = g.neighbors(start) & core;
    int prev = start;
    int cur = core_nb_start.first();
    dec.cycle.push_back(start);
    while (cur != start) {
        dec.cycle.push_back(cur);
        VertexSet nb = g.neighbors(cur) & core;
        nb.erase(prev);
        prev = cur;
        cur = nb.first();
    }

    // Pendant trees: components of G - C, attached to the unique adjacent
    // cycle vertex, listed in ascending order of their smallest id.
    std::vector<int> cycle_index(n, -1);
    for (size_t i = 0; i < dec.cycle.size(); ++i) cycle_index[dec.cycle[i]] = static_cast<int>(i);
    dec.trees.resize(dec.girth);
    dec.cycle_degrees.resize(dec.girth);
    for (int i = 0; i < dec.girth; ++i) dec.cycle_degrees[i] = g.degree(dec.cycle[i]);

    VertexSet assigned = core;
    for (int s = 0; s < n; ++s) {
        if (assigned.contains(s)) continue;
        VertexSet tree(n);
        tree.insert(s);
        int attach = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const VertexSet& nb = g.neighbors(v);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (core.contains(w)) {
                    attach = cycle_index[w];
                } else if (!tree.contains(w)) {
                    tree.insert(w);
                    stack.push_back(w);
                }
            }
        }
        assigned |= tree;
        dec.trees[attach].push_back(tree);
    }
    return dec;
}

void enumerate_connected_graphs(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 2 || n > 7)
        throw std::domain_error("enumerate_connected_graphs: n must be in 2..7, got " +
                                std::to_string(n));
    int num_slots = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slot(num_slots);
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slot[idx++] = {u, v};

    std::vector<std::pair<int, int>> edges;
    for (uint64_t mask = 0; mask < (uint64_t{1} << num_slots); ++mask) {
        edges.clear();
        for (int e = 0; e < num_slots; ++e)
            if (mask & (uint64_t{1} << e)) edges.push_back(slot[e]);
        if (static_cast<int>(edges.size()) < n - 1) continue;
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        if (!visit(g)) return;
    }
}

uint64_t count_connected_graphs(int n) {
    uint64_t count = 0;
    enumerate_connected_graphs(n, [&](const Graph&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace leaky
