#include "leaky/random_gen.hpp"

#include <numeric>

namespace leaky {

Graph random_tree(Rng& rng, int n) {
    if (n < 2) throw std::domain_error("random_tree: n must be >= 2");
    if (n == 2) return Graph(2, {{0, 1}});
    // Prüfer sequence of length n-2, decoded by the standard degree-count
    // procedure; uniform over labeled trees.
    std::vector<int> code(n - 2);
    for (int& c : code) c = rng.range(0, n - 1);
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];

    std::vector<std::pair<int, int>> edges;
    VertexSet leaves(n);
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int c : code) {
        int leaf = leaves.first();
        leaves.erase(leaf);
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    int a = leaves.first();
    int b = leaves.next(a);
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph random_unicyclic(Rng& rng, int n, int target_girth) {
    if (n < 3) throw std::domain_error("random_unicyclic: n must be >= 3");
    if (target_girth != 0 && (target_girth < 3 || target_girth > n))
        throw std::domain_error("random_unicyclic: girth out of range");

    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph tree = random_tree(rng, n);
        // Adding edge {u,v} creates a cycle of length dist(u,v) + 1.
        int u = rng.range(0, n - 1);
        std::vector<int> dist = bfs_distances(tree, u);
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v) {
            if (v == u || tree.has_edge(u, v)) continue;
            if (target_girth == 0 || dist[v] == target_girth - 1) candidates.push_back(v);
        }
        if (candidates.empty()) continue;
        int v = candidates[rng.below(candidates.size())];
        return add_edge(tree, u, v);
    }
    throw std::runtime_error("random_unicyclic: girth target unreachable");
}

Graph random_connected_graph(Rng& rng, int n, double edge_prob) {
    if (n < 1) throw std::domain_error("random_connected_graph: n must be >= 1");
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(edge_prob)) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

}  // namespace leaky
