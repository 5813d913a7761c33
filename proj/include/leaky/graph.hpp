#ifndef LEAKY_GRAPH_HPP
#define LEAKY_GRAPH_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "leaky/vertex_set.hpp"

namespace leaky {

// Simple undirected graph with dense vertex ids 0..n-1, no self-loops,
// symmetric adjacency. Immutable after construction; safe to share across
// threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
        if (n < 0 || n > VertexSet::max_vertices)
            throw std::invalid_argument("Graph: vertex count " + std::to_string(n) +
                                        " out of range 0.." + std::to_string(VertexSet::max_vertices));
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).size(); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].contains(v);
    }

    // Edges as (u,v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " not in 0.." +
                                    std::to_string(n_ - 1));
    }

    void add_edge_checked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v)) return;  // duplicate edges accepted idempotently
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++edge_count_;
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

// --- structural queries ---------------------------------------------------

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

// Induced subgraph on the given vertices. ids[i] is the original id of new
// vertex i (ascending).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> ids;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// --- perturbations --------------------------------------------------------

// Removing a vertex relabels ids to stay contiguous (ids above v shift down
// by one). old_to_new maps original ids to new ones, with -1 for v itself.
struct VertexRemoval {
    Graph graph;
    std::vector<int> old_to_new;
};
VertexRemoval remove_vertex(const Graph& g, int v);

Graph remove_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, int u, int v);

// --- unicyclic structure ---------------------------------------------------

// Decomposition of a unicyclic graph: its unique cycle c_1..c_g in traversal
// order, and for every cycle vertex the pendant trees hanging off it
// (components of G - C, each attached to exactly one cycle vertex).
struct CycleDecomposition {
    std::vector<int> cycle;                      // cycle vertex ids in cyclic order
    int girth = 0;                               // = cycle.size()
    std::vector<std::vector<VertexSet>> trees;   // trees[i] = pendant trees of cycle[i]
    std::vector<int> cycle_degrees;              // degree in G of cycle[i]

    int cycle_degree(int i) const { return cycle_degrees[i]; }
};

struct NotUnicyclicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requires a connected graph with edge_count == vertex_count; throws
// NotUnicyclicError otherwise. The cycle is found by stripping leaves until a
// 2-regular core remains, then walking it starting from its lowest id toward
// its lower-id core neighbor.
CycleDecomposition unique_cycle(const Graph& g);

bool is_tree(const Graph& g);

// --- exhaustive enumeration -------------------------------------------------

// Visits every labeled simple connected graph on n vertices exactly once
// (no isomorphism reduction), 2 <= n <= 7. Return false from the callback to
// stop early.
void enumerate_connected_graphs(int n, const std::function<bool(const Graph&)>& visit);

uint64_t count_connected_graphs(int n);

}  // namespace leaky

#endif
