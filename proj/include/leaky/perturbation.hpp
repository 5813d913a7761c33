#ifndef LEAKY_PERTURBATION_HPP
#define LEAKY_PERTURBATION_HPP

#include <utility>

#include "leaky/families.hpp"
#include "leaky/graph.hpp"
#include "leaky/solver.hpp"

namespace leaky {

// How Z_ell moves under removing one edge or one vertex. The delta follows
// each bound's own orientation: before - after for edges (bounded by [-2,2]),
// after - before for vertices (bounded by [-1, deg(v)]). When removal
// disconnects, the value of the remainder is the component sum.
struct DeltaReport {
    enum class Kind { edge, vertex } kind;
    int ell = 0;
    int before = 0;  // Z_ell(G)
    int after = 0;   // Z_ell(G-e) or Z_ell(G-v)
    int delta = 0;
    int bound_low = 0;
    int bound_high = 0;
    bool bound_ok = false;
};

DeltaReport edge_delta(const Graph& g, std::pair<int, int> e, int ell,
                       const SolveOptions& options = {});
DeltaReport vertex_delta(const Graph& g, int v, int ell, const SolveOptions& options = {});

// A tightness construction plus the element whose removal realizes the
// extreme delta.
struct Gadget {
    Graph graph;
    std::pair<int, int> edge{-1, -1};  // set for edge gadgets
    int vertex = -1;                   // set for vertex gadgets
    int expected_delta = 0;
};

// double_star_bridge(ell):  delta -2 for edge removal (the center bridge).
// p6_plus_e:                delta +2 at ell = 1 (the chord).
// clique_leaf_quad(ell>=2): delta +2 (the edge between the two leaf-poor
//                           clique vertices).
// shared_clique_leaf(ell):  delta -1 for vertex removal (the leaf). Cliques
//                           have order ell+1 so each non-shared vertex has
//                           degree exactly ell.
// deep_star_tree(ell,d>ell): delta d for removing the root.
Gadget make_gadget(GadgetKind kind, int ell, int d = 0);

// Every minimal fort of G-e intersects e or is a fort of G, and vice versa.
bool fort_transfer_check(const Graph& g, std::pair<int, int> e, int ell, int cap = 20);

}  // namespace leaky

#endif
