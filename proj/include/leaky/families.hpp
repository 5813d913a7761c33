#ifndef LEAKY_FAMILIES_HPP
#define LEAKY_FAMILIES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leaky/graph.hpp"

namespace leaky {

enum class Family {
    path,
    cycle,
    star,
    complete,
    complete_minus_edge,
    complete_join_leaf,
    generalized_petersen,
    tree,
    unicyclic,
    gadget,
};

enum class GadgetKind {
    double_star_bridge,   // two stars joined center-to-center; drop the bridge
    p6_plus_e,            // P_6 plus a chord between 2nd and 5th vertices
    clique_leaf_quad,     // K_4 core with leaves and shared low-degree vertices
    shared_clique_leaf,   // two cliques sharing a vertex, leaf on the shared vertex
    deep_star_tree,       // root with d children, each carrying ell leaves
};

const char* to_string(Family f);
const char* to_string(GadgetKind k);

struct FamilySpec {
    Family family = Family::path;
    int n = 0;
    int k = 0;                                // generalized_petersen only
    std::vector<std::pair<int, int>> edges;   // tree / unicyclic
    GadgetKind gadget_kind = GadgetKind::double_star_bridge;
    int ell = 0;                              // gadget parameter
    int d = 0;                                // deep_star_tree branching

    // Mini-grammar used by the CLI: "name:params" with comma-separated
    // integers, e.g. "petersen:15,3", "path:6", "gadget:deep_star_tree,1,4".
    static FamilySpec parse(std::string_view text);

    std::string to_string() const;
};

// Canonical labelings (documented, relied on by closed forms):
//   path:     0-1-...-(n-1)
//   cycle:    0-1-...-(n-1)-0
//   star:     center 0, leaves 1..n-1
//   complete_minus_edge: K_n minus the edge {0,1}
//   complete_join_leaf:  K_{n-1} on 0..n-2 plus leaf n-1 attached to 0
//   generalized_petersen: outer y_i -> id i-1, inner x_i -> id n+i-1 (i is
//   the 1-based index of the construction; all index arithmetic mod n)
Graph generate(const FamilySpec& spec);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int n);
Graph make_complete(int n);
Graph make_complete_minus_edge(int n);
Graph make_complete_join_leaf(int n);
Graph make_generalized_petersen(int n, int k);

// id helpers for the generalized Petersen labeling; i taken mod n, 1-based
int gp_outer_id(int n, long long i);
int gp_inner_id(int n, long long i);

}  // namespace leaky

#endif
