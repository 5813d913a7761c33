#ifndef LEAKY_FORTS_HPP
#define LEAKY_FORTS_HPP

#include <stdexcept>
#include <vector>

#include "leaky/graph.hpp"

namespace leaky {

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Outside vertices with exactly one neighbor inside f.
int fort_exceptions(const Graph& g, const VertexSet& f);

// A nonempty f is an ell-leaky fort iff at most ell outside vertices have
// exactly one neighbor in f. Throws on empty f.
bool is_fort(const Graph& g, const VertexSet& f, int ell);

// All inclusion-minimal ell-leaky forts, sorted by (size, lexicographic).
// Full subset-lattice scan; refuses graphs larger than `cap` vertices
// (default 20, hard ceiling 24). Use the exact solver beyond that.
std::vector<VertexSet> enumerate_minimal_forts(const Graph& g, int ell, int cap = 20);

struct HittingSetResult {
    int value = 0;
    VertexSet witness;  // lexicographically least among minimum hitting sets
};

// Minimum-cardinality vertex set meeting every minimal ell-leaky fort
// (branch and bound; exact). By the fort duality this equals the ell-leaky
// forcing number, and the witness is an ell-leaky forcing set.
HittingSetResult min_fort_hitting_set(const Graph& g, int ell, int cap = 20);

// Exposed for perturbation audits and bound computations.
struct FortFamily {
    std::vector<VertexSet> minimal_forts;
};

// Size of a greedy packing of pairwise-disjoint forts (a lower bound on any
// hitting set).
int disjoint_fort_packing_bound(const std::vector<VertexSet>& forts);

// Greedy hitting set (upper bound; still a valid forcing set by duality).
VertexSet greedy_fort_hitting_set(int n, const std::vector<VertexSet>& forts);

}  // namespace leaky

#endif
