#ifndef LEAKY_EXTREMAL_HPP
#define LEAKY_EXTREMAL_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leaky/graph.hpp"

namespace leaky {

enum class ExtremalKind { min_is_2, max_is_n_minus_1 };
enum class FamilyTag { path, cycle, complete, star, complete_minus_edge, complete_join_leaf, none };

const char* to_string(FamilyTag t);

struct ExtremalVerdict {
    ExtremalKind kind = ExtremalKind::min_is_2;
    bool matches = false;
    FamilyTag family_tag = FamilyTag::none;
};

// Structural test for Z_1 = 2: paths and cycles, nothing else. Purely
// degree/connectivity based; never calls the solver.
ExtremalVerdict classify_min(const Graph& g);

// Structural test for Z_1 = n-1: complete graphs, stars, complete-plus-leaf,
// complete-minus-edge. Tag priority for the small-n overlaps: complete, star,
// complete_minus_edge, complete_join_leaf.
ExtremalVerdict classify_max(const Graph& g);

// True iff the minimal ell-fort family is exactly {singletons of degree <=
// ell} plus {pairs of vertices of degree >= ell+1}; equivalent to
// Z_ell >= n-1.
bool minimal_fort_profile(const Graph& g, int ell, int cap = 20);

struct AuditReport {
    int n_max = 0;
    uint64_t graphs_checked = 0;
    uint64_t min_matches = 0;  // graphs with Z_1 = 2
    uint64_t max_matches = 0;  // graphs with Z_1 = n-1
    std::vector<std::string> violations;
    double seconds = 0.0;
    bool complete = true;       // false when the deadline cut the sweep short
    std::string progress;       // where a partial sweep stopped
};

// For every labeled connected graph on 2..n_max vertices, checks:
//   Z_1 = 2    <=>  classify_min matches
//   Z_1 = n-1  <=>  classify_max matches (n >= 3)
//   >= 2 leaves and Z_1 = n-1  =>  star
AuditReport exhaustive_audit(
    int n_max, std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace leaky

#endif
