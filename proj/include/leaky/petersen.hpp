#ifndef LEAKY_PETERSEN_HPP
#define LEAKY_PETERSEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "leaky/closed_forms.hpp"
#include "leaky/families.hpp"
#include "leaky/forcing.hpp"
#include "leaky/graph.hpp"

namespace leaky {

// Width-(4k+4) segmentation of P(n,k). Per block i (1-based in the math,
// 0-based here): A = outer vertices of the first half, B = the inner ones
// under them, C/D = the second half. When 4k+4 does not divide n the last
// block keeps only vertices with index <= n.
struct BlockPartition {
    int n = 0, k = 0;
    int block_width = 0;          // 4k+4
    int complete_block_count = 0; // floor(n / (4k+4))
    int block_count = 0;          // ceil(n / (4k+4))
    bool truncated = false;

    struct Block {
        VertexSet a, b, c, d;
    };
    std::vector<Block> blocks;

    VertexSet union_of_a() const;
};

BlockPartition block_partition(int n, int k);

// {x_1..x_2k, y_k, y_k+1}: a forcing set of size 2k+2 that stays one-leak
// robust (every outside vertex can be reached around either way). Requires
// n >= 2k.
VertexSet gp_one_leaky_set(int n, int k);

// Union of the outer A blocks; the two-leak construction. Enforces the
// theorem hypotheses 7 <= k <= (n-1)/2 and n >= 10k+10.
VertexSet gp_two_leaky_set(int n, int k);

// Union of the outer A blocks with no hypothesis beyond the graph domain;
// used to probe the gap between the lemma regime (n >= 6k+6) and the theorem
// regime (n >= 10k+10).
VertexSet gp_all_a_blocks(int n, int k);

enum class GpSetKind { one_leaky, two_leaky, all_a_blocks };
const char* to_string(GpSetKind k);

struct GpVerification {
    int n = 0, k = 0, ell = 0;
    GpSetKind kind = GpSetKind::one_leaky;
    VertexSet set;
    bool ok = false;
    std::optional<VertexSet> counterexample;
    uint64_t leak_sets_tested = 0;
    // Feasible-forcer count per vertex outside the set, under no leaks
    // (id-indexed; -1 for set members).
    std::vector<int> forcer_counts;
};

GpVerification verify_construction(int n, int k, int ell, GpSetKind kind);

// Exact small-case sweep: P(n,2) for n = 5..9 and P(n,3) for n = 7..9 at
// ell = 0,1,2; include_slow adds the P(n,3) n = 10,11 cells. Cells that hit
// the per-cell timeout report bracket bounds instead of a value.
struct TableCell {
    int n = 0, k = 0, ell = 0;
    std::optional<int> computed;
    int published = 0;
    std::optional<int> lower, upper;  // set when timed out
    double seconds = 0.0;
};

std::vector<TableCell> small_case_table(bool include_slow = false,
                                        std::optional<double> per_cell_timeout_secs = std::nullopt,
                                        int threads = 1);

std::string table_to_csv(const std::vector<TableCell>& cells);

// Closed-form values for generalized Petersen graphs (k = 1 exact cases, the
// k = 2 and k = 3 one-leak classifications, and the 2n value for ell >= 3).
CaseReport petersen_family_value(int n, int k, int ell);

}  // namespace leaky

#endif
