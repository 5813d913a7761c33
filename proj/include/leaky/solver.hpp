#ifndef LEAKY_SOLVER_HPP
#define LEAKY_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "leaky/forcing.hpp"
#include "leaky/graph.hpp"

namespace leaky {

enum class SolveMethod { subset_search, fort_hitting };

const char* to_string(SolveMethod m);

// Vertices of degree <= ell; these belong to every ell-leaky forcing set (the
// adversary can leak the whole neighborhood of any such vertex).
VertexSet mandatory_vertices(const Graph& g, int ell);

struct SolveStats {
    uint64_t candidates_tested = 0;
    uint64_t leak_sets_tested = 0;
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    SolveMethod method = SolveMethod::subset_search;
    SolveStats stats;
};

struct SolveOptions {
    SolveMethod method = SolveMethod::subset_search;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    int fort_cap = 20;     // fort_hitting only
    int subset_cap = 30;   // refuse larger instances in subset_search
};

// Thrown when a deadline expires; carries the bounds known at that point.
struct SolverTimeout : std::runtime_error {
    SolverTimeout(int lower, int upper)
        : std::runtime_error("solver timed out; value in [" + std::to_string(lower) + "," +
                             std::to_string(upper) + "]"),
          lower_bound(lower),
          upper_bound(upper) {}
    int lower_bound;
    int upper_bound;
};

// Z_ell(g): the minimum size of a set of initially blue vertices that forces
// the whole graph under every placement of ell leaks.
//
// subset_search enumerates supersets of the mandatory vertices by increasing
// size, lexicographically within a size, verifying each candidate against all
// leak sets (with a per-solve cache of failing leak sets tried first). The
// returned witness is the lexicographically least passing set of minimum size
// on connected inputs. Disconnected inputs are solved per component and
// summed; the witness is the union of the per-component witnesses.
//
// fort_hitting computes the same value as a minimum hitting set over the
// minimal fort family.
SolveResult leaky_forcing_number(const Graph& g, int ell, const SolveOptions& options = {});

// [Z_0 .. Z_ell_max]; throws std::logic_error if the list ever decreases
// (that would be an engine bug, not a property of the graph).
std::vector<int> monotonicity_audit(const Graph& g, int ell_max, const SolveOptions& options = {});

}  // namespace leaky

#endif
