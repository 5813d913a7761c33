#ifndef LEAKY_FORCING_HPP
#define LEAKY_FORCING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "leaky/graph.hpp"

namespace leaky {

// Ordered witness of forces: (forcer, forced) pairs. At each step the forcer
// is blue, not a leak, and the forced vertex is its only white neighbor at
// that moment.
struct Chronology {
    std::vector<std::pair<int, int>> steps;
};

struct ClosureResult {
    VertexSet blue;
    Chronology chronology;
};

// Exhaustively applies the leaky color change rule: a blue vertex that is not
// a leak forces its unique white neighbor. The rule is monotone, so the final
// set is unique regardless of application order; the chronology is made
// reproducible by working in rounds and forcing lowest-id white targets first
// (each target by its lowest-id valid forcer).
ClosureResult closure(const Graph& g, const VertexSet& start, const VertexSet& leaks);

// Closure under the extra restriction that `target` may be forced only by
// `required_forcer`. Still a monotone rule system.
ClosureResult closure_restricted(const Graph& g, const VertexSet& start, const VertexSet& leaks,
                                 int target, int required_forcer);

struct LeakCheck {
    bool ok = false;
    std::optional<VertexSet> counterexample;  // lexicographically first failing leak set
    uint64_t leak_sets_tested = 0;
};

// True iff the coloring completes for every leak set of size exactly
// min(ell, n). Exactness of size suffices because the closure is antitone in
// the leak set: any smaller leak set is dominated by some full-size one.
LeakCheck is_leaky_forcing_set(const Graph& g, const VertexSet& s, int ell);

// Neighbors u of v for which some valid force sequence from s under the given
// leaks ends with u forcing v. Computed by running the restricted closure per
// candidate. Requires v outside s.
VertexSet feasible_forcers(const Graph& g, const VertexSet& s, const VertexSet& leaks, int v);

// --- internal fast path used by the solver ---------------------------------

// Bounded cache of recently failing leak sets, tried first so that failing
// candidates die on their first closure most of the time.
class LeakCache {
public:
    explicit LeakCache(size_t capacity = 32) : capacity_(capacity) {}
    const std::vector<VertexSet>& entries() const { return entries_; }
    void record(const VertexSet& leaks);

private:
    size_t capacity_;
    std::vector<VertexSet> entries_;
};

// Pass/fail only (no lexicographic counterexample guarantee); consults and
// updates the cache.
bool passes_all_leak_sets(const Graph& g, const VertexSet& s, int ell, LeakCache* cache,
                          uint64_t* leak_sets_tested);

// Visits every size-m subset of 0..n-1 in lexicographic order; stop early by
// returning false.
void for_each_subset_of_size(int n, int m, const std::function<bool(const VertexSet&)>& visit);

}  // namespace leaky

#endif
