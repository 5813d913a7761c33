#include "leaky/solver.hpp"

#include <algorithm>

#include "leaky/forts.hpp"

namespace leaky {

const char* to_string(SolveMethod m) {
    return m == SolveMethod::subset_search ? "subset_search" : "fort_hitting";
}

VertexSet mandatory_vertices(const Graph& g, int ell) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= ell) out.insert(v);
    return out;
}

namespace {

bool deadline_hit(const SolveOptions& options) {
    return options.deadline && std::chrono::steady_clock::now() >= *options.deadline;
}

// Fort-based bracket used when a subset search times out: disjoint minimal
// forts give a lower bound, a greedy hitting set an upper bound (checked
// adversarially before it is reported).
std::pair<int, int> fort_bounds(const Graph& g, int ell, int known_lower) {
    int n = g.vertex_count();
    try {
        auto forts = enumerate_minimal_forts(g, ell, 24);
        int lower = std::max(known_lower, disjoint_fort_packing_bound(forts));
        VertexSet greedy = greedy_fort_hitting_set(n, forts);
        int upper = is_leaky_forcing_set(g, greedy, ell).ok ? greedy.size() : n;
        return {lower, std::max(upper, lower)};
    } catch (const ResourceLimit&) {
        return {known_lower, n};
    }
}

// Exact search on a connected graph.
SolveResult solve_connected_subset_search(const Graph& g, int ell, const SolveOptions& options) {
    int n = g.vertex_count();
    if (n > options.subset_cap)
        throw ResourceLimit("subset_search: " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(options.subset_cap));

    SolveResult result;
    result.method = SolveMethod::subset_search;
    VertexSet mandatory = mandatory_vertices(g, ell);
    std::vector<int> free_vertices = (VertexSet::full(n) - mandatory).to_vector();
    int base = mandatory.size();
    LeakCache cache;

    for (int size = base; size <= n; ++size) {
        int extra = size - base;
        if (extra > static_cast<int>(free_vertices.size())) break;

        std::optional<VertexSet> found;
        // Combinations of free vertices in lexicographic order; since the
        // mandatory part is fixed, the resulting full sets are visited in
        // lexicographic order too.
        for_each_subset_of_size(static_cast<int>(free_vertices.size()), extra,
                                [&](const VertexSet& picks) {
                                    if (deadline_hit(options)) {
                                        auto [lo, hi] = fort_bounds(g, ell, size);
                                        throw SolverTimeout(lo, hi);
                                    }
                                    VertexSet candidate = mandatory;
                                    for (int i = picks.first(); i >= 0; i = picks.next(i))
                                        candidate.insert(free_vertices[i]);
                                    ++result.stats.candidates_tested;
                                    if (passes_all_leak_sets(g, candidate, ell, &cache,
                                                             &result.stats.leak_sets_tested)) {
                                        found = candidate;
                                        return false;
                                    }
                                    return true;
                                });
        if (found) {
            result.value = size;
            result.witness = *found;
            return result;
        }
    }
    // Unreachable: the full vertex set always passes.
    throw std::logic_error("subset_search: no candidate passed");
}

SolveResult solve_connected(const Graph& g, int ell, const SolveOptions& options) {
    if (options.method == SolveMethod::fort_hitting) {
        HittingSetResult hit = min_fort_hitting_set(g, ell, options.fort_cap);
        SolveResult result;
        result.value = hit.value;
        result.witness = hit.witness;
        result.method = SolveMethod::fort_hitting;
        return result;
    }
    return solve_connected_subset_search(g, ell, options);
}

}  // namespace

SolveResult leaky_forcing_number(const Graph& g, int ell, const SolveOptions& options) {
    if (ell < 0) throw std::domain_error("leaky_forcing_number: ell must be >= 0");
    int n = g.vertex_count();
    if (n == 0) return {};

    std::vector<VertexSet> comps = components(g);
    if (comps.size() == 1) return solve_connected(g, ell, options);

    // Forcing never crosses components and the adversary can concentrate all
    // leaks in any one of them, so the value is the per-component sum.
    SolveResult total;
    total.method = options.method;
    total.witness = VertexSet(n);
    for (const VertexSet& comp : comps) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        SolveResult part = solve_connected(sub.graph, ell, options);
        total.value += part.value;
        for (int v = part.witness.first(); v >= 0; v = part.witness.next(v))
            total.witness.insert(sub.ids[v]);
        total.stats.candidates_tested += part.stats.candidates_tested;
        total.stats.leak_sets_tested += part.stats.leak_sets_tested;
    }
    return total;
}

std::vector<int> monotonicity_audit(const Graph& g, int ell_max, const SolveOptions& options) {
    std::vector<int> values;
    values.reserve(ell_max + 1);
    for (int ell = 0; ell <= ell_max; ++ell) {
        values.push_back(leaky_forcing_number(g, ell, options).value);
        if (values.size() >= 2 && values[values.size() - 2] > values.back())
            throw std::logic_error("monotonicity_audit: forcing number decreased between " +
                                   std::to_string(ell - 1) + " and " + std::to_string(ell) +
                                   " leaks");
    }
    return values;
}

}  // namespace leaky
