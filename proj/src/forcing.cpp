#include "leaky/forcing.hpp"

#include <algorithm>

namespace leaky {

namespace {

// Shared closure loop. When restricted_target >= 0, that vertex may only be
// forced by required_forcer.
ClosureResult run_closure(const Graph& g, const VertexSet& start, const VertexSet& leaks,
                          int restricted_target, int required_forcer, bool want_chronology) {
    int n = g.vertex_count();
    if (start.universe() != n || leaks.universe() != n)
        throw std::invalid_argument("closure: start/leak sets built against a different vertex count");
    ClosureResult result;
    result.blue = start;

    std::vector<std::pair<int, int>> round_forces;  // (target, forcer)
    while (true) {
        round_forces.clear();
        for (int v = result.blue.first(); v >= 0; v = result.blue.next(v)) {
            if (leaks.contains(v)) continue;
            VertexSet white = g.neighbors(v) - result.blue;
            int t = white.first();
            if (t < 0 || white.next(t) >= 0) continue;  // zero or several white neighbors
            if (t == restricted_target && v != required_forcer) continue;
            round_forces.emplace_back(t, v);
        }
        if (round_forces.empty()) break;
        // Lowest-id target first; each target keeps its lowest-id forcer.
        std::sort(round_forces.begin(), round_forces.end());
        int last_target = -1;
        for (auto [t, v] : round_forces) {
            if (t == last_target) continue;
            last_target = t;
            result.blue.insert(t);
            if (want_chronology) result.chronology.steps.emplace_back(v, t);
        }
    }
    return result;
}

// Advance a lexicographic combination; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    int m = static_cast<int>(c.size());
    for (int i = m - 1; i >= 0; --i) {
        if (c[i] < n - m + i) {
            ++c[i];
            for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

ClosureResult closure(const Graph& g, const VertexSet& start, const VertexSet& leaks) {
    return run_closure(g, start, leaks, -1, -1, true);
}

ClosureResult closure_restricted(const Graph& g, const VertexSet& start, const VertexSet& leaks,
                                 int target, int required_forcer) {
    return run_closure(g, start, leaks, target, required_forcer, true);
}

void for_each_subset_of_size(int n, int m, const std::function<bool(const VertexSet&)>& visit) {
    if (m < 0 || m > n) return;
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = i;
    while (true) {
        VertexSet s(n);
        for (int v : c) s.insert(v);
        if (!visit(s)) return;
        if (!next_combination(c, n)) return;
    }
}

LeakCheck is_leaky_forcing_set(const Graph& g, const VertexSet& s, int ell) {
    if (ell < 0) throw std::domain_error("is_leaky_forcing_set: ell must be >= 0");
    int n = g.vertex_count();
    int m = std::min(ell, n);
    VertexSet everything = VertexSet::full(n);

    LeakCheck check;
    check.ok = true;
    for_each_subset_of_size(n, m, [&](const VertexSet& leaks) {
        ++check.leak_sets_tested;
        if (run_closure(g, s, leaks, -1, -1, false).blue != everything) {
            check.ok = false;
            check.counterexample = leaks;
            return false;
        }
        return true;
    });
    return check;
}

VertexSet feasible_forcers(const Graph& g, const VertexSet& s, const VertexSet& leaks, int v) {
    if (s.contains(v)) throw std::domain_error("feasible_forcers: vertex is already in the start set");
    VertexSet out(g.vertex_count());
    const VertexSet& nb = g.neighbors(v);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
        if (leaks.contains(u)) continue;
        ClosureResult r = run_closure(g, s, leaks, v, u, false);
        if (r.blue.contains(v)) out.insert(u);
    }
    return out;
}

void LeakCache::record(const VertexSet& leaks) {
    auto it = std::find(entries_.begin(), entries_.end(), leaks);
    if (it != entries_.end()) {
        std::rotate(entries_.begin(), it, it + 1);  // move to front
        return;
    }
    if (entries_.size() == capacity_) entries_.pop_back();
    entries_.insert(entries_.begin(), leaks);
}

bool passes_all_leak_sets(const Graph& g, const VertexSet& s, int ell, LeakCache* cache,
                          uint64_t* leak_sets_tested) {
    int n = g.vertex_count();
    int m = std::min(ell, n);
    VertexSet everything = VertexSet::full(n);

    auto fails_under = [&](const VertexSet& leaks) {
        if (leak_sets_tested) ++*leak_sets_tested;
        return run_closure(g, s, leaks, -1, -1, false).blue != everything;
    };

    if (cache) {
        for (size_t i = 0; i < cache->entries().size(); ++i) {
            VertexSet leaks = cache->entries()[i];  // copy: record() reorders the vector
            if (fails_under(leaks)) {
                cache->record(leaks);
                return false;
            }
        }
    }
    bool ok = true;
    for_each_subset_of_size(n, m, [&](const VertexSet& leaks) {
        if (fails_under(leaks)) {
            if (cache) cache->record(leaks);
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace leaky
