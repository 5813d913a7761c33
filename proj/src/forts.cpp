#include "leaky/forts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace leaky {

int fort_exceptions(const Graph& g, const VertexSet& f) {
    int n = g.vertex_count();
    int exceptions = 0;
    for (int u = 0; u < n; ++u) {
        if (f.contains(u)) continue;
        if (g.neighbors(u).intersection_size(f) == 1) ++exceptions;
    }
    return exceptions;
}

bool is_fort(const Graph& g, const VertexSet& f, int ell) {
    if (f.empty()) throw std::domain_error("is_fort: fort candidates must be nonempty");
    return fort_exceptions(g, f) <= ell;
}

namespace {

constexpr int hard_cap = 24;

VertexSet mask_to_set(int n, uint64_t mask) {
    VertexSet s(n);
    for (uint64_t m = mask; m; m &= m - 1) s.insert(std::countr_zero(m));
    return s;
}

}  // namespace

std::vector<VertexSet> enumerate_minimal_forts(const Graph& g, int ell, int cap) {
    int n = g.vertex_count();
    cap = std::min(cap, hard_cap);
    if (n > cap)
        throw ResourceLimit("enumerate_minimal_forts: " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(cap) + "; use the exact solver instead");
    if (ell < 0) throw std::domain_error("enumerate_minimal_forts: ell must be >= 0");

    std::vector<uint64_t> adj(n);
    for (int v = 0; v < n; ++v)
        for (int w = g.neighbors(v).first(); w >= 0; w = g.neighbors(v).next(w))
            adj[v] |= uint64_t{1} << w;

    auto exceptions_of = [&](uint64_t f) {
        int exc = 0;
        for (uint64_t outside = ~f & ((n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1)); outside;
             outside &= outside - 1) {
            int u = std::countr_zero(outside);
            if (std::popcount(adj[u] & f) == 1) ++exc;
        }
        return exc;
    };

    // Scan the whole lattice once. Fort-ness is not closed under single
    // element deletions, so inclusion-minimality is decided against the
    // already-confirmed minimal forts, processing sizes in increasing order
    // (a proper subset is always strictly smaller).
    std::vector<uint64_t> forts;
    uint64_t limit = uint64_t{1} << n;
    for (uint64_t mask = 1; mask < limit; ++mask)
        if (exceptions_of(mask) <= ell) forts.push_back(mask);

    std::stable_sort(forts.begin(), forts.end(), [](uint64_t a, uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<uint64_t> minimal_masks;
    for (uint64_t mask : forts) {
        bool is_minimal = true;
        for (uint64_t m : minimal_masks) {
            if ((m & ~mask) == 0) {  // m is a subset; sizes differ by construction
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal_masks.push_back(mask);
    }

    std::vector<VertexSet> minimal;
    minimal.reserve(minimal_masks.size());
    for (uint64_t mask : minimal_masks) minimal.push_back(mask_to_set(n, mask));
    std::sort(minimal.begin(), minimal.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return VertexSet::lex_less(a, b);
    });
    return minimal;
}

namespace {

struct HittingSearch {
    const std::vector<uint64_t>& forts;
    int n;

    // Greedy count of pairwise-disjoint forts among those not hit by
    // `chosen`; each needs its own vertex.
    int packing_bound(uint64_t chosen) const {
        uint64_t used = 0;
        int count = 0;
        for (uint64_t f : forts) {
            if (f & chosen) continue;
            if (f & used) continue;
            used |= f;
            ++count;
        }
        return count;
    }

    // Smallest hitting set size reachable from this partial state, capped at
    // `budget`; returns budget+1 when impossible within budget. Vertices
    // below min_vertex are off limits.
    int solve(uint64_t chosen, int budget, int min_vertex) {
        const uint64_t* unhit = nullptr;
        int unhit_count = 0;
        int best_branch = 65;
        for (const uint64_t& f : forts) {
            if (f & chosen) continue;
            ++unhit_count;
            int options = std::popcount(f >> min_vertex << min_vertex);
            if (options < best_branch) {
                best_branch = options;
                unhit = &f;
            }
        }
        if (unhit_count == 0) return 0;
        if (budget <= 0) return budget + 1;
        if (unhit && best_branch == 0) return budget + 1;  // an unhit fort with no allowed vertex
        if (packing_bound(chosen) > budget) return budget + 1;

        int result = budget + 1;
        uint64_t candidates = (*unhit) >> min_vertex << min_vertex;
        for (uint64_t m = candidates; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int sub = solve(chosen | (uint64_t{1} << v), std::min(budget, result) - 1, min_vertex);
            result = std::min(result, sub + 1);
        }
        return result;
    }
};

}  // namespace

int disjoint_fort_packing_bound(const std::vector<VertexSet>& forts) {
    int count = 0;
    if (forts.empty()) return 0;
    VertexSet used(forts.front().universe());
    for (const VertexSet& f : forts) {
        if (f.intersects(used)) continue;
        used |= f;
        ++count;
    }
    return count;
}

VertexSet greedy_fort_hitting_set(int n, const std::vector<VertexSet>& forts) {
    VertexSet chosen(n);
    std::vector<char> hit(forts.size(), 0);
    size_t remaining = forts.size();
    while (remaining > 0) {
        int best_v = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen.contains(v)) continue;
            int gain = 0;
            for (size_t i = 0; i < forts.size(); ++i)
                if (!hit[i] && forts[i].contains(v)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        chosen.insert(best_v);
        for (size_t i = 0; i < forts.size(); ++i)
            if (!hit[i] && forts[i].contains(best_v)) {
                hit[i] = 1;
                --remaining;
            }
    }
    return chosen;
}

HittingSetResult min_fort_hitting_set(const Graph& g, int ell, int cap) {
    int n = g.vertex_count();
    std::vector<VertexSet> minimal = enumerate_minimal_forts(g, ell, cap);

    std::vector<uint64_t> fort_masks;
    fort_masks.reserve(minimal.size());
    for (const VertexSet& f : minimal) {
        uint64_t m = 0;
        for (int v = f.first(); v >= 0; v = f.next(v)) m |= uint64_t{1} << v;
        fort_masks.push_back(m);
    }

    HittingSearch search{fort_masks, n};
    int greedy_size = greedy_fort_hitting_set(n, minimal).size();
    int optimum = search.solve(0, greedy_size, 0);

    // Lexicographically least witness of optimal size: commit each vertex in
    // ascending order whenever the remainder stays solvable within budget.
    HittingSetResult result;
    result.value = optimum;
    result.witness = VertexSet(n);
    uint64_t chosen = 0;
    int budget = optimum;
    for (int v = 0; v < n && budget > 0; ++v) {
        uint64_t with_v = chosen | (uint64_t{1} << v);
        if (search.solve(with_v, budget - 1, v + 1) <= budget - 1) {
            chosen = with_v;
            result.witness.insert(v);
            --budget;
        }
    }
    return result;
}

}  // namespace leaky
