#ifndef LEAKY_RANDOM_GEN_HPP
#define LEAKY_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "leaky/graph.hpp"

namespace leaky {

// Seeded generator with portable integer draws (no std distributions, whose
// outputs vary across standard libraries).
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    // Uniform in [0, bound).
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        while (true) {
            uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return static_cast<double>(engine_()) < p * 18446744073709551616.0; }

private:
    std::mt19937_64 engine_;
};

// Uniform labeled tree (random parent sequence decoded Prüfer-style), n >= 2.
Graph random_tree(Rng& rng, int n);

// Random tree plus one non-tree edge. target_girth 0 accepts anything;
// otherwise rejection-samples the extra edge (and the tree if needed) until
// the unique cycle has the requested length.
Graph random_unicyclic(Rng& rng, int n, int target_girth = 0);

// Edge-probability graph conditioned on connectivity (resampled until
// connected).
Graph random_connected_graph(Rng& rng, int n, double edge_prob = 0.5);

}  // namespace leaky

#endif
