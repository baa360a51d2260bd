#pragma once

#include <cstdint>
#include <optional>

#include "magnitude/graph.hpp"
#include "magnitude/twist.hpp"

namespace mag {

/// splitmix64: tiny, seedable, and identical on every platform — unlike
/// the standard distributions, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Derives an independent per-trial stream from a master seed.
    static Rng for_trial(std::uint64_t master, std::uint64_t trial) {
        Rng mix(master ^ (0xa076bc9d51f8e2a3ull * (trial + 1)));
        return Rng(mix.next());
    }

private:
    std::uint64_t state_;
};

/// Random simple graph with 1..max_vertices vertices (labels "v0", "v1",
/// ...) and a per-instance random edge density. May be disconnected.
Graph random_graph(Rng& rng, int max_vertices);

/// Random sycamore twist: K is a clique (automatically convex and with
/// every permutation an isometry); G and H grow randomly around it; the
/// biased-or-equidistant condition is rejection-sampled. Returns nullopt
/// if no valid spec shows up within the attempt budget.
std::optional<TwistSpec> random_sycamore_spec(Rng& rng, int max_vertices, int attempts);

/// Random generalized Whitney twist along two NON-adjacent gluing
/// vertices (K = two vertices, no edge, alpha swaps them), each side
/// connected through K. Such twists need not preserve magnitude.
TwistSpec random_whitney_nonadjacent_spec(Rng& rng, int max_vertices);

}  // namespace mag
