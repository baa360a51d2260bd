#include "magnitude/random_gen.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mag {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n, int from = 0) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(from + i));
    return out;
}

bool connected(const Graph& g) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!g.distance(u, v).is_finite()) return false;
    return true;
}

}  // namespace

Graph random_graph(Rng& rng, int max_vertices) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices)));
    std::uint64_t density = 20 + rng.below(70);  // percent
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (rng.chance(density, 100)) edges.emplace_back(a, b);
    return Graph(numbered("v", n), std::move(edges));
}

std::optional<TwistSpec> random_sycamore_spec(Rng& rng, int max_vertices, int attempts) {
    for (int attempt = 0; attempt < attempts; ++attempt) {
        int nk = 1 + static_cast<int>(rng.below(3));
        if (nk + 2 > max_vertices) nk = std::max(1, max_vertices - 2);
        // K is a clique: automatically convex wherever its edges survive,
        // and any permutation of it is an isometry.
        std::vector<std::pair<Vertex, Vertex>> k_edges;
        for (Vertex a = 0; a < nk; ++a)
            for (Vertex b = a + 1; b < nk; ++b) k_edges.emplace_back(a, b);
        Graph k(numbered("k", nk), k_edges);
        std::vector<Vertex> alpha(static_cast<std::size_t>(nk));
        for (int i = 0; i < nk; ++i) alpha[static_cast<std::size_t>(i)] = i;
        for (int i = nk - 1; i > 0; --i)
            std::swap(alpha[static_cast<std::size_t>(i)],
                      alpha[rng.below(static_cast<std::uint64_t>(i) + 1)]);

        auto grow = [&](const std::string& prefix) {
            int extra = 1 + static_cast<int>(
                                rng.below(static_cast<std::uint64_t>(max_vertices - nk)));
            std::vector<std::string> labels = numbered("k", nk);
            auto more = numbered(prefix, extra);
            labels.insert(labels.end(), more.begin(), more.end());
            std::uint64_t density = 30 + rng.below(60);
            std::vector<std::pair<Vertex, Vertex>> edges = k_edges;
            for (Vertex a = 0; a < nk + extra; ++a)
                for (Vertex b = std::max(a + 1, nk); b < nk + extra; ++b)
                    if (rng.chance(density, 100)) edges.emplace_back(a, b);
            return Graph(std::move(labels), std::move(edges));
        };
        TwistSpec spec{grow("g"), grow("h"), k, {}, {}, alpha};
        for (Vertex kv = 0; kv < nk; ++kv) {
            spec.iota_g.push_back(kv);  // K vertices lead both label lists
            spec.iota_h.push_back(kv);
        }
        TwistPair pair = build_twist_pair(spec);
        if (validate_sycamore(pair).valid()) return spec;
    }
    return std::nullopt;
}

TwistSpec random_whitney_nonadjacent_spec(Rng& rng, int max_vertices) {
    Graph k(numbered("k", 2), {});
    for (;;) {
        auto grow = [&](const std::string& prefix) {
            int extra = 2 + static_cast<int>(
                                rng.below(static_cast<std::uint64_t>(std::max(1, max_vertices - 3))));
            std::vector<std::string> labels = numbered("k", 2);
            auto more = numbered(prefix, extra);
            labels.insert(labels.end(), more.begin(), more.end());
            std::uint64_t density = 30 + rng.below(60);
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex a = 0; a < 2 + extra; ++a)
                for (Vertex b = std::max(a + 1, 2); b < 2 + extra; ++b)
                    if (rng.chance(density, 100)) edges.emplace_back(a, b);
            return Graph(std::move(labels), std::move(edges));
        };
        TwistSpec spec{grow("g"), grow("h"), k, {0, 1}, {0, 1}, {1, 0}};
        // The gluing vertices must be joined through each side but not
        // adjacent (K has no edge, and both sides were built without one).
        if (!connected(spec.g) || !connected(spec.h)) continue;
        return spec;
    }
}

}  // namespace mag
