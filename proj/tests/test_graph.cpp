#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <magnitude/graph.hpp>
#include <magnitude/random_gen.hpp>

using namespace mag;

namespace {

Graph path_graph(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(labels, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(labels, edges);
}

Graph complete_graph(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("k" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(labels, edges);
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);          // duplicate label
    CHECK_THROWS_AS(Graph({"a"}, {{0, 0}}), std::invalid_argument);         // loop
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);  // dup edge
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 2}}), std::invalid_argument);    // out of range
}

TEST_CASE("BFS distances on a path, a cycle, and a disconnected graph") {
    Graph p = path_graph(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(p.distance(i, j) == ExtDistance(std::abs(i - j)));

    Graph c = cycle_graph(6);
    CHECK(c.distance(0, 3) == ExtDistance(3));
    CHECK(c.distance(0, 4) == ExtDistance(2));

    Graph d({"a", "b"}, {});
    CHECK(d.distance(0, 0) == ExtDistance(0));
    CHECK_FALSE(d.distance(0, 1).is_finite());
}

TEST_CASE("is_between matches the additive definition, infinity-aware") {
    Graph c = cycle_graph(5);
    const auto& dist = c.distances();
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex w = 0; w < 5; ++w)
            for (Vertex v = 0; v < 5; ++v)
                CHECK(is_between(dist, u, w, v) ==
                      (dist(u, v) == dist(u, w) + dist(w, v)));
    Graph d({"a", "b", "c"}, {{0, 1}});
    CHECK_FALSE(is_between(d.distances(), 0, 2, 1));
}

TEST_CASE("convexity: geodesic subpath convex, long cycle arc not") {
    // SubgraphEmbedding keeps references, so the domain graphs must outlive it.
    Graph c = cycle_graph(6);
    Graph two({"a", "b"}, {});
    Graph seg({"a", "b"}, {{0, 1}});
    Graph p3 = path_graph(3);
    Graph p4 = path_graph(4);
    Graph c5 = cycle_graph(5);

    // Opposite vertices 0 and 3: the 2-vertex induced subgraph has no edge,
    // so its internal distance is infinite, never 3.
    SubgraphEmbedding far(two, c, {0, 3});
    CHECK_FALSE(is_convex(c, far));
    // An edge of the cycle is convex.
    SubgraphEmbedding edge(seg, c, {0, 1});
    CHECK(is_convex(c, edge));
    // A 3-vertex arc of a 6-cycle is convex (the other way around is longer).
    SubgraphEmbedding arc(p3, c, {0, 1, 2});
    CHECK(is_convex(c, arc));
    // A 4-vertex arc of a 5-cycle is not: its endpoints are distance 3
    // apart internally but distance 2 through the skipped vertex.
    SubgraphEmbedding arc4(p4, c5, {0, 1, 2, 3});
    CHECK_FALSE(is_convex(c5, arc4));
}

TEST_CASE("SubgraphEmbedding enforces induced subgraphs") {
    Graph tri = complete_graph(3);
    Graph two({"a", "b"}, {});
    Graph seg({"a", "b"}, {{0, 1}});
    Graph p3 = path_graph(3);
    CHECK_THROWS_AS(SubgraphEmbedding(two, tri, {0, 1}),
                    std::invalid_argument);  // missing edge
    CHECK_THROWS_AS(SubgraphEmbedding(seg, p3, {0, 2}),
                    std::invalid_argument);  // phantom edge
}

TEST_CASE("project_vertex against the exhaustive additive-witness oracle") {
    Rng rng(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 6);
        int n = g.vertex_count();
        // Every nonempty vertex subset; the projection condition is
        // well-defined regardless of convexity, so test them all.
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> image;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) image.push_back(i);
            for (Vertex v = 0; v < n; ++v) {
                auto pi = project_vertex(g, image, v);
                // Oracle: the set of vertices satisfying the additive
                // condition for every u in the image.
                std::vector<Vertex> witnesses;
                for (Vertex w : image) {
                    if (!g.distance(v, w).is_finite()) continue;
                    bool ok = true;
                    for (Vertex u : image)
                        if (g.distance(v, u) != g.distance(v, w) + g.distance(w, u)) {
                            ok = false;
                            break;
                        }
                    if (ok) witnesses.push_back(w);
                }
                if (witnesses.empty())
                    CHECK_FALSE(pi.has_value());
                else {
                    REQUIRE(pi.has_value());
                    CHECK(std::find(witnesses.begin(), witnesses.end(), *pi) != witnesses.end());
                }
            }
        }
    }
}

TEST_CASE("cartesian product metric is the sum metric") {
    Graph p = path_graph(3);
    Graph c = cycle_graph(4);
    Graph prod = cartesian_product(p, c);
    REQUIRE(prod.vertex_count() == 12);
    for (Vertex u1 = 0; u1 < 3; ++u1)
        for (Vertex v1 = 0; v1 < 4; ++v1)
            for (Vertex u2 = 0; u2 < 3; ++u2)
                for (Vertex v2 = 0; v2 < 4; ++v2) {
                    Vertex a = u1 * 4 + v1, b = u2 * 4 + v2;
                    CHECK(prod.distance(a, b) == p.distance(u1, u2) + c.distance(v1, v2));
                }
}

TEST_CASE("disjoint union keeps parts at infinite distance") {
    Graph u = disjoint_union(path_graph(2), path_graph(3));
    CHECK(u.vertex_count() == 5);
    CHECK_FALSE(u.distance(0, 2).is_finite());
    CHECK(u.distance(2, 4) == ExtDistance(2));
}

TEST_CASE("are_isometric: positive and negative cases") {
    CHECK(are_isometric(cycle_graph(5), cycle_graph(5)));
    CHECK_FALSE(are_isometric(cycle_graph(6), path_graph(6)));
    CHECK_FALSE(are_isometric(path_graph(3), path_graph(4)));
    // Relabeled copy.
    Graph a({"x", "y", "z"}, {{0, 1}, {1, 2}});
    Graph b({"m", "n", "o"}, {{1, 0}, {0, 2}});  // path with center 0
    CHECK(are_isometric(a, b));
}

TEST_CASE("path_length sums hops and absorbs infinity") {
    Graph d({"a", "b", "c"}, {{0, 1}});
    std::vector<Vertex> fin{0, 1, 0};
    std::vector<Vertex> inf{0, 1, 2};
    CHECK(path_length(d.distances(), fin) == ExtDistance(2));
    CHECK_FALSE(path_length(d.distances(), inf).is_finite());
}

TEST_CASE("wedge at a vertex is a projecting decomposition") {
    // X = two triangles sharing one vertex.
    Graph x({"a", "b", "c", "d", "e"},
            {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    Graph tri = complete_graph(3);
    SubgraphEmbedding g(tri, x, {0, 1, 2});
    SubgraphEmbedding h(tri, x, {2, 3, 4});
    CHECK(is_projecting_decomposition(x, g, h));
}
