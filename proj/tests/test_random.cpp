#include <doctest.h>

#include <vector>

#include <magnitude/random_gen.hpp>
#include <magnitude/twist.hpp>

using namespace mag;

TEST_CASE("Rng is deterministic and trial streams are reproducible") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    Rng t1 = Rng::for_trial(7, 3), t2 = Rng::for_trial(7, 3);
    CHECK(t1.next() == t2.next());
    Rng other = Rng::for_trial(7, 4);
    CHECK(Rng::for_trial(7, 3).next() != other.next());
}

TEST_CASE("random_graph respects the vertex cap and simplicity") {
    Rng rng(55);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 7);
        CHECK(g.vertex_count() >= 1);
        CHECK(g.vertex_count() <= 7);
        for (auto [u, v] : g.edges()) {
            CHECK(u != v);
            CHECK(u < g.vertex_count());
            CHECK(v < g.vertex_count());
        }
    }
}

TEST_CASE("random_sycamore_spec outputs validate") {
    Rng rng(77);
    int produced = 0;
    for (int t = 0; t < 20 && produced < 10; ++t) {
        auto spec = random_sycamore_spec(rng, 8, 200);
        if (!spec) continue;
        ++produced;
        TwistPair pair = build_twist_pair(*spec);
        CHECK(validate_sycamore(pair).valid());
    }
    CHECK(produced > 0);
}

TEST_CASE("random_whitney_nonadjacent_spec builds a connected non-adjacent gluing") {
    Rng rng(88);
    for (int t = 0; t < 20; ++t) {
        TwistSpec spec = random_whitney_nonadjacent_spec(rng, 7);
        CHECK(spec.k.vertex_count() == 2);
        CHECK(spec.k.edge_count() == 0);
        CHECK(spec.alpha == std::vector<Vertex>{1, 0});
        TwistPair pair = build_twist_pair(spec);  // validates the embeddings
        // Both glued graphs connected: every distance finite.
        for (Vertex u = 0; u < pair.x.vertex_count(); ++u)
            for (Vertex v = 0; v < pair.x.vertex_count(); ++v) {
                CHECK(pair.x.distance(u, v).is_finite());
                CHECK(pair.y.distance(u, v).is_finite());
            }
    }
}
