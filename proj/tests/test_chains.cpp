#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <magnitude/chains.hpp>
#include <magnitude/graph.hpp>
#include <magnitude/homology.hpp>
#include <magnitude/random_gen.hpp>
#include <magnitude/series.hpp>

using namespace mag;

namespace {

// Brute force: all vertex sequences with k <= ell hops, consecutive
// entries distinct, and total length exactly ell.
std::vector<std::vector<NondegeneratePath>> brute_force_paths(const Graph& g, int ell) {
    std::vector<std::vector<NondegeneratePath>> out(static_cast<std::size_t>(ell) + 1);
    int n = g.vertex_count();
    std::vector<Vertex> seq;
    auto rec = [&](auto&& self) -> void {
        if (!seq.empty()) {
            ExtDistance len = path_length(g.distances(), seq);
            if (len == ExtDistance(ell) && static_cast<int>(seq.size()) - 1 <= ell)
                out[seq.size() - 1].push_back({seq, ell});
        }
        if (static_cast<int>(seq.size()) == ell + 1) return;
        for (Vertex v = 0; v < n; ++v) {
            if (!seq.empty() && seq.back() == v) continue;
            seq.push_back(v);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    for (auto& basis : out) std::sort(basis.begin(), basis.end());
    return out;
}

}  // namespace

TEST_CASE("enumerate_paths equals the brute-force oracle (<=4 vertices, ell <= 4)") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 4);
        for (int ell = 0; ell <= 4; ++ell) {
            auto fast = enumerate_paths(g, ell);
            auto slow = brute_force_paths(g, ell);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t k = 0; k < fast.size(); ++k) {
                auto sorted = fast[k];
                std::sort(sorted.begin(), sorted.end());
                CHECK(sorted == slow[k]);
            }
        }
    }
}

TEST_CASE("enumeration is lexicographic and k <= ell always holds") {
    Graph c({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int ell = 0; ell <= 5; ++ell) {
        auto paths = enumerate_paths(c, ell);
        for (std::size_t k = 0; k < paths.size(); ++k) {
            CHECK(std::is_sorted(paths[k].begin(), paths[k].end()));
            if (static_cast<int>(k) > ell) CHECK(paths[k].empty());
        }
    }
}

TEST_CASE("boundary matrices satisfy d^2 = 0 on a random corpus") {
    Rng rng(5150);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 5);
        for (int ell = 0; ell <= 5; ++ell) {
            ChainSlice s = chain_slice(g, ell);
            for (std::size_t k = 2; k < s.boundaries.size(); ++k)
                CHECK(sparse_is_zero(sparse_compose(s.boundaries[k - 1], s.boundaries[k])));
        }
    }
}

TEST_CASE("three magnitude routes agree coefficient-wise") {
    Rng rng(31337);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 6);
        TruncatedSeries inv = magnitude_by_inversion(g, 6);
        TruncatedSeries cnt = magnitude_by_path_count(g, 6);
        TruncatedSeries eul = magnitude_by_euler_characteristic(g, 6);
        CHECK(inv == cnt);
        CHECK(cnt == eul);
    }
}

TEST_CASE("euler characteristic examples") {
    Graph pt({"a"}, {});
    CHECK(euler_characteristic(chain_slice(pt, 0)) == 1);

    Graph k2({"a", "b"}, {{0, 1}});
    CHECK(euler_characteristic(chain_slice(k2, 0)) == 2);
    CHECK(euler_characteristic(chain_slice(k2, 1)) == -2);
}

TEST_CASE("induced_chain_map commutes with the boundary") {
    // f: C_4 -> K_2 folding the 4-cycle onto an edge is distance-decreasing.
    Graph c4({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph k2({"x", "y"}, {{0, 1}});
    std::vector<Vertex> f{0, 1, 0, 1};
    for (int ell = 1; ell <= 4; ++ell) {
        ChainSlice sx = chain_slice(c4, ell);
        ChainSlice sy = chain_slice(k2, ell);
        for (int k = 1; k <= ell; ++k) {
            auto fk = induced_chain_map(f, c4, k2, sx.bases[static_cast<std::size_t>(k)],
                                        sy.bases[static_cast<std::size_t>(k)]);
            auto fkm1 = induced_chain_map(f, c4, k2, sx.bases[static_cast<std::size_t>(k) - 1],
                                          sy.bases[static_cast<std::size_t>(k) - 1]);
            CHECK(sparse_equal(sparse_compose(fkm1, sx.boundaries[static_cast<std::size_t>(k)]),
                               sparse_compose(sy.boundaries[static_cast<std::size_t>(k)], fk)));
        }
    }
    // Non-distance-decreasing map is rejected.
    Graph p3({"a", "b", "c"}, {{0, 1}, {1, 2}});
    std::vector<Vertex> stretch{0, 2, 1};  // d(a,b)=1 but d(f a, f b)=2
    CHECK_THROWS_AS(induced_chain_map(stretch, p3, p3, chain_slice(p3, 1).bases[1],
                                      chain_slice(p3, 1).bases[1]),
                    std::invalid_argument);
}

TEST_CASE("sparse matrix helpers") {
    SparseIntMatrix a(2, 2);
    a.add_entry(0, 0, 1);
    a.add_entry(1, 1, -1);
    SparseIntMatrix b(2, 2);
    b.add_entry(0, 1, 1);
    SparseIntMatrix ab = sparse_compose(a, b);  // a * b
    CHECK_FALSE(sparse_is_zero(ab));
    SparseIntMatrix expect(2, 2);
    expect.add_entry(0, 1, 1);
    CHECK(sparse_equal(ab, expect));
    SparseIntMatrix cancel(2, 2);
    cancel.add_entry(0, 0, 1);
    cancel.add_entry(0, 0, -1);
    CHECK(sparse_is_zero(cancel));
}
