#include <doctest.h>

#include <algorithm>
#include <vector>

#include <boost/rational.hpp>

#include <magnitude/chains.hpp>
#include <magnitude/graph.hpp>
#include <magnitude/homology.hpp>
#include <magnitude/random_gen.hpp>

using namespace mag;

namespace {

Graph complete_graph(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) labels.push_back("k" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(labels, edges);
}

// Independent rank oracle: Gaussian elimination over exact rationals.
int rational_rank(const SparseIntMatrix& m) {
    using Rat = boost::rational<Int>;
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(m.rows),
                                    std::vector<Rat>(static_cast<std::size_t>(m.cols)));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)])
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += Rat(v);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != Rat(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                    a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            if (f == Rat(0)) continue;
            for (int c = col; c < m.cols; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

SparseIntMatrix random_matrix(Rng& rng, int rows, int cols, int density_pct, int max_abs) {
    SparseIntMatrix m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            if (rng.chance(static_cast<std::uint64_t>(density_pct), 100)) {
                int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * max_abs))) -
                        max_abs;
                if (v != 0) m.add_entry(r, c, v);
            }
    return m;
}

}  // namespace

TEST_CASE("SNF of hand-checked matrices") {
    // diag(2, 3) ~ diag(1, 6)
    SparseIntMatrix d23(2, 2);
    d23.add_entry(0, 0, 2);
    d23.add_entry(1, 1, 3);
    SnfResult r = smith_normal_form(d23);
    CHECK(r.rank == 2);
    REQUIRE(r.invariant_factors.size() == 2);
    CHECK(r.invariant_factors[0] == 1);
    CHECK(r.invariant_factors[1] == 6);

    // [[2, 4], [-2, 6]]: entry gcd 2, determinant 20, so factors 2, 10.
    SparseIntMatrix m(2, 2);
    m.add_entry(0, 0, 2);
    m.add_entry(0, 1, 4);
    m.add_entry(1, 0, -2);
    m.add_entry(1, 1, 6);
    SnfResult r2 = smith_normal_form(m);
    CHECK(r2.rank == 2);
    CHECK(r2.invariant_factors[0] == 2);
    CHECK(r2.invariant_factors[1] == 10);

    // Zero and empty matrices.
    CHECK(smith_normal_form(SparseIntMatrix(3, 3)).rank == 0);
    CHECK(smith_normal_form(SparseIntMatrix(0, 5)).rank == 0);
    CHECK(smith_normal_form(SparseIntMatrix(5, 0)).rank == 0);
}

TEST_CASE("SNF divisibility chain and rank vs the rational oracle") {
    Rng rng(808);
    for (int t = 0; t < 80; ++t) {
        SparseIntMatrix m = random_matrix(rng, 1 + static_cast<int>(rng.below(8)),
                                          1 + static_cast<int>(rng.below(8)), 40, 5);
        SnfResult r = smith_normal_form(m);
        CHECK(r.rank == rational_rank(m));
        for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
            CHECK(r.invariant_factors[i] > 0);
            CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
        }
    }
}

TEST_CASE("SNF invariant under row and column permutation") {
    Rng rng(909);
    for (int t = 0; t < 40; ++t) {
        int rows = 2 + static_cast<int>(rng.below(6));
        int cols = 2 + static_cast<int>(rng.below(6));
        SparseIntMatrix m = random_matrix(rng, rows, cols, 50, 4);
        std::vector<int> rp(static_cast<std::size_t>(rows)), cp(static_cast<std::size_t>(cols));
        for (int i = 0; i < rows; ++i) rp[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < cols; ++i) cp[static_cast<std::size_t>(i)] = i;
        for (int i = rows - 1; i > 0; --i)
            std::swap(rp[static_cast<std::size_t>(i)],
                      rp[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        for (int i = cols - 1; i > 0; --i)
            std::swap(cp[static_cast<std::size_t>(i)],
                      cp[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        SparseIntMatrix p(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)])
                p.add_entry(rp[static_cast<std::size_t>(r)], cp[static_cast<std::size_t>(c)], v);
        SnfResult a = smith_normal_form(m);
        SnfResult b = smith_normal_form(p);
        CHECK(a.rank == b.rank);
        CHECK(a.invariant_factors == b.invariant_factors);
    }
}

TEST_CASE("homology of length grading 0 is free of rank |V|") {
    Rng rng(321);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 6);
        HomologySlice h = homology_slice(chain_slice(g, 0));
        CHECK(h.ranks[0] == g.vertex_count());
        CHECK(h.torsions[0].empty());
    }
}

TEST_CASE("complete graph: MH_k^ell free of rank n(n-1)^k, concentrated at k = ell") {
    for (int n = 2; n <= 4; ++n) {
        Graph g = complete_graph(n);
        for (int ell = 0; ell <= 4; ++ell) {
            HomologySlice h = homology_slice(chain_slice(g, ell));
            for (int k = 0; k <= ell; ++k) {
                if (k == ell) {
                    Int expect = n;
                    for (int i = 0; i < k; ++i) expect *= n - 1;
                    CHECK(h.ranks[static_cast<std::size_t>(k)] == expect);
                } else {
                    CHECK(h.ranks[static_cast<std::size_t>(k)] == 0);
                }
                CHECK(h.torsions[static_cast<std::size_t>(k)].empty());
            }
        }
    }
}

TEST_CASE("homology Euler characteristic matches the magnitude coefficients") {
    Rng rng(654);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng, 5);
        TruncatedSeries m = magnitude_by_path_count(g, 4);
        for (int ell = 0; ell <= 4; ++ell) {
            ChainSlice s = chain_slice(g, ell);
            CHECK(euler_characteristic(s) == m.coeff(ell));
            HomologySlice h = homology_slice(s);
            Int chi = 0;
            int sign = 1;
            for (std::size_t k = 0; k < h.ranks.size(); ++k) {
                chi += sign * h.ranks[k];
                sign = -sign;
            }
            CHECK(chi == m.coeff(ell));
        }
    }
}
