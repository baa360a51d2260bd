#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "magnitude/graph.hpp"
#include "magnitude/series.hpp"

namespace mag {

/// Tuple of vertices with consecutive entries distinct; `length` is the
/// sum of consecutive distances (finite for any path stored in a basis).
struct NondegeneratePath {
    std::vector<Vertex> vertices;
    std::int64_t length = 0;

    int degree() const { return static_cast<int>(vertices.size()) - 1; }
    friend bool operator==(const NondegeneratePath&, const NondegeneratePath&) = default;
    friend auto operator<=>(const NondegeneratePath&, const NondegeneratePath&) = default;
};

/// Integer matrix stored column-major as (row, coefficient) lists.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

    void add_entry(int row, int col, int coeff) {
        columns[static_cast<std::size_t>(col)].emplace_back(row, coeff);
    }
    std::size_t entry_count() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
};

/// Composition b∘a of sparse matrices (a applied first).
SparseIntMatrix sparse_compose(const SparseIntMatrix& b, const SparseIntMatrix& a);
bool sparse_is_zero(const SparseIntMatrix& m);
bool sparse_equal(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// One length grading of the magnitude chain complex: the bases of
/// non-degenerate k-paths of length exactly `ell`, k = 0..ell, plus the
/// boundary matrices d_k : C_k -> C_{k-1}.
struct ChainSlice {
    int ell = 0;
    std::vector<std::vector<NondegeneratePath>> bases;  // index k
    std::vector<SparseIntMatrix> boundaries;            // index k, d_k (k >= 1)
};

/// All non-degenerate paths of length exactly `ell`, grouped by degree k
/// (k <= ell always holds), in lexicographic vertex-index order.
std::vector<std::vector<NondegeneratePath>> enumerate_paths(const Graph& g, int ell);

/// Signed path-count coefficients c_l = sum_k (-1)^k #{k-paths of length l},
/// computed by dynamic programming without materializing paths.
TruncatedSeries magnitude_by_path_count(const Graph& g, int order);

/// The same coefficients as sum_l chi(MC_*^l) q^l, obtained by walking the
/// path tree depth-first and tallying (-1)^k per path. Independent of the
/// DP route (no shared tables) and of matrix inversion.
TruncatedSeries magnitude_by_euler_characteristic(const Graph& g, int order);

/// Boundary d_k of MC^ell: entry (-1)^i at the face obtained by dropping
/// the interior vertex x_i whenever the shortened path keeps length ell.
SparseIntMatrix boundary_matrix(const Graph& g, const std::vector<NondegeneratePath>& basis_k,
                                const std::vector<NondegeneratePath>& basis_km1, int ell);

/// Full slice: bases plus all boundary matrices.
ChainSlice chain_slice(const Graph& g, int ell);

/// Chain map MC_k^ell(x) -> MC_k^ell(y) induced by a distance-decreasing
/// vertex map f; a generator maps to its image iff every hop distance is
/// preserved exactly, else to zero. Throws if f is not distance-decreasing.
SparseIntMatrix induced_chain_map(const std::vector<Vertex>& f, const Graph& x, const Graph& y,
                                  const std::vector<NondegeneratePath>& basis_x,
                                  const std::vector<NondegeneratePath>& basis_y);

}  // namespace mag
