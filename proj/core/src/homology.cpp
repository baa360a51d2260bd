#include "magnitude/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mag {

namespace {

// --- dense exact SNF on the residual left after unit-pivot elimination ---

class DenseInt {
public:
    DenseInt(int r, int c) : rows_(r), cols_(c), a_(static_cast<std::size_t>(r) * c) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }
    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
    }
    void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
        for (int c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
    }
    void add_col(int dst, int src, const Int& f) {
        for (int r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

std::vector<Int> dense_snf_factors(DenseInt m) {
    std::vector<Int> factors;
    const int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        // Find a minimal-magnitude nonzero entry in the trailing block.
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows(); ++r)
            for (int c = t; c < m.cols(); ++c) {
                const Int& v = m.at(r, c);
                if (v == 0) continue;
                if (pr < 0 || abs(v) < abs(m.at(pr, pc))) { pr = r; pc = c; }
            }
        if (pr < 0) break;
        m.swap_rows(t, pr);
        m.swap_cols(t, pc);
        // Reduce until the pivot divides its whole row and column.
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int r = t + 1; r < m.rows(); ++r) {
                if (m.at(r, t) == 0) continue;
                Int q = m.at(r, t) / m.at(t, t);
                m.add_row(r, t, -q);
                if (m.at(r, t) != 0) { m.swap_rows(t, r); dirty = true; }
            }
            for (int c = t + 1; c < m.cols(); ++c) {
                if (m.at(t, c) == 0) continue;
                Int q = m.at(t, c) / m.at(t, t);
                m.add_col(c, t, -q);
                if (m.at(t, c) != 0) { m.swap_cols(t, c); dirty = true; }
            }
            if (!dirty) {
                // Pivot must also divide the rest of the block; if some
                // entry resists, mix its row in and restart.
                for (int r = t + 1; r < m.rows() && !dirty; ++r)
                    for (int c = t + 1; c < m.cols(); ++c)
                        if (m.at(r, c) % m.at(t, t) != 0) {
                            m.add_row(t, r, 1);
                            dirty = true;
                            break;
                        }
            }
        }
        factors.push_back(abs(m.at(t, t)));
    }
    return factors;
}

// --- sparse unit-pivot phase ---

struct SparseWork {
    std::vector<std::unordered_map<int, Int>> rows;  // row -> col -> coeff
    std::vector<std::unordered_set<int>> cols;       // col -> rows touching it
    std::vector<bool> row_live, col_live;

    explicit SparseWork(const SparseIntMatrix& m)
        : rows(static_cast<std::size_t>(m.rows)),
          cols(static_cast<std::size_t>(m.cols)),
          row_live(static_cast<std::size_t>(m.rows), true),
          col_live(static_cast<std::size_t>(m.cols), true) {
        for (int c = 0; c < m.cols; ++c)
            for (auto [r, v] : m.columns[static_cast<std::size_t>(c)]) {
                Int& slot = rows[static_cast<std::size_t>(r)][c];
                slot += v;
                if (slot == 0) rows[static_cast<std::size_t>(r)].erase(c);
            }
        for (int r = 0; r < m.rows; ++r)
            for (const auto& [c, v] : rows[static_cast<std::size_t>(r)])
                cols[static_cast<std::size_t>(c)].insert(r);
    }
};

int eliminate_unit_pivots(SparseWork& w) {
    // Lazy bucket queue of live rows keyed by current nnz; within a popped
    // row, pick a ±1 entry in the thinnest column (Markowitz-style).
    const int nrows = static_cast<int>(w.rows.size());
    std::vector<std::vector<int>> buckets;
    auto push = [&](int r) {
        std::size_t nnz = w.rows[static_cast<std::size_t>(r)].size();
        if (nnz == 0) return;
        if (buckets.size() <= nnz) buckets.resize(nnz + 1);
        buckets[nnz].push_back(r);
    };
    for (int r = 0; r < nrows; ++r) push(r);
    int pivots = 0;
    for (std::size_t b = 1; b < buckets.size(); ++b) {
        while (!buckets[b].empty()) {
            int r = buckets[b].back();
            buckets[b].pop_back();
            if (!w.row_live[static_cast<std::size_t>(r)]) continue;
            auto& row = w.rows[static_cast<std::size_t>(r)];
            if (row.size() != b) continue;  // stale entry; a fresh one exists
            int pc = -1;
            Int pv;
            for (const auto& [c, v] : row)
                if (v == 1 || v == -1)
                    if (pc < 0 || w.cols[static_cast<std::size_t>(c)].size() <
                                      w.cols[static_cast<std::size_t>(pc)].size()) {
                        pc = c;
                        pv = v;
                    }
            if (pc < 0) continue;  // no unit entry; leave for the dense phase
            ++pivots;
            // Clear column pc using row r (pivot value ±1 keeps everything in Z).
            auto targets = w.cols[static_cast<std::size_t>(pc)];
            for (int r2 : targets) {
                if (r2 == r) continue;
                auto& row2 = w.rows[static_cast<std::size_t>(r2)];
                Int f = row2.at(pc) * pv;  // pv is its own inverse
                for (const auto& [c2, v2] : row) {
                    Int& slot = row2[c2];
                    bool was_zero = (slot == 0);
                    slot -= f * v2;
                    if (slot == 0) {
                        row2.erase(c2);
                        w.cols[static_cast<std::size_t>(c2)].erase(r2);
                    } else if (was_zero) {
                        w.cols[static_cast<std::size_t>(c2)].insert(r2);
                    }
                }
                push(r2);
            }
            // Retire pivot row and column.
            w.row_live[static_cast<std::size_t>(r)] = false;
            w.col_live[static_cast<std::size_t>(pc)] = false;
            for (const auto& [c2, v2] : row) w.cols[static_cast<std::size_t>(c2)].erase(r);
            row.clear();
        }
        // Rows pushed into earlier buckets during elimination must still be
        // visited; restart the sweep from the smallest non-empty bucket.
        for (std::size_t b2 = 1; b2 < b; ++b2)
            if (!buckets[b2].empty()) {
                b = b2 - 1;
                break;
            }
    }
    return pivots;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
    SparseWork w(m);
    int unit_pivots = eliminate_unit_pivots(w);

    // Compact the residual into a dense matrix.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < m.rows; ++r)
        if (w.row_live[static_cast<std::size_t>(r)] && !w.rows[static_cast<std::size_t>(r)].empty())
            live_rows.push_back(r);
    std::unordered_map<int, int> col_index;
    for (int c = 0; c < m.cols; ++c)
        if (w.col_live[static_cast<std::size_t>(c)] && !w.cols[static_cast<std::size_t>(c)].empty()) {
            col_index.emplace(c, static_cast<int>(live_cols.size()));
            live_cols.push_back(c);
        }
    DenseInt dense(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (int i = 0; i < static_cast<int>(live_rows.size()); ++i)
        for (const auto& [c, v] : w.rows[static_cast<std::size_t>(live_rows[static_cast<std::size_t>(i)])])
            dense.at(i, col_index.at(c)) = v;

    std::vector<Int> residual = dense_snf_factors(std::move(dense));

    SnfResult out;
    out.rank = unit_pivots + static_cast<int>(residual.size());
    out.invariant_factors.assign(static_cast<std::size_t>(unit_pivots), Int(1));
    out.invariant_factors.insert(out.invariant_factors.end(), residual.begin(), residual.end());
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
    return out;
}

HomologySlice homology_slice(const ChainSlice& s) {
    HomologySlice h;
    h.ell = s.ell;
    const int kmax = static_cast<int>(s.bases.size()) - 1;
    std::vector<SnfResult> snf(static_cast<std::size_t>(kmax) + 2);
    for (int k = 1; k <= kmax; ++k)
        snf[static_cast<std::size_t>(k)] = smith_normal_form(s.boundaries[static_cast<std::size_t>(k)]);
    for (int k = 0; k <= kmax; ++k) {
        int dim = static_cast<int>(s.bases[static_cast<std::size_t>(k)].size());
        int rk = (k >= 1) ? snf[static_cast<std::size_t>(k)].rank : 0;
        int rk1 = (k + 1 <= kmax) ? snf[static_cast<std::size_t>(k) + 1].rank : 0;
        h.ranks.push_back(dim - rk - rk1);
        h.torsions.push_back(k + 1 <= kmax ? snf[static_cast<std::size_t>(k) + 1].nonunit_factors()
                                           : std::vector<Int>{});
    }
    return h;
}

Int euler_characteristic(const ChainSlice& s) {
    Int chi = 0;
    int sign = 1;
    for (const auto& basis : s.bases) {
        chi += sign * static_cast<int>(basis.size());
        sign = -sign;
    }
    return chi;
}

}  // namespace mag
