#include "magnitude/chains.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace mag {

SparseIntMatrix sparse_compose(const SparseIntMatrix& b, const SparseIntMatrix& a) {
    if (b.cols != a.rows) throw std::invalid_argument("sparse_compose: shape mismatch");
    SparseIntMatrix r(b.rows, a.cols);
    std::unordered_map<int, long long> acc;
    for (int c = 0; c < a.cols; ++c) {
        acc.clear();
        for (auto [mid, ca] : a.columns[static_cast<std::size_t>(c)])
            for (auto [row, cb] : b.columns[static_cast<std::size_t>(mid)])
                acc[row] += static_cast<long long>(ca) * cb;
        for (auto [row, v] : acc)
            if (v != 0) r.add_entry(row, c, static_cast<int>(v));
    }
    return r;
}

bool sparse_is_zero(const SparseIntMatrix& m) {
    std::map<int, long long> acc;
    for (const auto& col : m.columns) {
        acc.clear();
        for (auto [row, v] : col) acc[row] += v;
        for (const auto& [row, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

bool sparse_equal(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    auto norm = [](const std::vector<std::pair<int, int>>& col) {
        std::map<int, int> m;
        for (auto [r, v] : col) m[r] += v;
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
        return m;
    };
    for (int c = 0; c < a.cols; ++c)
        if (norm(a.columns[static_cast<std::size_t>(c)]) !=
            norm(b.columns[static_cast<std::size_t>(c)]))
            return false;
    return true;
}

std::vector<std::vector<NondegeneratePath>> enumerate_paths(const Graph& g, int ell) {
    const int n = g.vertex_count();
    std::vector<std::vector<NondegeneratePath>> out(static_cast<std::size_t>(ell) + 1);
    // Finite-distance successor lists, in vertex order (keeps output lexicographic).
    std::vector<std::vector<std::pair<Vertex, std::int64_t>>> succ(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            ExtDistance d = g.distance(u, v);
            if (d.is_finite() && d.value() <= ell)
                succ[static_cast<std::size_t>(u)].emplace_back(v, d.value());
        }
    std::vector<Vertex> stack;
    // DFS extension; every hop costs >= 1 so depth is bounded by ell.
    auto dfs = [&](auto&& self, std::int64_t len) -> void {
        if (len == ell) {
            int k = static_cast<int>(stack.size()) - 1;
            out[static_cast<std::size_t>(k)].push_back({stack, len});
        }
        if (len >= ell) return;
        for (auto [v, w] : succ[static_cast<std::size_t>(stack.back())]) {
            if (len + w > ell) continue;
            stack.push_back(v);
            self(self, len + w);
            stack.pop_back();
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        stack.assign(1, s);
        dfs(dfs, 0);
    }
    return out;
}

TruncatedSeries magnitude_by_path_count(const Graph& g, int order) {
    const int n = g.vertex_count();
    TruncatedSeries c(order);
    c.coeff(0) = n;  // k = 0: one 0-path per vertex
    // counts[v][l] = #non-degenerate k-paths of length l ending at v.
    std::vector<std::vector<Int>> counts(static_cast<std::size_t>(n),
                                         std::vector<Int>(static_cast<std::size_t>(order) + 1));
    for (Vertex v = 0; v < n; ++v) counts[static_cast<std::size_t>(v)][0] = 1;
    int sign = 1;
    for (int k = 1; k <= order; ++k) {
        sign = -sign;
        std::vector<std::vector<Int>> next(static_cast<std::size_t>(n),
                                           std::vector<Int>(static_cast<std::size_t>(order) + 1));
        bool any = false;
        for (Vertex u = 0; u < n; ++u)
            for (int l = 0; l <= order; ++l) {
                const Int& cnt = counts[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)];
                if (cnt == 0) continue;
                for (Vertex v = 0; v < n; ++v) {
                    if (v == u) continue;
                    ExtDistance d = g.distance(u, v);
                    if (!d.is_finite()) continue;
                    std::int64_t nl = l + d.value();
                    if (nl > order) continue;
                    next[static_cast<std::size_t>(v)][static_cast<std::size_t>(nl)] += cnt;
                    any = true;
                }
            }
        counts = std::move(next);
        if (!any) break;
        for (Vertex v = 0; v < n; ++v)
            for (int l = k; l <= order; ++l)
                c.coeff(l) += sign * counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)];
    }
    return c;
}

TruncatedSeries magnitude_by_euler_characteristic(const Graph& g, int order) {
    const int n = g.vertex_count();
    TruncatedSeries c(order);
    std::vector<std::vector<std::pair<Vertex, std::int64_t>>> succ(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            ExtDistance d = g.distance(u, v);
            if (d.is_finite() && d.value() <= order)
                succ[static_cast<std::size_t>(u)].emplace_back(v, d.value());
        }
    auto dfs = [&](auto&& self, Vertex last, std::int64_t len, int sign) -> void {
        c.coeff(static_cast<int>(len)) += sign;
        for (auto [v, w] : succ[static_cast<std::size_t>(last)])
            if (len + w <= order) self(self, v, len + w, -sign);
    };
    for (Vertex s = 0; s < n; ++s) dfs(dfs, s, 0, 1);
    return c;
}

namespace {

struct PathHash {
    std::size_t operator()(const std::vector<Vertex>& p) const {
        std::size_t h = 1469598103934665603ull;
        for (Vertex v : p) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using PathIndex = std::unordered_map<std::vector<Vertex>, int, PathHash>;

PathIndex index_basis(const std::vector<NondegeneratePath>& basis) {
    PathIndex idx;
    idx.reserve(basis.size() * 2);
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        idx.emplace(basis[static_cast<std::size_t>(i)].vertices, i);
    return idx;
}

}  // namespace

SparseIntMatrix boundary_matrix(const Graph& g, const std::vector<NondegeneratePath>& basis_k,
                                const std::vector<NondegeneratePath>& basis_km1, int ell) {
    SparseIntMatrix d(static_cast<int>(basis_km1.size()), static_cast<int>(basis_k.size()));
    PathIndex rows = index_basis(basis_km1);
    std::vector<Vertex> face;
    for (int col = 0; col < static_cast<int>(basis_k.size()); ++col) {
        const auto& p = basis_k[static_cast<std::size_t>(col)].vertices;
        const int k = static_cast<int>(p.size()) - 1;
        int sign = 1;
        for (int i = 1; i <= k - 1; ++i) {
            sign = -sign;  // (-1)^i
            // Dropping x_i keeps the length iff x_i lies between its neighbors.
            if (!is_between(g.distances(), p[static_cast<std::size_t>(i) - 1],
                            p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]))
                continue;
            face.assign(p.begin(), p.end());
            face.erase(face.begin() + i);
            auto it = rows.find(face);
            if (it == rows.end())
                throw std::logic_error("boundary_matrix: face missing from basis");
            d.add_entry(it->second, col, sign);
        }
    }
    return d;
}

ChainSlice chain_slice(const Graph& g, int ell) {
    ChainSlice s;
    s.ell = ell;
    s.bases = enumerate_paths(g, ell);
    s.boundaries.resize(s.bases.size());
    for (int k = 1; k <= ell; ++k)
        s.boundaries[static_cast<std::size_t>(k)] =
            boundary_matrix(g, s.bases[static_cast<std::size_t>(k)],
                            s.bases[static_cast<std::size_t>(k) - 1], ell);
    return s;
}

SparseIntMatrix induced_chain_map(const std::vector<Vertex>& f, const Graph& x, const Graph& y,
                                  const std::vector<NondegeneratePath>& basis_x,
                                  const std::vector<NondegeneratePath>& basis_y) {
    if (static_cast<int>(f.size()) != x.vertex_count())
        throw std::invalid_argument("induced_chain_map: map size mismatch");
    for (Vertex u = 0; u < x.vertex_count(); ++u)
        for (Vertex v = 0; v < x.vertex_count(); ++v)
            if (y.distance(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)]) >
                x.distance(u, v))
                throw std::invalid_argument("induced_chain_map: map is not distance-decreasing");
    SparseIntMatrix m(static_cast<int>(basis_y.size()), static_cast<int>(basis_x.size()));
    PathIndex rows = index_basis(basis_y);
    std::vector<Vertex> img;
    for (int col = 0; col < static_cast<int>(basis_x.size()); ++col) {
        const auto& p = basis_x[static_cast<std::size_t>(col)].vertices;
        img.clear();
        for (Vertex v : p) img.push_back(f[static_cast<std::size_t>(v)]);
        bool keeps = true;
        for (std::size_t i = 0; i + 1 < p.size() && keeps; ++i)
            keeps = y.distance(img[i], img[i + 1]) == x.distance(p[i], p[i + 1]);
        if (!keeps) continue;
        auto it = rows.find(img);
        if (it == rows.end())
            throw std::logic_error("induced_chain_map: image missing from codomain basis");
        m.add_entry(it->second, col, 1);
    }
    return m;
}

}  // namespace mag
