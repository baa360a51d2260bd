#include "magnitude/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mag {

Graph::Graph(std::vector<std::string> labels, std::vector<std::pair<Vertex, Vertex>> edges)
    : labels_(std::move(labels)) {
    const int n = vertex_count();
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second)
            throw std::invalid_argument("Graph: duplicate vertex label '" + l + "'");
    }
    std::set<std::pair<Vertex, Vertex>> es;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("Graph: loop at vertex '" + labels_[a] + "'");
        auto e = std::minmax(a, b);
        if (!es.insert({e.first, e.second}).second)
            throw std::invalid_argument("Graph: duplicate edge {" + labels_[a] + "," + labels_[b] + "}");
    }
    edges_.assign(es.begin(), es.end());
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [a, b] : edges_) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    dist_ = all_pairs_distances(*this);
}

std::optional<Vertex> Graph::find(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return std::nullopt;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix d(n, ExtDistance::infinity());
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (dist[static_cast<std::size_t>(v)] >= 0)
                d.set(s, v, ExtDistance(dist[static_cast<std::size_t>(v)]));
    }
    return d;
}

SubgraphEmbedding::SubgraphEmbedding(const Graph& domain, const Graph& codomain,
                                     std::vector<Vertex> vertex_map)
    : domain_(&domain), codomain_(&codomain), map_(std::move(vertex_map)) {
    const int n = domain.vertex_count();
    if (static_cast<int>(map_.size()) != n)
        throw std::invalid_argument("SubgraphEmbedding: map size mismatch");
    std::unordered_set<Vertex> image;
    for (Vertex w : map_) {
        if (w < 0 || w >= codomain.vertex_count())
            throw std::invalid_argument("SubgraphEmbedding: image vertex out of range");
        if (!image.insert(w).second)
            throw std::invalid_argument("SubgraphEmbedding: map not injective");
    }
    // Induced: u~v in the domain iff their images are adjacent.
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (domain.adjacent(u, v) != codomain.adjacent(map_[static_cast<std::size_t>(u)],
                                                           map_[static_cast<std::size_t>(v)]))
                throw std::invalid_argument(
                    "SubgraphEmbedding: not an induced subgraph at {" + domain.label(u) + "," +
                    domain.label(v) + "}");
}

std::optional<Vertex> SubgraphEmbedding::preimage(Vertex w) const {
    for (int v = 0; v < static_cast<int>(map_.size()); ++v)
        if (map_[static_cast<std::size_t>(v)] == w) return v;
    return std::nullopt;
}

bool is_convex(const Graph& g, const SubgraphEmbedding& w) {
    if (&w.codomain() != &g) throw std::invalid_argument("is_convex: embedding codomain mismatch");
    const Graph& sub = w.domain();
    for (Vertex u = 0; u < sub.vertex_count(); ++u)
        for (Vertex v = 0; v < sub.vertex_count(); ++v)
            if (!(sub.distance(u, v) == g.distance(w.map(u), w.map(v)))) return false;
    return true;
}

std::optional<Vertex> project_vertex(const Graph& g, std::span<const Vertex> image, Vertex v) {
    const auto& d = g.distances();
    bool reachable = false;
    for (Vertex w : image)
        if (d(v, w).is_finite()) { reachable = true; break; }
    if (!reachable) return std::nullopt;
    for (Vertex pi : image) {
        if (!d(v, pi).is_finite()) continue;
        bool ok = true;
        for (Vertex w : image)
            if (!(d(v, w) == d(v, pi) + d(pi, w))) { ok = false; break; }
        if (ok) return pi;  // the witness is unique when it exists
    }
    return std::nullopt;
}

std::optional<Vertex> project_vertex(const Graph& g, const SubgraphEmbedding& w, Vertex v) {
    if (&w.codomain() != &g) throw std::invalid_argument("project_vertex: embedding codomain mismatch");
    return project_vertex(g, std::span<const Vertex>(w.vertex_map()), v);
}

bool is_projecting_decomposition(const Graph& x, const SubgraphEmbedding& g,
                                 const SubgraphEmbedding& h) {
    if (&g.codomain() != &x || &h.codomain() != &x)
        throw std::invalid_argument("is_projecting_decomposition: codomain mismatch");
    // Vertex cover and intersection.
    std::vector<char> in_g(static_cast<std::size_t>(x.vertex_count()), 0);
    std::vector<char> in_h(static_cast<std::size_t>(x.vertex_count()), 0);
    for (Vertex v : g.vertex_map()) in_g[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : h.vertex_map()) in_h[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> inter;
    for (Vertex v = 0; v < x.vertex_count(); ++v) {
        if (!in_g[static_cast<std::size_t>(v)] && !in_h[static_cast<std::size_t>(v)]) return false;
        if (in_g[static_cast<std::size_t>(v)] && in_h[static_cast<std::size_t>(v)]) inter.push_back(v);
    }
    if (inter.empty()) return false;
    // Edge cover: every edge of X lies inside G or inside H.
    for (auto [a, b] : x.edges()) {
        bool covered = (in_g[static_cast<std::size_t>(a)] && in_g[static_cast<std::size_t>(b)]) ||
                       (in_h[static_cast<std::size_t>(a)] && in_h[static_cast<std::size_t>(b)]);
        if (!covered) return false;
    }
    // G∩H convex in X: induced subgraph distances equal ambient ones.
    {
        std::vector<std::string> labels;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v : inter) labels.push_back(x.label(v));
        for (std::size_t i = 0; i < inter.size(); ++i)
            for (std::size_t j = i + 1; j < inter.size(); ++j)
                if (x.adjacent(inter[i], inter[j]))
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        Graph w(std::move(labels), std::move(edges));
        for (std::size_t i = 0; i < inter.size(); ++i)
            for (std::size_t j = 0; j < inter.size(); ++j)
                if (!(w.distance(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
                      x.distance(inter[i], inter[j])))
                    return false;
    }
    // Every H vertex with an edge-path to G∩H projects to it.
    for (Vertex v : h.vertex_map()) {
        bool reach = false;
        for (Vertex w : inter)
            if (x.distance(v, w).is_finite()) { reach = true; break; }
        if (reach && !project_vertex(x, std::span<const Vertex>(inter), v)) return false;
    }
    return true;
}

bool is_between(const DistanceMatrix& d, Vertex u, Vertex w, Vertex v) {
    return d(u, v) == d(u, w) + d(w, v);
}

Graph cartesian_product(const Graph& x, const Graph& y) {
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int ny = y.vertex_count();
    auto id = [&](Vertex u, Vertex v) { return u * ny + v; };
    for (Vertex u = 0; u < x.vertex_count(); ++u)
        for (Vertex v = 0; v < ny; ++v) labels.push_back(x.label(u) + "," + y.label(v));
    for (Vertex u = 0; u < x.vertex_count(); ++u)
        for (auto [a, b] : y.edges()) edges.emplace_back(id(u, a), id(u, b));
    for (Vertex v = 0; v < ny; ++v)
        for (auto [a, b] : x.edges()) edges.emplace_back(id(a, v), id(b, v));
    return Graph(std::move(labels), std::move(edges));
}

Graph disjoint_union(const Graph& x, const Graph& y) {
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& l : x.labels()) labels.push_back("A:" + l);
    for (const auto& l : y.labels()) labels.push_back("B:" + l);
    const int nx = x.vertex_count();
    for (auto [a, b] : x.edges()) edges.emplace_back(a, b);
    for (auto [a, b] : y.edges()) edges.emplace_back(nx + a, nx + b);
    return Graph(std::move(labels), std::move(edges));
}

ExtDistance path_length(const DistanceMatrix& d, std::span<const Vertex> p) {
    if (p.empty()) throw std::invalid_argument("path_length: empty path");
    ExtDistance total(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) total = total + d(p[i], p[i + 1]);
    return total;
}

namespace {

// Backtracking over distance-profile-compatible assignments.
bool extend_isometry(const Graph& a, const Graph& b, std::vector<Vertex>& assign, int i) {
    const int n = a.vertex_count();
    if (i == n) return true;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < i; ++j) used[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])] = 1;
    for (Vertex w = 0; w < n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            ok = a.distance(j, i) == b.distance(assign[static_cast<std::size_t>(j)], w);
        if (!ok) continue;
        assign[static_cast<std::size_t>(i)] = w;
        if (extend_isometry(a, b, assign, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool are_isometric(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    const int n = a.vertex_count();
    // Cheap invariant: sorted multisets of distance profiles must agree.
    auto profiles = [n](const Graph& g) {
        std::vector<std::vector<std::int64_t>> ps;
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::int64_t> p;
            for (Vertex u = 0; u < n; ++u) {
                ExtDistance d = g.distance(v, u);
                p.push_back(d.is_finite() ? d.value() : -1);
            }
            std::sort(p.begin(), p.end());
            ps.push_back(std::move(p));
        }
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    if (profiles(a) != profiles(b)) return false;
    std::vector<Vertex> assign(static_cast<std::size_t>(n), -1);
    return extend_isometry(a, b, assign, 0);
}

}  // namespace mag
