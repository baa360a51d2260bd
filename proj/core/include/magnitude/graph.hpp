#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "magnitude/ext_distance.hpp"

namespace mag {

/// Vertices are referred to by their index into the graph's label list;
/// labels are unique within a graph and define the basis order used by
/// every downstream matrix.
using Vertex = int;

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, ExtDistance fill) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const { return n_; }
    ExtDistance operator()(Vertex u, Vertex v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(Vertex u, Vertex v, ExtDistance d) { data_[static_cast<std::size_t>(u) * n_ + v] = d; }

private:
    int n_ = 0;
    std::vector<ExtDistance> data_;
};

/// Finite simple undirected graph. Immutable after construction; the
/// shortest-path metric is computed once by BFS and cached.
class Graph {
public:
    /// Throws std::invalid_argument on duplicate labels, loops,
    /// duplicate edges, or out-of-range endpoints.
    Graph(std::vector<std::string> labels, std::vector<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }

    /// Index of a label, or nullopt.
    std::optional<Vertex> find(const std::string& label) const;

    /// Edges with endpoints ordered (min, max), sorted.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    bool adjacent(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    const DistanceMatrix& distances() const { return dist_; }
    ExtDistance distance(Vertex u, Vertex v) const { return dist_(u, v); }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    DistanceMatrix dist_;
};

/// Injective vertex map embedding `domain` as an induced subgraph of
/// `codomain`. Induced-ness is enforced at construction.
class SubgraphEmbedding {
public:
    SubgraphEmbedding(const Graph& domain, const Graph& codomain, std::vector<Vertex> vertex_map);

    const Graph& domain() const { return *domain_; }
    const Graph& codomain() const { return *codomain_; }
    Vertex map(Vertex v) const { return map_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& vertex_map() const { return map_; }

    /// Preimage of a codomain vertex, or nullopt.
    std::optional<Vertex> preimage(Vertex w) const;

private:
    const Graph* domain_;
    const Graph* codomain_;
    std::vector<Vertex> map_;
};

/// BFS shortest-path metric; unreachable pairs are Infinity.
DistanceMatrix all_pairs_distances(const Graph& g);

/// True iff internal distances in the embedded subgraph equal ambient distances.
bool is_convex(const Graph& g, const SubgraphEmbedding& w);

/// Projection of v onto the convex embedded subgraph w: the unique
/// vertex pi (returned as a codomain vertex) with
/// d(v, u) = d(v, pi) + d(pi, u) for every u in the image of w.
/// Returns nullopt when v has no edge-path to the subgraph or no
/// witness exists.
std::optional<Vertex> project_vertex(const Graph& g, const SubgraphEmbedding& w, Vertex v);

/// Projection onto a vertex subset already known to induce a convex
/// subgraph of g (same additive condition, quantified over `image`).
std::optional<Vertex> project_vertex(const Graph& g, std::span<const Vertex> image, Vertex v);

/// (X; G, H) is a projecting decomposition: G and H cover X as graphs
/// (vertices and edges), G∩H is nonempty and convex in X, and H
/// projects to G∩H.
bool is_projecting_decomposition(const Graph& x, const SubgraphEmbedding& g, const SubgraphEmbedding& h);

/// d(u,v) == d(u,w) + d(w,v), Infinity-aware.
bool is_between(const DistanceMatrix& d, Vertex u, Vertex w, Vertex v);

/// Graph-theoretic cartesian product; vertex (u,v) is labeled
/// "<label(u)>,<label(v)>" and ordered u-major.
Graph cartesian_product(const Graph& x, const Graph& y);

/// Disjoint union; labels prefixed "A:" / "B:".
Graph disjoint_union(const Graph& x, const Graph& y);

/// Sum of consecutive distances; Infinity absorbs.
ExtDistance path_length(const DistanceMatrix& d, std::span<const Vertex> p);

/// Exhaustive search for a distance-preserving vertex bijection.
bool are_isometric(const Graph& a, const Graph& b);

}  // namespace mag
