#include "magnitude/twist.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mag {

namespace {

std::vector<Vertex> inverse_permutation(const std::vector<Vertex>& p) {
    std::vector<Vertex> inv(p.size(), -1);
    for (Vertex v = 0; v < static_cast<Vertex>(p.size()); ++v)
        inv[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] = v;
    return inv;
}

}  // namespace

Vertex TwistPair::projection(Owner o, Vertex biased) const {
    if (vertex_class[static_cast<std::size_t>(biased)] != VertexClass::Biased)
        throw std::invalid_argument("projection: vertex is not biased");
    const Graph& gr = graph(o);
    for (Vertex p : k_to_shared) {
        if (!gr.distance(biased, p).is_finite()) continue;
        bool witness = true;
        for (Vertex w : k_to_shared)
            if (gr.distance(biased, w) != gr.distance(biased, p) + gr.distance(p, w)) {
                witness = false;
                break;
            }
        if (witness) return p;
    }
    throw std::logic_error("projection: biased vertex has no projection witness");
}

Vertex TwistPair::alpha_shared(Vertex gluing) const {
    for (Vertex kv = 0; kv < static_cast<Vertex>(k_to_shared.size()); ++kv)
        if (k_to_shared[static_cast<std::size_t>(kv)] == gluing)
            return k_to_shared[static_cast<std::size_t>(spec.alpha[static_cast<std::size_t>(kv)])];
    throw std::invalid_argument("alpha_shared: not a gluing vertex");
}

Vertex TwistPair::alpha_inverse_shared(Vertex gluing) const {
    for (Vertex kv = 0; kv < static_cast<Vertex>(k_to_shared.size()); ++kv)
        if (k_to_shared[static_cast<std::size_t>(spec.alpha[static_cast<std::size_t>(kv)])] == gluing)
            return k_to_shared[static_cast<std::size_t>(kv)];
    throw std::invalid_argument("alpha_inverse_shared: not a gluing vertex");
}

TwistPair build_twist_pair(const TwistSpec& spec) {
    const int nk = spec.k.vertex_count();
    if (static_cast<int>(spec.iota_g.size()) != nk || static_cast<int>(spec.iota_h.size()) != nk ||
        static_cast<int>(spec.alpha.size()) != nk)
        throw std::invalid_argument("build_twist_pair: map sizes must match |K|");

    // Induced-subgraph embeddings; the constructor validates.
    SubgraphEmbedding emb_g(spec.k, spec.g, spec.iota_g);
    SubgraphEmbedding emb_h(spec.k, spec.h, spec.iota_h);

    // alpha must be a self-isometry of K.
    {
        std::vector<bool> hit(static_cast<std::size_t>(nk), false);
        for (Vertex v : spec.alpha) {
            if (v < 0 || v >= nk || hit[static_cast<std::size_t>(v)])
                throw std::invalid_argument("build_twist_pair: alpha is not a bijection");
            hit[static_cast<std::size_t>(v)] = true;
        }
        for (Vertex u = 0; u < nk; ++u)
            for (Vertex v = 0; v < nk; ++v)
                if (spec.k.distance(u, v) !=
                    spec.k.distance(spec.alpha[static_cast<std::size_t>(u)],
                                    spec.alpha[static_cast<std::size_t>(v)]))
                    throw std::invalid_argument("build_twist_pair: alpha is not an isometry of K");
    }

    TwistPair pair{spec, Graph({}, {}), Graph({}, {}), {}, {}, {}, {}};

    // Shared vertex order: G-only, then K (keeping K's labels), then H-only.
    std::vector<std::string> labels;
    pair.g_to_shared.assign(static_cast<std::size_t>(spec.g.vertex_count()), -1);
    pair.h_to_shared.assign(static_cast<std::size_t>(spec.h.vertex_count()), -1);
    pair.k_to_shared.assign(static_cast<std::size_t>(nk), -1);
    for (Vertex gv = 0; gv < spec.g.vertex_count(); ++gv) {
        if (emb_g.preimage(gv)) continue;
        pair.g_to_shared[static_cast<std::size_t>(gv)] = static_cast<Vertex>(labels.size());
        labels.push_back("G:" + spec.g.label(gv));
        pair.vertex_class.push_back(VertexClass::GOnly);
    }
    for (Vertex kv = 0; kv < nk; ++kv) {
        Vertex s = static_cast<Vertex>(labels.size());
        pair.k_to_shared[static_cast<std::size_t>(kv)] = s;
        pair.g_to_shared[static_cast<std::size_t>(spec.iota_g[static_cast<std::size_t>(kv)])] = s;
        pair.h_to_shared[static_cast<std::size_t>(spec.iota_h[static_cast<std::size_t>(kv)])] = s;
        labels.push_back(spec.k.label(kv));
        pair.vertex_class.push_back(VertexClass::Gluing);
    }
    std::vector<Vertex> h_image(static_cast<std::size_t>(spec.h.vertex_count()), -1);
    for (Vertex kv = 0; kv < nk; ++kv)
        h_image[static_cast<std::size_t>(spec.iota_h[static_cast<std::size_t>(kv)])] = kv;
    for (Vertex hv = 0; hv < spec.h.vertex_count(); ++hv) {
        if (h_image[static_cast<std::size_t>(hv)] >= 0) continue;
        pair.h_to_shared[static_cast<std::size_t>(hv)] = static_cast<Vertex>(labels.size());
        labels.push_back("H:" + spec.h.label(hv));
        bool projects = project_vertex(spec.h, emb_h, hv).has_value();
        pair.vertex_class.push_back(projects ? VertexClass::Biased : VertexClass::Neutral);
    }

    // In Y, the H-side copy of a gluing vertex iota_h(kappa) is identified
    // with the shared vertex alpha^{-1}(kappa).
    std::vector<Vertex> alpha_inv = inverse_permutation(spec.alpha);
    std::vector<Vertex> h_to_shared_y = pair.h_to_shared;
    for (Vertex kv = 0; kv < nk; ++kv)
        h_to_shared_y[static_cast<std::size_t>(spec.iota_h[static_cast<std::size_t>(kv)])] =
            pair.k_to_shared[static_cast<std::size_t>(alpha_inv[static_cast<std::size_t>(kv)])];

    auto glue_edges = [&](const std::vector<Vertex>& hmap) {
        std::set<std::pair<Vertex, Vertex>> es;
        auto add = [&](Vertex a, Vertex b) { es.emplace(std::min(a, b), std::max(a, b)); };
        for (auto [a, b] : spec.g.edges())
            add(pair.g_to_shared[static_cast<std::size_t>(a)],
                pair.g_to_shared[static_cast<std::size_t>(b)]);
        for (auto [a, b] : spec.h.edges())
            add(hmap[static_cast<std::size_t>(a)], hmap[static_cast<std::size_t>(b)]);
        return std::vector<std::pair<Vertex, Vertex>>(es.begin(), es.end());
    };
    pair.x = Graph(labels, glue_edges(pair.h_to_shared));
    pair.y = Graph(labels, glue_edges(h_to_shared_y));
    return pair;
}

SycamoreValidation validate_sycamore(const TwistPair& pair) {
    const TwistSpec& spec = pair.spec;
    const int nk = spec.k.vertex_count();
    SycamoreValidation v;
    v.k_nonempty = nk > 0;

    auto k_convex_in = [&](const Graph& amb) {
        for (Vertex a = 0; a < nk; ++a)
            for (Vertex b = 0; b < nk; ++b)
                if (spec.k.distance(a, b) !=
                    amb.distance(pair.k_to_shared[static_cast<std::size_t>(a)],
                                 pair.k_to_shared[static_cast<std::size_t>(b)]))
                    return false;
        return true;
    };
    v.k_convex_x = v.k_nonempty && k_convex_in(pair.x);
    v.k_convex_y = v.k_nonempty && k_convex_in(pair.y);

    for (Vertex s = 0; s < pair.x.vertex_count(); ++s) {
        VertexClass c = pair.vertex_class[static_cast<std::size_t>(s)];
        if (c == VertexClass::Biased) v.biased.push_back(s);
        if (c == VertexClass::Neutral) v.neutral.push_back(s);
    }

    // Non-projecting vertices of H must be alpha-equidistant from K.
    std::vector<Vertex> shared_to_h(static_cast<std::size_t>(pair.x.vertex_count()), -1);
    for (Vertex hv = 0; hv < spec.h.vertex_count(); ++hv)
        shared_to_h[static_cast<std::size_t>(pair.h_to_shared[static_cast<std::size_t>(hv)])] = hv;
    for (Vertex s : v.neutral) {
        Vertex hv = shared_to_h[static_cast<std::size_t>(s)];
        for (Vertex kv = 0; kv < nk; ++kv) {
            Vertex ak = spec.alpha[static_cast<std::size_t>(kv)];
            if (spec.h.distance(hv, spec.iota_h[static_cast<std::size_t>(kv)]) !=
                spec.h.distance(hv, spec.iota_h[static_cast<std::size_t>(ak)])) {
                v.violations.push_back({s, pair.k_to_shared[static_cast<std::size_t>(kv)]});
                break;
            }
        }
    }

    if (v.valid()) {
        // Hard-check the glued distance formulas, which the sycamore
        // conditions guarantee.
        std::vector<Vertex> alpha_inv = inverse_permutation(spec.alpha);
        auto check = [&](const Graph& amb, bool shifted) {
            for (Vertex a = 0; a < spec.g.vertex_count(); ++a)
                for (Vertex b = 0; b < spec.g.vertex_count(); ++b)
                    if (spec.g.distance(a, b) !=
                        amb.distance(pair.g_to_shared[static_cast<std::size_t>(a)],
                                     pair.g_to_shared[static_cast<std::size_t>(b)]))
                        throw std::logic_error("distance formula violated on G");
            for (Vertex a = 0; a < spec.h.vertex_count(); ++a)
                for (Vertex b = 0; b < spec.h.vertex_count(); ++b) {
                    Vertex sa = pair.h_to_shared[static_cast<std::size_t>(a)];
                    Vertex sb = pair.h_to_shared[static_cast<std::size_t>(b)];
                    if (pair.vertex_class[static_cast<std::size_t>(sa)] == VertexClass::Gluing ||
                        pair.vertex_class[static_cast<std::size_t>(sb)] == VertexClass::Gluing)
                        continue;
                    if (spec.h.distance(a, b) != amb.distance(sa, sb))
                        throw std::logic_error("distance formula violated on H\\K");
                }
            for (Vertex a = 0; a < spec.g.vertex_count(); ++a)
                for (Vertex b = 0; b < spec.h.vertex_count(); ++b) {
                    Vertex sb = pair.h_to_shared[static_cast<std::size_t>(b)];
                    if (pair.vertex_class[static_cast<std::size_t>(sb)] == VertexClass::Gluing)
                        continue;
                    ExtDistance best = ExtDistance::infinity();
                    for (Vertex kv = 0; kv < nk; ++kv) {
                        Vertex hk = shifted ? spec.alpha[static_cast<std::size_t>(kv)]
                                            : static_cast<Vertex>(kv);
                        ExtDistance via =
                            spec.g.distance(a, spec.iota_g[static_cast<std::size_t>(kv)]) +
                            spec.h.distance(spec.iota_h[static_cast<std::size_t>(hk)], b);
                        best = std::min(best, via);
                    }
                    if (amb.distance(pair.g_to_shared[static_cast<std::size_t>(a)], sb) != best)
                        throw std::logic_error("distance formula violated across the gluing");
                }
        };
        check(pair.x, false);
        check(pair.y, true);
    }
    return v;
}

TauMaps tau_maps(const TwistPair& pair) {
    const int n = pair.x.vertex_count();
    TauMaps t;
    t.tau_g.resize(static_cast<std::size_t>(n));
    t.tau_h.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        t.tau_g[static_cast<std::size_t>(v)] = v;
        t.tau_h[static_cast<std::size_t>(v)] =
            pair.vertex_class[static_cast<std::size_t>(v)] == VertexClass::Gluing
                ? pair.alpha_inverse_shared(v)
                : v;
    }
    auto verify_on = [&](const std::vector<Vertex>& tau, auto in_domain, const char* what) {
        for (Vertex u = 0; u < n; ++u) {
            if (!in_domain(u)) continue;
            for (Vertex v = 0; v < n; ++v) {
                if (!in_domain(v)) continue;
                if (pair.y.distance(tau[static_cast<std::size_t>(u)],
                                    tau[static_cast<std::size_t>(v)]) != pair.x.distance(u, v))
                    throw std::logic_error(std::string("tau_maps: not an isometry on ") + what);
            }
        }
    };
    auto cls = [&](Vertex v) { return pair.vertex_class[static_cast<std::size_t>(v)]; };
    verify_on(t.tau_g, [&](Vertex v) { return cls(v) != VertexClass::Biased; }, "G u H_0");
    verify_on(t.tau_h, [&](Vertex v) { return cls(v) != VertexClass::GOnly; }, "H");
    return t;
}

namespace {

struct Sticky {
    int begin;
    int end;
    Direction dir;
};

// First sticky subpath (minimal start index, then minimal end index), or
// nullopt. A sticky subpath runs from G\K to H_* or back with every
// interior vertex a gluing vertex; neutral vertices break the scan.
std::optional<Sticky> first_sticky(const TwistPair& pair, const std::vector<Vertex>& p) {
    auto cls = [&](int i) { return pair.vertex_class[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]; };
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        VertexClass ci = cls(i);
        if (ci != VertexClass::GOnly && ci != VertexClass::Biased) continue;
        for (int j = i + 1; j < n; ++j) {
            VertexClass cj = cls(j);
            if (cj == VertexClass::Gluing) continue;
            bool opposite = (ci == VertexClass::GOnly && cj == VertexClass::Biased) ||
                            (ci == VertexClass::Biased && cj == VertexClass::GOnly);
            if (opposite)
                return Sticky{i, j, ci == VertexClass::GOnly ? Direction::GtoH : Direction::HtoG};
            break;  // interior must be all gluing vertices
        }
    }
    return std::nullopt;
}

int outside_count(const TwistPair& pair, const std::vector<Vertex>& p) {
    int m = 0;
    for (Vertex v : p) m += pair.outside(v) ? 1 : 0;
    return m;
}

}  // namespace

PathClass classify_path(const TwistPair& pair, Owner owner, const NondegeneratePath& p) {
    (void)owner;  // classes are shared between X and Y
    PathClass out;
    bool has_biased = false, has_gonly = false;
    for (Vertex v : p.vertices) {
        VertexClass c = pair.vertex_class[static_cast<std::size_t>(v)];
        has_biased |= c == VertexClass::Biased;
        has_gonly |= c == VertexClass::GOnly;
    }
    if (!has_biased || !has_gonly) {
        out.kind = PathClass::Kind::Flat;
        out.flat_in = has_biased ? PathClass::FlatIn::H : PathClass::FlatIn::GAndNeutral;
        return out;
    }
    if (auto s = first_sticky(pair, p.vertices)) {
        out.kind = PathClass::Kind::NotTwistable;
        out.sticky_begin = s->begin;
        out.sticky_end = s->end;
        out.direction = s->dir;
        return out;
    }
    // Maximal decomposition: cut at every interior neutral vertex.
    out.kind = PathClass::Kind::Twistable;
    const int k = p.degree();
    int start = 0;
    for (int i = 1; i <= k; ++i) {
        bool cut = i == k || pair.vertex_class[static_cast<std::size_t>(
                                 p.vertices[static_cast<std::size_t>(i)])] == VertexClass::Neutral;
        if (!cut) continue;
        out.pieces.emplace_back(start, i);
        bool piece_biased = false, piece_gonly = false;
        for (int j = start; j <= i; ++j) {
            VertexClass c =
                pair.vertex_class[static_cast<std::size_t>(p.vertices[static_cast<std::size_t>(j)])];
            piece_biased |= c == VertexClass::Biased;
            piece_gonly |= c == VertexClass::GOnly;
        }
        if (piece_biased && piece_gonly)
            throw std::logic_error("classify_path: non-flat piece in a sticky-free path");
        out.piece_kinds.push_back(piece_biased ? PathClass::FlatIn::H
                                               : PathClass::FlatIn::GAndNeutral);
        start = i;
    }
    return out;
}

NondegeneratePath twist_path(const TwistPair& pair, Owner owner, const NondegeneratePath& p) {
    PathClass c = classify_path(pair, owner, p);
    if (c.kind == PathClass::Kind::NotTwistable)
        throw std::invalid_argument("twist_path: path is not twistable");
    const Graph& target = owner == Owner::X ? pair.y : pair.x;
    // tau_h transports gluing vertices by alpha^{-1} going X -> Y and by
    // alpha going back.
    auto transport = [&](Vertex v) {
        if (pair.vertex_class[static_cast<std::size_t>(v)] != VertexClass::Gluing) return v;
        return owner == Owner::X ? pair.alpha_inverse_shared(v) : pair.alpha_shared(v);
    };
    std::vector<Vertex> img = p.vertices;
    auto twist_range = [&](int a, int b) {
        for (int i = a; i <= b; ++i)
            img[static_cast<std::size_t>(i)] =
                transport(p.vertices[static_cast<std::size_t>(i)]);
    };
    if (c.kind == PathClass::Kind::Flat) {
        if (c.flat_in == PathClass::FlatIn::H) twist_range(0, p.degree());
    } else {
        for (std::size_t i = 0; i < c.pieces.size(); ++i)
            if (c.piece_kinds[i] == PathClass::FlatIn::H)
                twist_range(c.pieces[i].first, c.pieces[i].second);
    }
    ExtDistance len = path_length(target.distances(), img);
    if (!len.is_finite() || len.value() != p.length)
        throw std::logic_error("twist_path: image does not preserve length");
    return {std::move(img), p.length};
}

namespace {

struct PathKeyLess {
    bool operator()(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
        return a < b;
    }
};

// Modified boundary of the visit-count quotient: drop x_i only when x_i
// lies in H_0 ∪ K and the length survives.
SparseIntMatrix modified_boundary(const TwistPair& pair, const Graph& gr,
                                  const std::vector<NondegeneratePath>& basis_k,
                                  const std::vector<NondegeneratePath>& basis_km1) {
    std::map<std::vector<Vertex>, int, PathKeyLess> rows;
    for (int i = 0; i < static_cast<int>(basis_km1.size()); ++i)
        rows.emplace(basis_km1[static_cast<std::size_t>(i)].vertices, i);
    SparseIntMatrix d(static_cast<int>(basis_km1.size()), static_cast<int>(basis_k.size()));
    std::vector<Vertex> face;
    for (int col = 0; col < static_cast<int>(basis_k.size()); ++col) {
        const auto& p = basis_k[static_cast<std::size_t>(col)].vertices;
        int k = static_cast<int>(p.size()) - 1;
        int sign = 1;
        for (int i = 1; i <= k - 1; ++i) {
            sign = -sign;
            if (pair.outside(p[static_cast<std::size_t>(i)])) continue;
            if (!is_between(gr.distances(), p[static_cast<std::size_t>(i) - 1],
                            p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]))
                continue;
            face.assign(p.begin(), p.end());
            face.erase(face.begin() + i);
            auto it = rows.find(face);
            if (it == rows.end()) throw std::logic_error("modified_boundary: face missing");
            d.add_entry(it->second, col, sign);
        }
    }
    return d;
}

void assert_complex(const std::vector<SparseIntMatrix>& boundaries, const char* what) {
    for (std::size_t k = 2; k < boundaries.size(); ++k) {
        if (boundaries[k].cols == 0 || boundaries[k - 1].cols == 0) continue;
        if (!sparse_is_zero(sparse_compose(boundaries[k - 1], boundaries[k])))
            throw std::logic_error(std::string(what) + ": boundary^2 != 0");
    }
}

}  // namespace

QuotientSlice q_slice(const TwistPair& pair, Owner owner, int m, int ell) {
    const Graph& gr = pair.graph(owner);
    QuotientSlice s;
    s.owner = owner;
    s.m = m;
    s.ell = ell;
    s.bases.resize(static_cast<std::size_t>(ell) + 1);
    auto all = enumerate_paths(gr, ell);
    for (int k = 0; k <= ell; ++k)
        for (auto& p : all[static_cast<std::size_t>(k)])
            if (outside_count(pair, p.vertices) == m)
                s.bases[static_cast<std::size_t>(k)].push_back(std::move(p));
    s.boundaries.resize(s.bases.size());
    for (int k = 1; k <= ell; ++k)
        s.boundaries[static_cast<std::size_t>(k)] =
            modified_boundary(pair, gr, s.bases[static_cast<std::size_t>(k)],
                              s.bases[static_cast<std::size_t>(k) - 1]);
    assert_complex(s.boundaries, "q_slice");
    return s;
}

ESubcomplex e_subcomplex(const TwistPair& pair, const QuotientSlice& q) {
    ESubcomplex e;
    e.span.owner = q.owner;
    e.span.m = q.m;
    e.span.ell = q.ell;
    e.span.bases.resize(q.bases.size());
    e.span.boundaries.resize(q.bases.size());
    e.gh_count.assign(q.bases.size(), 0);
    e.hg_count.assign(q.bases.size(), 0);
    const Graph& gr = pair.graph(q.owner);
    std::set<std::vector<Vertex>, PathKeyLess> in_span;
    for (const auto& basis : q.bases)
        for (const auto& p : basis)
            if (auto st = first_sticky(pair, p.vertices)) {
                std::size_t k = p.vertices.size() - 1;
                in_span.insert(p.vertices);
                e.span.bases[k].push_back(p);
                ++(st->dir == Direction::GtoH ? e.gh_count : e.hg_count)[k];
            }
    // Closure: every modified-boundary face of a non-twistable generator is
    // again non-twistable, so the restricted boundary is well defined.
    for (std::size_t k = 1; k < e.span.bases.size(); ++k) {
        std::map<std::vector<Vertex>, int, PathKeyLess> rows;
        for (int i = 0; i < static_cast<int>(e.span.bases[k - 1].size()); ++i)
            rows.emplace(e.span.bases[k - 1][static_cast<std::size_t>(i)].vertices, i);
        SparseIntMatrix d(static_cast<int>(e.span.bases[k - 1].size()),
                          static_cast<int>(e.span.bases[k].size()));
        std::vector<Vertex> face;
        for (int col = 0; col < static_cast<int>(e.span.bases[k].size()); ++col) {
            const auto& p = e.span.bases[k][static_cast<std::size_t>(col)].vertices;
            int deg = static_cast<int>(p.size()) - 1;
            int sign = 1;
            for (int i = 1; i <= deg - 1; ++i) {
                sign = -sign;
                if (pair.outside(p[static_cast<std::size_t>(i)])) continue;
                if (!is_between(gr.distances(), p[static_cast<std::size_t>(i) - 1],
                                p[static_cast<std::size_t>(i)],
                                p[static_cast<std::size_t>(i) + 1]))
                    continue;
                face.assign(p.begin(), p.end());
                face.erase(face.begin() + i);
                if (!in_span.count(face))
                    throw std::logic_error(
                        "e_subcomplex: face of a non-twistable generator is twistable");
                d.add_entry(rows.at(face), col, sign);
            }
        }
        e.span.boundaries[k] = std::move(d);
    }
    assert_complex(e.span.boundaries, "e_subcomplex");
    return e;
}

bool verify_e_acyclic(const QuotientSlice& e) {
    const int kmax = static_cast<int>(e.bases.size()) - 1;
    std::vector<SnfResult> snf(static_cast<std::size_t>(kmax) + 1);
    for (int k = 1; k <= kmax; ++k) {
        snf[static_cast<std::size_t>(k)] = smith_normal_form(e.boundaries[static_cast<std::size_t>(k)]);
        if (!snf[static_cast<std::size_t>(k)].nonunit_factors().empty()) return false;
    }
    for (int k = 0; k <= kmax; ++k) {
        int dim = static_cast<int>(e.bases[static_cast<std::size_t>(k)].size());
        int rk = k >= 1 ? snf[static_cast<std::size_t>(k)].rank : 0;
        int rk1 = k + 1 <= kmax ? snf[static_cast<std::size_t>(k) + 1].rank : 0;
        if (dim - rk - rk1 != 0) return false;
    }
    return true;
}

namespace {

struct Bucket {
    Direction direction;
    int m;
    int slot;
    friend bool operator==(const Bucket&, const Bucket&) = default;
};

// Verifies s∘d + d∘s = id on one generator's (direction, visit-count, slot)
// bucket, where the quotient boundary keeps only faces staying in the bucket.
bool check_contraction(const TwistPair& pair, Owner owner, const Bucket& b,
                       const std::vector<Vertex>& gen) {
    const Graph& gr = pair.graph(owner);
    const Direction direction = b.direction;
    const int i = b.slot;

    auto in_bucket = [&](const std::vector<Vertex>& p) {
        if (outside_count(pair, p) != b.m) return false;
        auto st = first_sticky(pair, p);
        if (!st || st->dir != direction) return false;
        int s = direction == Direction::HtoG ? st->begin
                                             : static_cast<int>(p.size()) - 1 - st->end;
        return s == i;
    };

    using Chain = std::map<std::vector<Vertex>, long long, PathKeyLess>;
    auto add_chain = [](Chain& acc, const Chain& inc, long long f) {
        for (const auto& [p, c] : inc) {
            acc[p] += f * c;
            if (acc[p] == 0) acc.erase(p);
        }
    };

    auto bdry = [&](const std::vector<Vertex>& p) {
        Chain out;
        int k = static_cast<int>(p.size()) - 1;
        int sign = 1;
        std::vector<Vertex> face;
        for (int j = 1; j <= k - 1; ++j) {
            sign = -sign;
            if (pair.outside(p[static_cast<std::size_t>(j)])) continue;
            if (!is_between(gr.distances(), p[static_cast<std::size_t>(j) - 1],
                            p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j) + 1]))
                continue;
            face.assign(p.begin(), p.end());
            face.erase(face.begin() + j);
            if (!in_bucket(face)) continue;
            out[face] += sign;
            if (out[face] == 0) out.erase(face);
        }
        return out;
    };
    auto homotopy = [&](const std::vector<Vertex>& p) {
        Chain out;
        int k = static_cast<int>(p.size()) - 1;
        if (direction == Direction::HtoG) {
            Vertex xi = p[static_cast<std::size_t>(i)];
            Vertex pi = pair.projection(owner, xi);
            if (p[static_cast<std::size_t>(i) + 1] == pi) return out;
            std::vector<Vertex> q(p.begin(), p.begin() + i + 1);
            q.push_back(pi);
            q.insert(q.end(), p.begin() + i + 1, p.end());
            if (!in_bucket(q)) throw std::logic_error("homotopy_check: s image leaves the bucket");
            out[q] = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1}
        } else {
            int pos = k - i;
            Vertex xi = p[static_cast<std::size_t>(pos)];
            Vertex pi = pair.projection(owner, xi);
            if (p[static_cast<std::size_t>(pos) - 1] == pi) return out;
            std::vector<Vertex> q(p.begin(), p.begin() + pos);
            q.push_back(pi);
            q.insert(q.end(), p.begin() + pos, p.end());
            if (!in_bucket(q)) throw std::logic_error("homotopy_check: s image leaves the bucket");
            out[q] = (pos % 2 == 0) ? 1 : -1;  // (-1)^{k-i}
        }
        return out;
    };

    Chain acc;
    for (const auto& [q, c] : bdry(gen)) add_chain(acc, homotopy(q), c);
    for (const auto& [q, c] : homotopy(gen)) add_chain(acc, bdry(q), c);
    acc[gen] -= 1;
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return acc.empty();
}

std::optional<Bucket> bucket_of(const TwistPair& pair, const std::vector<Vertex>& p) {
    auto st = first_sticky(pair, p);
    if (!st) return std::nullopt;
    int slot = st->dir == Direction::HtoG ? st->begin
                                          : static_cast<int>(p.size()) - 1 - st->end;
    return Bucket{st->dir, outside_count(pair, p), slot};
}

}  // namespace

bool homotopy_check(const TwistPair& pair, Owner owner, Direction direction, int m, int ell,
                    int i) {
    const Graph& gr = pair.graph(owner);
    Bucket want{direction, m, i};
    for (const auto& basis : enumerate_paths(gr, ell))
        for (const auto& gen : basis) {
            auto b = bucket_of(pair, gen.vertices);
            if (b && *b == want && !check_contraction(pair, owner, want, gen.vertices))
                return false;
        }
    return true;
}

bool homotopy_check_all(const TwistPair& pair, Owner owner, int ell) {
    const Graph& gr = pair.graph(owner);
    for (const auto& basis : enumerate_paths(gr, ell))
        for (const auto& gen : basis) {
            auto b = bucket_of(pair, gen.vertices);
            if (b && !check_contraction(pair, owner, *b, gen.vertices)) return false;
        }
    return true;
}

SycamoreReport verify_sycamore_magnitude(const TwistSpec& spec, int n, int evidence_order) {
    SycamoreReport rep(n);
    TwistPair pair = build_twist_pair(spec);
    rep.validation = validate_sycamore(pair);
    rep.graphs_isometric = are_isometric(pair.x, pair.y);

    rep.mag_x_inversion = magnitude_by_inversion(pair.x, n);
    rep.mag_y_inversion = magnitude_by_inversion(pair.y, n);
    rep.mag_x_count = magnitude_by_path_count(pair.x, n);
    rep.mag_y_count = magnitude_by_path_count(pair.y, n);
    rep.mag_x_euler = magnitude_by_euler_characteristic(pair.x, n);
    rep.mag_y_euler = magnitude_by_euler_characteristic(pair.y, n);
    if (rep.mag_x_inversion != rep.mag_x_count || rep.mag_x_count != rep.mag_x_euler ||
        rep.mag_y_inversion != rep.mag_y_count || rep.mag_y_count != rep.mag_y_euler)
        throw std::logic_error("verify_sycamore_magnitude: magnitude routes disagree");
    rep.magnitudes_equal = rep.mag_x_inversion == rep.mag_y_inversion;

    if (rep.validation.valid()) {
        rep.evidence_consistent = true;
        int emax = std::min(evidence_order, n);
        for (int ell = 0; ell <= emax; ++ell)
            for (int m = 0; m <= ell; ++m) {
                QuotientSlice qx = q_slice(pair, Owner::X, m, ell);
                QuotientSlice qy = q_slice(pair, Owner::Y, m, ell);
                SycamoreReport::Row row;
                row.m = m;
                row.ell = ell;
                auto chi = [](const QuotientSlice& q) {
                    Int c = 0;
                    int sign = 1;
                    for (const auto& basis : q.bases) {
                        c += sign * static_cast<int>(basis.size());
                        sign = -sign;
                    }
                    return c;
                };
                row.chi_x = chi(qx);
                row.chi_y = chi(qy);
                auto tally = [&](const QuotientSlice& q, Owner o) {
                    std::size_t t = 0;
                    for (const auto& basis : q.bases)
                        for (const auto& p : basis)
                            t += classify_path(pair, o, p).kind != PathClass::Kind::NotTwistable;
                    return t;
                };
                row.twistable_x = tally(qx, Owner::X);
                row.twistable_y = tally(qy, Owner::Y);
                ESubcomplex ex = e_subcomplex(pair, qx);
                ESubcomplex ey = e_subcomplex(pair, qy);
                row.e_acyclic_x = verify_e_acyclic(ex.span);
                row.e_acyclic_y = verify_e_acyclic(ey.span);
                rep.evidence_consistent &= row.chi_x == row.chi_y && row.e_acyclic_x &&
                                           row.e_acyclic_y &&
                                           row.twistable_x == row.twistable_y;
                rep.table.push_back(std::move(row));
            }
    }
    return rep;
}

}  // namespace mag
