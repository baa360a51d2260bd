#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magnitude/chains.hpp"
#include "magnitude/graph.hpp"
#include "magnitude/homology.hpp"
#include "magnitude/series.hpp"

namespace mag {

/// Gluing data (G, H, K, alpha): K embeds into G and H as an induced
/// subgraph, and alpha is a self-isometry of K.
struct TwistSpec {
    Graph g;
    Graph h;
    Graph k;
    std::vector<Vertex> iota_g;  // K vertex -> G vertex
    std::vector<Vertex> iota_h;  // K vertex -> H vertex
    std::vector<Vertex> alpha;   // K vertex -> K vertex
};

enum class VertexClass { GOnly, Gluing, Biased, Neutral };
enum class Owner { X, Y };
enum class Direction { GtoH, HtoG };

/// The two glued graphs. X identifies iota_g(v) with iota_h(v); Y
/// identifies iota_g(v) with iota_h(alpha(v)). Both share one vertex
/// index space (K vertices keep K's labels; others get "G:"/"H:"
/// prefixes), so paths can be compared across the pair directly.
struct TwistPair {
    TwistSpec spec;
    Graph x;
    Graph y;
    std::vector<Vertex> g_to_shared;  // G vertex -> shared vertex (same in X and Y)
    std::vector<Vertex> h_to_shared;  // H vertex -> shared vertex
    std::vector<Vertex> k_to_shared;  // K vertex -> shared vertex
    std::vector<VertexClass> vertex_class;  // per shared vertex

    const Graph& graph(Owner o) const { return o == Owner::X ? x : y; }
    bool outside(Vertex v) const {  // outside H_0 ∪ K
        VertexClass c = vertex_class[static_cast<std::size_t>(v)];
        return c == VertexClass::GOnly || c == VertexClass::Biased;
    }

    /// Projection of a biased vertex onto K, computed in the owner graph;
    /// throws if the vertex is not biased or no witness exists.
    Vertex projection(Owner o, Vertex biased) const;

    /// alpha acting on a shared gluing vertex.
    Vertex alpha_shared(Vertex gluing) const;
    Vertex alpha_inverse_shared(Vertex gluing) const;
};

/// Validates the spec invariants (induced embeddings, alpha an isometry)
/// and glues. Does NOT require the sycamore conditions.
TwistPair build_twist_pair(const TwistSpec& spec);

/// Sycamore verdict: K nonempty and convex in both glued graphs, and
/// every non-projecting vertex of H is alpha-equidistant from K.
struct SycamoreValidation {
    bool k_nonempty = false;
    bool k_convex_x = false;
    bool k_convex_y = false;
    std::vector<Vertex> biased;   // shared vertices (H_*)
    std::vector<Vertex> neutral;  // shared vertices (H_0)
    struct Violation {
        Vertex h;  // shared vertex that neither projects nor is equidistant
        Vertex k;  // witnessing gluing vertex (shared)
    };
    std::vector<Violation> violations;

    bool valid() const {
        return k_nonempty && k_convex_x && k_convex_y && violations.empty();
    }
};

/// Checks both sycamore conditions and reports every violator. On a valid
/// pair it additionally hard-checks the glued distance formulas
/// d(u,v) = min_k (d_G(u,k) + d_H(k,v)) (alpha-shifted for Y).
SycamoreValidation validate_sycamore(const TwistPair& pair);

/// The vertex bijections X -> Y: tau_g is the identity; tau_h applies
/// alpha^{-1} on gluing vertices. Verifies exhaustively that tau_g is an
/// isometry on G ∪ H_0 and tau_h on H; throws std::logic_error otherwise.
struct TauMaps {
    std::vector<Vertex> tau_g;
    std::vector<Vertex> tau_h;
};
TauMaps tau_maps(const TwistPair& pair);

/// Path taxonomy. Flat: contained in G ∪ H_0 or in H. Twistable: cuts at
/// every interior neutral vertex yield flat pieces. NotTwistable: carries
/// the first sticky subpath (minimal start index, then minimal end index)
/// and its crossing direction.
struct PathClass {
    enum class Kind { Flat, Twistable, NotTwistable };
    enum class FlatIn { GAndNeutral, H };

    Kind kind = Kind::Flat;
    FlatIn flat_in = FlatIn::GAndNeutral;           // Flat only
    std::vector<std::pair<int, int>> pieces;        // Twistable: index ranges
    std::vector<FlatIn> piece_kinds;                // Twistable, per piece
    int sticky_begin = -1;                          // NotTwistable
    int sticky_end = -1;
    Direction direction = Direction::GtoH;
};

PathClass classify_path(const TwistPair& pair, Owner owner, const NondegeneratePath& p);

/// The bijection T: applies tau_g to flat pieces without biased vertices
/// and tau_h to the rest. Accepts flat and twistable paths; throws on
/// non-twistable input. The inverse direction (Y -> X) is twist_path with
/// owner = Y.
NondegeneratePath twist_path(const TwistPair& pair, Owner owner, const NondegeneratePath& p);

/// One graded piece of the visit-count filtration: paths of length `ell`
/// visiting exactly m vertices outside H_0 ∪ K, with the modified boundary
/// (delta_i = 0 if x_i is outside H_0 ∪ K or dropping it shortens the path).
struct QuotientSlice {
    Owner owner = Owner::X;
    int m = 0;
    int ell = 0;
    std::vector<std::vector<NondegeneratePath>> bases;  // index k
    std::vector<SparseIntMatrix> boundaries;            // index k
};

/// Builds the slice and asserts boundary^2 = 0.
QuotientSlice q_slice(const TwistPair& pair, Owner owner, int m, int ell);

/// The non-twistable span of a quotient slice. It is closed under the
/// modified boundary (verified generator-by-generator, hard error
/// otherwise), so `span` carries the genuine restricted boundary. The
/// per-degree counts record how the generators split by first-sticky
/// direction; the split is a basis partition only — boundary faces can
/// land in either direction, so the direction spans are not themselves
/// complexes.
struct ESubcomplex {
    QuotientSlice span;
    std::vector<std::size_t> gh_count;  // per degree k: first sticky crosses G\K -> H_*
    std::vector<std::size_t> hg_count;  // per degree k: first sticky crosses H_* -> G\K
};

/// Restricts the slice to its non-twistable generators and asserts the
/// restricted boundary squares to zero.
ESubcomplex e_subcomplex(const TwistPair& pair, const QuotientSlice& q);

/// True iff the complex has zero homology (all ranks and torsion vanish),
/// decided by Smith normal form.
bool verify_e_acyclic(const QuotientSlice& e);

/// Verifies s∘d + d∘s = id on one (direction, slot) bucket of non-twistable
/// generators, where d keeps only boundary faces staying in the bucket:
/// for HtoG generators, the slot is the first-sticky start index i and s
/// inserts pi(x_i) after x_i with sign (-1)^{i+1}; for GtoH generators, the
/// slot is k minus the last index of the first sticky and s inserts
/// pi(x_{k-i}) before x_{k-i} with sign (-1)^{k-i}.
bool homotopy_check(const TwistPair& pair, Owner owner, Direction direction, int m, int ell, int i);

/// Same identity, verified for every (direction, visit count, slot) bucket
/// at one length grading; enumerates the paths only once.
bool homotopy_check_all(const TwistPair& pair, Owner owner, int ell);

/// Full proof-step report for one twist.
struct SycamoreReport {
    SycamoreValidation validation;
    bool graphs_isometric = false;

    TruncatedSeries mag_x_inversion, mag_y_inversion;
    TruncatedSeries mag_x_count, mag_y_count;
    TruncatedSeries mag_x_euler, mag_y_euler;
    bool magnitudes_equal = false;

    struct Row {
        int m = 0;
        int ell = 0;
        Int chi_x, chi_y;
        bool e_acyclic_x = false, e_acyclic_y = false;
        std::size_t twistable_x = 0, twistable_y = 0;
    };
    std::vector<Row> table;  // sorted by (ell, m), ell <= evidence order
    bool evidence_consistent = false;

    SycamoreReport(int order)
        : mag_x_inversion(order), mag_y_inversion(order), mag_x_count(order),
          mag_y_count(order), mag_x_euler(order), mag_y_euler(order) {}
};

/// Builds and validates the pair, computes Mag(X) and Mag(Y) to order
/// `n` by three independent routes, and gathers per-(m, ell) evidence
/// (chi equality, E-acyclicity, twistable tallies) up to length
/// `evidence_order` (clamped to n). Runs even when validation fails,
/// marking the report accordingly.
SycamoreReport verify_sycamore_magnitude(const TwistSpec& spec, int n, int evidence_order);

}  // namespace mag
