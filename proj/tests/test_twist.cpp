#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include <magnitude/io.hpp>
#include <magnitude/twist.hpp>

using namespace mag;

namespace {

TwistSpec load_fixture(const std::string& name) {
    return twist_spec_from_json(
        nlohmann::json::parse(read_file(std::string(MAG_DATA_DIR) + "/" + name)));
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

NondegeneratePath path_by_labels(const Graph& g, const std::vector<std::string>& labels) {
    std::vector<Vertex> vs;
    for (const auto& l : labels) {
        auto v = g.find(l);
        REQUIRE(v.has_value());
        vs.push_back(*v);
    }
    ExtDistance len = path_length(g.distances(), vs);
    REQUIRE(len.is_finite());
    return {vs, len.value()};
}

}  // namespace

TEST_CASE("two-triangles fixture: gluing, classes, validation, non-isometry") {
    TwistPair pair = build_twist_pair(load_fixture("twist_pair_small.json"));
    CHECK(pair.x.vertex_count() == 10);
    CHECK(pair.y.vertex_count() == 10);

    SycamoreValidation v = validate_sycamore(pair);
    CHECK(v.valid());
    CHECK(labels_of(pair.x, v.biased) == std::vector<std::string>{"H:h0", "H:h3"});
    CHECK(labels_of(pair.x, v.neutral) == std::vector<std::string>{"H:h1", "H:h2"});

    CHECK_FALSE(are_isometric(pair.x, pair.y));
    CHECK_NOTHROW(tau_maps(pair));  // verifies the isometry claims internally
}

TEST_CASE("winged fixture: classes and validation") {
    TwistPair pair = build_twist_pair(load_fixture("twist_pair_winged.json"));
    SycamoreValidation v = validate_sycamore(pair);
    CHECK(v.valid());
    CHECK(labels_of(pair.x, v.biased) == std::vector<std::string>{"H:v11", "H:v8"});
    CHECK(labels_of(pair.x, v.neutral) == std::vector<std::string>{"H:v10", "H:v9"});
    CHECK_FALSE(are_isometric(pair.x, pair.y));
}

TEST_CASE("path classification: sticky, flat, and twistable examples") {
    TwistPair pair = build_twist_pair(load_fixture("twist_pair_small.json"));

    // Crosses G\K -> H_* through gluing vertices only: sticky, not twistable.
    NondegeneratePath crossing =
        path_by_labels(pair.x, {"G:g3", "G:g0", "k0", "H:h3", "k1"});
    PathClass c = classify_path(pair, Owner::X, crossing);
    REQUIRE(c.kind == PathClass::Kind::NotTwistable);
    CHECK(c.sticky_begin == 1);
    CHECK(c.sticky_end == 3);
    CHECK(c.direction == Direction::GtoH);

    // Entirely inside G and the gluing: flat.
    NondegeneratePath in_g = path_by_labels(pair.x, {"G:g3", "G:g0", "k0", "k1"});
    CHECK(classify_path(pair, Owner::X, in_g).kind == PathClass::Kind::Flat);
    CHECK(classify_path(pair, Owner::X, in_g).flat_in == PathClass::FlatIn::GAndNeutral);

    // Entirely inside H: flat the other way.
    NondegeneratePath in_h = path_by_labels(pair.x, {"H:h0", "k0", "H:h3"});
    CHECK(classify_path(pair, Owner::X, in_h).kind == PathClass::Kind::Flat);
    CHECK(classify_path(pair, Owner::X, in_h).flat_in == PathClass::FlatIn::H);

    // G-side and biased H-side joined at a neutral vertex: twistable.
    NondegeneratePath joined =
        path_by_labels(pair.x, {"G:g0", "k0", "H:h1", "H:h0", "k0"});
    PathClass jc = classify_path(pair, Owner::X, joined);
    REQUIRE(jc.kind == PathClass::Kind::Twistable);
    REQUIRE(jc.pieces.size() == 2);
    CHECK(jc.piece_kinds[0] == PathClass::FlatIn::GAndNeutral);
    CHECK(jc.piece_kinds[1] == PathClass::FlatIn::H);
}

TEST_CASE("twist bijection preserves degree, length, and outside count (ell <= 5)") {
    for (const char* name : {"twist_pair_small.json", "twist_pair_winged.json"}) {
        TwistPair pair = build_twist_pair(load_fixture(name));
        for (int ell = 0; ell <= 5; ++ell) {
            auto px = enumerate_paths(pair.x, ell);
            auto py = enumerate_paths(pair.y, ell);
            auto outside_count = [&](const std::vector<Vertex>& p) {
                int m = 0;
                for (Vertex v : p) m += pair.outside(v);
                return m;
            };
            std::set<std::vector<Vertex>> twistable_y;
            for (const auto& basis : py)
                for (const auto& p : basis)
                    if (classify_path(pair, Owner::Y, p).kind != PathClass::Kind::NotTwistable)
                        twistable_y.insert(p.vertices);
            std::set<std::vector<Vertex>> image;
            for (const auto& basis : px)
                for (const auto& p : basis) {
                    if (classify_path(pair, Owner::X, p).kind == PathClass::Kind::NotTwistable)
                        continue;
                    NondegeneratePath t = twist_path(pair, Owner::X, p);
                    CHECK(t.degree() == p.degree());
                    CHECK(t.length == p.length);
                    CHECK(outside_count(t.vertices) == outside_count(p.vertices));
                    CHECK(twistable_y.count(t.vertices) == 1);
                    CHECK(image.insert(t.vertices).second);  // injective
                    // Round trip.
                    NondegeneratePath back = twist_path(pair, Owner::Y, t);
                    CHECK(back.vertices == p.vertices);
                }
            CHECK(image == twistable_y);  // surjective
        }
    }
}

TEST_CASE("twist_path rejects non-twistable input") {
    TwistPair pair = build_twist_pair(load_fixture("twist_pair_small.json"));
    NondegeneratePath crossing =
        path_by_labels(pair.x, {"G:g3", "G:g0", "k0", "H:h3", "k1"});
    CHECK_THROWS(twist_path(pair, Owner::X, crossing));
}

TEST_CASE("quotient slices: chi equality and non-twistable span acyclicity (ell <= 4)") {
    TwistPair pair = build_twist_pair(load_fixture("twist_pair_small.json"));
    for (int ell = 0; ell <= 4; ++ell)
        for (int m = 0; m <= ell; ++m) {
            QuotientSlice qx = q_slice(pair, Owner::X, m, ell);
            QuotientSlice qy = q_slice(pair, Owner::Y, m, ell);
            auto chi = [](const QuotientSlice& q) {
                Int c = 0;
                int sign = 1;
                for (const auto& basis : q.bases) {
                    c += sign * static_cast<int>(basis.size());
                    sign = -sign;
                }
                return c;
            };
            CHECK(chi(qx) == chi(qy));
            ESubcomplex ex = e_subcomplex(pair, qx);
            ESubcomplex ey = e_subcomplex(pair, qy);
            CHECK(verify_e_acyclic(ex.span));
            CHECK(verify_e_acyclic(ey.span));
            // The direction counts partition the span's basis.
            for (std::size_t k = 0; k < ex.span.bases.size(); ++k)
                CHECK(ex.gh_count[k] + ex.hg_count[k] == ex.span.bases[k].size());
        }
}

TEST_CASE("contraction identity on (direction, slot) buckets (ell <= 4)") {
    TwistPair pair = build_twist_pair(load_fixture("twist_pair_small.json"));
    for (int ell = 0; ell <= 4; ++ell)
        for (int m = 0; m <= ell; ++m)
            for (int i = 0; i <= ell; ++i)
                for (Direction d : {Direction::GtoH, Direction::HtoG})
                    for (Owner o : {Owner::X, Owner::Y})
                        CHECK(homotopy_check(pair, o, d, m, ell, i));
}

TEST_CASE("full verifier on the two-triangles fixture") {
    SycamoreReport rep = verify_sycamore_magnitude(load_fixture("twist_pair_small.json"), 6, 4);
    CHECK(rep.validation.valid());
    CHECK_FALSE(rep.graphs_isometric);
    CHECK(rep.magnitudes_equal);
    CHECK(rep.evidence_consistent);
    CHECK(rep.mag_x_inversion.coeff(0) == 10);
    CHECK(rep.mag_x_inversion == rep.mag_x_count);
    CHECK(rep.mag_x_count == rep.mag_x_euler);
}

TEST_CASE("negative control: non-adjacent Whitney twist changes magnitude") {
    TwistSpec spec = load_fixture("whitney_nonadjacent_witness.json");
    TwistPair pair = build_twist_pair(spec);
    CHECK_FALSE(validate_sycamore(pair).valid());
    CHECK(magnitude_by_inversion(pair.x, 8) != magnitude_by_inversion(pair.y, 8));
}

TEST_CASE("build_twist_pair rejects a non-isometry alpha") {
    TwistSpec spec = load_fixture("twist_pair_small.json");
    // K = two adjacent vertices; sending both to k0 is not a bijection.
    spec.alpha = {0, 0};
    CHECK_THROWS_AS(build_twist_pair(spec), std::invalid_argument);
}
