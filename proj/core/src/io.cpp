#include "magnitude/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mag {

using nlohmann::json;

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph: expected object with \"vertices\" and \"edges\"");
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw std::invalid_argument("graph: vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto index_of = [&](const std::string& l) -> Vertex {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return static_cast<Vertex>(i);
        throw std::invalid_argument("graph: edge endpoint \"" + l + "\" is not a vertex");
    };
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("graph: each edge must be a pair of vertex labels");
        edges.emplace_back(index_of(e[0].get<std::string>()), index_of(e[1].get<std::string>()));
    }
    return Graph(std::move(labels), std::move(edges));
}

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.labels();
    j["edges"] = json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({g.label(a), g.label(b)});
    return j;
}

TwistSpec twist_spec_from_json(const json& j) {
    for (const char* key : {"G", "H", "K", "iota_G", "iota_H", "alpha"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("twist: missing field \"") + key + '"');
    TwistSpec spec{graph_from_json(j.at("G")), graph_from_json(j.at("H")), Graph({}, {}), {}, {}, {}};

    std::vector<std::string> k_labels;
    for (const auto& v : j.at("K")) {
        if (!v.is_string()) throw std::invalid_argument("twist: K must list vertex labels");
        k_labels.push_back(v.get<std::string>());
    }
    auto mapped = [&](const char* field, const std::string& key) {
        const auto& m = j.at(field);
        if (!m.contains(key))
            throw std::invalid_argument(std::string("twist: ") + field + " is missing \"" + key + '"');
        return m.at(key).get<std::string>();
    };
    std::vector<Vertex> iota_g, iota_h, alpha;
    for (const auto& kl : k_labels) {
        auto gv = spec.g.find(mapped("iota_G", kl));
        auto hv = spec.h.find(mapped("iota_H", kl));
        if (!gv) throw std::invalid_argument("twist: iota_G target for \"" + kl + "\" not in G");
        if (!hv) throw std::invalid_argument("twist: iota_H target for \"" + kl + "\" not in H");
        iota_g.push_back(*gv);
        iota_h.push_back(*hv);
        std::string al = mapped("alpha", kl);
        auto it = std::find(k_labels.begin(), k_labels.end(), al);
        if (it == k_labels.end())
            throw std::invalid_argument("twist: alpha image \"" + al + "\" not in K");
        alpha.push_back(static_cast<Vertex>(it - k_labels.begin()));
    }
    // K's edges are induced from G through iota_G.
    std::vector<std::pair<Vertex, Vertex>> k_edges;
    for (std::size_t a = 0; a < k_labels.size(); ++a)
        for (std::size_t b = a + 1; b < k_labels.size(); ++b)
            if (spec.g.adjacent(iota_g[a], iota_g[b]))
                k_edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    spec.k = Graph(std::move(k_labels), std::move(k_edges));
    spec.iota_g = std::move(iota_g);
    spec.iota_h = std::move(iota_h);
    spec.alpha = std::move(alpha);
    return spec;
}

json twist_spec_to_json(const TwistSpec& spec) {
    json j;
    j["G"] = graph_to_json(spec.g);
    j["H"] = graph_to_json(spec.h);
    j["K"] = spec.k.labels();
    json ig = json::object(), ih = json::object(), al = json::object();
    for (Vertex kv = 0; kv < spec.k.vertex_count(); ++kv) {
        const std::string& l = spec.k.label(kv);
        ig[l] = spec.g.label(spec.iota_g[static_cast<std::size_t>(kv)]);
        ih[l] = spec.h.label(spec.iota_h[static_cast<std::size_t>(kv)]);
        al[l] = spec.k.label(spec.alpha[static_cast<std::size_t>(kv)]);
    }
    j["iota_G"] = std::move(ig);
    j["iota_H"] = std::move(ih);
    j["alpha"] = std::move(al);
    return j;
}

namespace {

json int_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return static_cast<std::int64_t>(c);
    return c.str();
}

}  // namespace

json series_to_json(const TruncatedSeries& s) {
    json arr = json::array();
    for (const Int& c : s.coeffs()) arr.push_back(int_to_json(c));
    return arr;
}

HomologyTable homology_table(const Graph& g, int order) {
    HomologyTable t;
    for (int ell = 0; ell <= order; ++ell) {
        HomologySlice h = homology_slice(chain_slice(g, ell));
        for (int k = 0; k < static_cast<int>(h.ranks.size()); ++k)
            t.rows.push_back({ell, k, h.ranks[static_cast<std::size_t>(k)],
                              h.torsions[static_cast<std::size_t>(k)]});
    }
    return t;
}

void write_homology_tsv(std::ostream& out, const HomologyTable& t) {
    out << "ell\tk\trank\ttorsion\n";
    for (const auto& r : t.rows) {
        out << r.ell << '\t' << r.k << '\t' << r.rank << '\t';
        for (std::size_t i = 0; i < r.torsion.size(); ++i)
            out << (i ? "," : "") << r.torsion[i];
        out << '\n';
    }
}

json homology_table_to_json(const HomologyTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json torsion = json::array();
        for (const Int& d : r.torsion) torsion.push_back(int_to_json(d));
        rows.push_back({{"ell", r.ell}, {"k", r.k}, {"rank", r.rank}, {"torsion", torsion}});
    }
    return rows;
}

void write_plot_csv(std::ostream& out, const std::vector<double>& t_values,
                    const std::vector<std::optional<double>>& samples) {
    out << "t,magnitude\n";
    out.precision(15);
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        out << t_values[i] << ',';
        if (samples[i])
            out << *samples[i];
        else
            out << "singular";
        out << '\n';
    }
}

json sycamore_report_to_json(const SycamoreReport& rep) {
    json j;
    const auto& v = rep.validation;
    j["valid_sycamore"] = v.valid();
    j["validation"] = {{"k_nonempty", v.k_nonempty},
                       {"k_convex_x", v.k_convex_x},
                       {"k_convex_y", v.k_convex_y}};
    json viol = json::array();
    for (const auto& w : v.violations) viol.push_back({{"h", w.h}, {"k", w.k}});
    j["validation"]["violations"] = std::move(viol);
    j["classes"] = {{"biased", v.biased}, {"neutral", v.neutral}};
    j["graphs_isometric"] = rep.graphs_isometric;
    j["magnitude"] = {{"X",
                       {{"inversion", series_to_json(rep.mag_x_inversion)},
                        {"path_count", series_to_json(rep.mag_x_count)},
                        {"euler", series_to_json(rep.mag_x_euler)}}},
                      {"Y",
                       {{"inversion", series_to_json(rep.mag_y_inversion)},
                        {"path_count", series_to_json(rep.mag_y_count)},
                        {"euler", series_to_json(rep.mag_y_euler)}}}};
    j["magnitudes_equal"] = rep.magnitudes_equal;
    json table = json::array();
    for (const auto& r : rep.table)
        table.push_back({{"m", r.m},
                         {"ell", r.ell},
                         {"chi_x", int_to_json(r.chi_x)},
                         {"chi_y", int_to_json(r.chi_y)},
                         {"e_acyclic_x", r.e_acyclic_x},
                         {"e_acyclic_y", r.e_acyclic_y},
                         {"twistable_x", r.twistable_x},
                         {"twistable_y", r.twistable_y}});
    j["euler_table"] = std::move(table);
    j["evidence_consistent"] = rep.evidence_consistent;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace mag
