#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnitude/graph.hpp"
#include "magnitude/homology.hpp"
#include "magnitude/series.hpp"
#include "magnitude/twist.hpp"

namespace mag {

/// Graph JSON: {"vertices": ["a","b"], "edges": [["a","b"]]}. Vertex order
/// defines the basis order everywhere downstream. Throws
/// std::invalid_argument with a field diagnostic on malformed input.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Twist JSON: {"G": <graph>, "H": <graph>, "K": ["k0",...],
/// "iota_G": {"k0": "gk0", ...}, "iota_H": {...}, "alpha": {...}}.
/// K's edges are those induced by iota_G in G (iota_H must induce the same
/// subgraph; build_twist_pair verifies).
TwistSpec twist_spec_from_json(const nlohmann::json& j);
nlohmann::json twist_spec_to_json(const TwistSpec& spec);

/// Series as a JSON integer array [c0, c1, ...]. Coefficients outside the
/// 64-bit range are serialized as decimal strings.
nlohmann::json series_to_json(const TruncatedSeries& s);

/// Homology table rows (ell, k, rank, torsion) for ell = 0..order.
struct HomologyTable {
    struct Row {
        int ell;
        int k;
        int rank;
        std::vector<Int> torsion;
    };
    std::vector<Row> rows;
};
HomologyTable homology_table(const Graph& g, int order);
/// TSV columns: ell, k, rank, torsion (comma-joined, empty when free).
void write_homology_tsv(std::ostream& out, const HomologyTable& t);
nlohmann::json homology_table_to_json(const HomologyTable& t);

/// Magnitude-function samples as CSV "t,magnitude"; singular samples emit
/// the literal `singular` in the second column.
void write_plot_csv(std::ostream& out, const std::vector<double>& t_values,
                    const std::vector<std::optional<double>>& samples);

nlohmann::json sycamore_report_to_json(const SycamoreReport& rep);

/// Reads a whole file, throwing std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mag
