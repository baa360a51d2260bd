// Command-line front end: magnitude series, magnitude homology tables,
// twist construction and verification, randomized fuzzing, and
// magnitude-function plotting.
//
// Exit codes: 0 success, 1 internal verification failure, 2 invalid input.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <magnitude/chains.hpp>
#include <magnitude/graph.hpp>
#include <magnitude/homology.hpp>
#include <magnitude/io.hpp>
#include <magnitude/random_gen.hpp>
#include <magnitude/series.hpp>
#include <magnitude/twist.hpp>

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        mag::write_file(out_path, content);
}

mag::Graph load_graph(const std::string& path) {
    return mag::graph_from_json(json::parse(mag::read_file(path)));
}

mag::TwistSpec load_twist(const std::string& path) {
    return mag::twist_spec_from_json(json::parse(mag::read_file(path)));
}

int cmd_magnitude(const std::string& path, int order, const std::string& out_path) {
    mag::Graph g = load_graph(path);
    mag::TruncatedSeries inv = mag::magnitude_by_inversion(g, order);
    mag::TruncatedSeries cnt = mag::magnitude_by_path_count(g, order);
    mag::TruncatedSeries eul = mag::magnitude_by_euler_characteristic(g, order);
    bool agree = inv == cnt && cnt == eul;
    json j = {{"inversion", mag::series_to_json(inv)},
              {"path_count", mag::series_to_json(cnt)},
              {"euler", mag::series_to_json(eul)},
              {"agree", agree}};
    emit(out_path, j.dump(2) + "\n");
    if (!agree) {
        std::cerr << "error: magnitude routes disagree (internal bug)\n";
        return kExitVerifyFailed;
    }
    return 0;
}

int cmd_homology(const std::string& path, int order, bool as_json, const std::string& out_path) {
    mag::Graph g = load_graph(path);
    mag::HomologyTable t = mag::homology_table(g, order);
    std::ostringstream ss;
    if (as_json)
        ss << mag::homology_table_to_json(t).dump(2) << "\n";
    else
        mag::write_homology_tsv(ss, t);
    emit(out_path, ss.str());
    return 0;
}

int cmd_twist_build(const std::string& path, const std::string& out_path) {
    mag::TwistSpec spec = load_twist(path);
    mag::TwistPair pair = mag::build_twist_pair(spec);
    mag::SycamoreValidation v = mag::validate_sycamore(pair);
    auto class_name = [](mag::VertexClass c) {
        switch (c) {
            case mag::VertexClass::GOnly: return "g_only";
            case mag::VertexClass::Gluing: return "gluing";
            case mag::VertexClass::Biased: return "biased";
            default: return "neutral";
        }
    };
    json classes = json::object();
    for (mag::Vertex s = 0; s < pair.x.vertex_count(); ++s)
        classes[pair.x.label(s)] = class_name(pair.vertex_class[static_cast<std::size_t>(s)]);
    json j = {{"X", mag::graph_to_json(pair.x)},
              {"Y", mag::graph_to_json(pair.y)},
              {"classes", std::move(classes)},
              {"valid_sycamore", v.valid()},
              {"validation",
               {{"k_nonempty", v.k_nonempty},
                {"k_convex_x", v.k_convex_x},
                {"k_convex_y", v.k_convex_y},
                {"violations", [&] {
                     json a = json::array();
                     for (const auto& w : v.violations)
                         a.push_back({{"h", pair.x.label(w.h)}, {"k", pair.x.label(w.k)}});
                     return a;
                 }()}}}};
    emit(out_path, j.dump(2) + "\n");
    return v.valid() ? 0 : kExitBadInput;
}

int cmd_twist_verify(const std::string& path, int order, int evidence, bool emit_homology,
                     const std::string& out_path) {
    mag::TwistSpec spec = load_twist(path);
    mag::SycamoreReport rep = mag::verify_sycamore_magnitude(spec, order, evidence);
    json j = mag::sycamore_report_to_json(rep);
    if (emit_homology) {
        mag::TwistPair pair = mag::build_twist_pair(spec);
        j["homology"] = {{"X", mag::homology_table_to_json(mag::homology_table(pair.x, order))},
                         {"Y", mag::homology_table_to_json(mag::homology_table(pair.y, order))}};
    }
    emit(out_path, j.dump(2) + "\n");
    if (!rep.validation.valid()) {
        std::cerr << "error: spec is not a sycamore twist\n";
        return kExitBadInput;
    }
    if (!rep.magnitudes_equal || !rep.evidence_consistent) {
        std::cerr << "error: verification failed on a valid sycamore twist\n";
        return kExitVerifyFailed;
    }
    return 0;
}

int cmd_plot(const std::string& path, double t_min, double t_max, int steps,
             const std::string& out_path) {
    if (!(t_min > 0) || steps < 2 || !(t_max >= t_min)) {
        std::cerr << "error: need t-min > 0, t-max >= t-min, steps >= 2\n";
        return kExitBadInput;
    }
    mag::Graph g = load_graph(path);
    std::vector<double> ts(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        ts[static_cast<std::size_t>(i)] = t_min + (t_max - t_min) * i / (steps - 1);
    auto samples = mag::magnitude_function_samples(g, ts);
    std::ostringstream ss;
    mag::write_plot_csv(ss, ts, samples);
    emit(out_path, ss.str());
    return 0;
}

struct FuzzOptions {
    std::string mode;
    std::uint64_t seed = 0;
    int trials = 100;
    int max_vertices = 6;
    int order = 6;
    std::string out_path;  // witness / reproducer dump
};

struct TrialResult {
    bool generated = false;  // sycamore mode: rejection sampling succeeded
    bool failed = false;     // an asserted property was violated
    bool witness = false;    // whitney mode: magnitudes differ
    std::string note;
    json reproducer;
};

template <typename Fn>
std::vector<TrialResult> run_trials(int trials, Fn&& trial_fn) {
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1))
                results[static_cast<std::size_t>(i)] = trial_fn(i);
        });
    for (auto& th : pool) th.join();
    return results;
}

TrialResult fuzz_random_graph(const FuzzOptions& opt, int trial) {
    mag::Rng rng = mag::Rng::for_trial(opt.seed, static_cast<std::uint64_t>(trial));
    mag::Graph g = mag::random_graph(rng, opt.max_vertices);
    TrialResult r;
    mag::TruncatedSeries inv = mag::magnitude_by_inversion(g, opt.order);
    mag::TruncatedSeries cnt = mag::magnitude_by_path_count(g, opt.order);
    mag::TruncatedSeries eul = mag::magnitude_by_euler_characteristic(g, opt.order);
    if (inv != cnt || cnt != eul) {
        r.failed = true;
        r.note = "magnitude routes disagree";
        r.reproducer = mag::graph_to_json(g);
        return r;
    }
    for (int ell = 0; ell <= opt.order; ++ell) {
        mag::ChainSlice s = mag::chain_slice(g, ell);
        for (std::size_t k = 2; k < s.boundaries.size(); ++k)
            if (!mag::sparse_is_zero(mag::sparse_compose(s.boundaries[k - 1], s.boundaries[k]))) {
                r.failed = true;
                r.note = "boundary^2 != 0 at ell=" + std::to_string(ell);
                r.reproducer = mag::graph_to_json(g);
                return r;
            }
    }
    return r;
}

TrialResult fuzz_random_sycamore(const FuzzOptions& opt, int trial) {
    mag::Rng rng = mag::Rng::for_trial(opt.seed, static_cast<std::uint64_t>(trial));
    TrialResult r;
    auto spec = mag::random_sycamore_spec(rng, opt.max_vertices, 200);
    if (!spec) return r;
    r.generated = true;
    mag::SycamoreReport rep =
        mag::verify_sycamore_magnitude(*spec, opt.order, std::min(opt.order, 4));
    if (!rep.validation.valid() || !rep.magnitudes_equal || !rep.evidence_consistent) {
        r.failed = true;
        r.note = !rep.validation.valid()   ? "generator produced an invalid spec"
                 : !rep.magnitudes_equal   ? "Mag(X) != Mag(Y) on a sycamore twist"
                                           : "evidence inconsistent on a sycamore twist";
        r.reproducer = mag::twist_spec_to_json(*spec);
    }
    return r;
}

TrialResult fuzz_whitney_nonadjacent(const FuzzOptions& opt, int trial) {
    mag::Rng rng = mag::Rng::for_trial(opt.seed, static_cast<std::uint64_t>(trial));
    TrialResult r;
    mag::TwistSpec spec = mag::random_whitney_nonadjacent_spec(rng, opt.max_vertices);
    r.generated = true;
    mag::TwistPair pair = mag::build_twist_pair(spec);
    if (mag::magnitude_by_inversion(pair.x, opt.order) !=
        mag::magnitude_by_inversion(pair.y, opt.order)) {
        r.witness = true;
        r.reproducer = mag::twist_spec_to_json(spec);
    }
    return r;
}

int cmd_fuzz(const FuzzOptions& opt) {
    std::vector<TrialResult> results;
    if (opt.mode == "random-graphs")
        results = run_trials(opt.trials, [&](int i) { return fuzz_random_graph(opt, i); });
    else if (opt.mode == "random-sycamore")
        results = run_trials(opt.trials, [&](int i) { return fuzz_random_sycamore(opt, i); });
    else if (opt.mode == "random-whitney-nonadjacent")
        results = run_trials(opt.trials, [&](int i) { return fuzz_whitney_nonadjacent(opt, i); });
    else {
        std::cerr << "error: unknown mode " << opt.mode << "\n";
        return kExitBadInput;
    }

    int generated = 0, failures = 0, witnesses = 0;
    int first_failure = -1, first_witness = -1;
    for (int i = 0; i < opt.trials; ++i) {
        const auto& r = results[static_cast<std::size_t>(i)];
        generated += r.generated;
        failures += r.failed;
        witnesses += r.witness;
        if (r.failed && first_failure < 0) first_failure = i;
        if (r.witness && first_witness < 0) first_witness = i;
    }

    std::cout << "mode=" << opt.mode << " seed=" << opt.seed << " trials=" << opt.trials
              << " max-vertices=" << opt.max_vertices << " max-length=" << opt.order << "\n";
    if (opt.mode == "random-sycamore")
        std::cout << "accepted=" << generated << "/" << opt.trials << " (rejection sampling)\n";
    if (opt.mode == "random-whitney-nonadjacent") {
        std::cout << "magnitude-inequality witnesses=" << witnesses << "/" << opt.trials << "\n";
        if (first_witness >= 0) {
            std::cout << "first witness: trial " << first_witness << "\n";
            if (!opt.out_path.empty())
                mag::write_file(opt.out_path,
                                results[static_cast<std::size_t>(first_witness)].reproducer.dump(2) + "\n");
        }
        return 0;
    }
    std::cout << "failures=" << failures << "/" << opt.trials << "\n";
    if (first_failure >= 0) {
        const auto& r = results[static_cast<std::size_t>(first_failure)];
        std::string dump = opt.out_path.empty() ? "fuzz-failure.json" : opt.out_path;
        mag::write_file(dump, r.reproducer.dump(2) + "\n");
        std::cerr << "error: trial " << first_failure << ": " << r.note << " (reproducer: " << dump
                  << ")\n";
        return kExitVerifyFailed;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graph magnitude, magnitude homology, and sycamore-twist verification"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    int order = 10;
    bool as_json = false;
    bool emit_homology = false;
    int evidence = 5;
    double t_min = 0.1, t_max = 10.0;
    int steps = 100;
    FuzzOptions fuzz;

    auto* c_mag = app.add_subcommand("magnitude", "Magnitude series by three independent routes");
    c_mag->add_option("graph", in_path, "graph JSON file")->required();
    c_mag->add_option("--max-length", order, "truncation order N");
    c_mag->add_option("--out", out_path, "write output to file instead of stdout");

    auto* c_hom = app.add_subcommand("homology", "Magnitude homology table (rank and torsion)");
    c_hom->add_option("graph", in_path, "graph JSON file")->required();
    c_hom->add_option("--max-length", order, "largest length grading");
    c_hom->add_flag("--json", as_json, "emit JSON instead of TSV");
    c_hom->add_option("--out", out_path, "write output to file instead of stdout");

    auto* c_build = app.add_subcommand("twist-build", "Glue the twisted pair X, Y from a spec");
    c_build->add_option("twist", in_path, "twist JSON file")->required();
    c_build->add_option("--out", out_path, "write output to file instead of stdout");

    auto* c_verify =
        app.add_subcommand("twist-verify", "Verify magnitude invariance for a twist spec");
    c_verify->add_option("twist", in_path, "twist JSON file")->required();
    c_verify->add_option("--max-length", order, "truncation order N");
    c_verify->add_option("--evidence-length", evidence,
                         "largest length for the per-(m, ell) evidence table");
    c_verify->add_flag("--emit-homology", emit_homology, "append homology tables for X and Y");
    c_verify->add_option("--out", out_path, "write output to file instead of stdout");

    auto* c_fuzz = app.add_subcommand("fuzz", "Randomized property checks (bit-reproducible)");
    c_fuzz->add_option("--mode", fuzz.mode,
                       "random-graphs | random-sycamore | random-whitney-nonadjacent")
        ->required();
    c_fuzz->add_option("--seed", fuzz.seed, "master seed");
    c_fuzz->add_option("--trials", fuzz.trials, "number of trials")->check(CLI::PositiveNumber);
    c_fuzz->add_option("--max-vertices", fuzz.max_vertices, "vertex cap per generated graph")
        ->check(CLI::PositiveNumber);
    c_fuzz->add_option("--max-length", fuzz.order, "truncation order N");
    c_fuzz->add_option("--out", fuzz.out_path, "where to dump a witness or failure reproducer");

    auto* c_plot = app.add_subcommand("plot", "Magnitude function samples at q = e^{-t}");
    c_plot->add_option("graph", in_path, "graph JSON file")->required();
    c_plot->add_option("--t-min", t_min, "smallest t (> 0)");
    c_plot->add_option("--t-max", t_max, "largest t");
    c_plot->add_option("--steps", steps, "number of samples (>= 2)");
    c_plot->add_option("--out", out_path, "write output to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_mag) return cmd_magnitude(in_path, order, out_path);
        if (*c_hom) return cmd_homology(in_path, order, as_json, out_path);
        if (*c_build) return cmd_twist_build(in_path, out_path);
        if (*c_verify) return cmd_twist_verify(in_path, order, evidence, emit_homology, out_path);
        if (*c_fuzz) return cmd_fuzz(fuzz);
        if (*c_plot) return cmd_plot(in_path, t_min, t_max, steps, out_path);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
