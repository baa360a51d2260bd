#include <benchmark/benchmark.h>

#include <string>

#include <json.hpp>

#include <magnitude/chains.hpp>
#include <magnitude/graph.hpp>
#include <magnitude/homology.hpp>
#include <magnitude/io.hpp>
#include <magnitude/random_gen.hpp>
#include <magnitude/series.hpp>
#include <magnitude/twist.hpp>

using namespace mag;

namespace {

Graph corpus_graph(int seed, int vertices) {
    Rng rng(static_cast<std::uint64_t>(seed));
    for (;;) {
        Graph g = random_graph(rng, vertices);
        if (g.vertex_count() == vertices) return g;
    }
}

TwistPair fixture_pair() {
    return build_twist_pair(twist_spec_from_json(
        nlohmann::json::parse(read_file(std::string(MAG_DATA_DIR) + "/twist_pair_small.json"))));
}

void BM_magnitude_inversion(benchmark::State& state) {
    Graph g = corpus_graph(1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(magnitude_by_inversion(g, 10));
}
BENCHMARK(BM_magnitude_inversion)->Arg(6)->Arg(8);

void BM_magnitude_path_count(benchmark::State& state) {
    Graph g = corpus_graph(1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(magnitude_by_path_count(g, 10));
}
BENCHMARK(BM_magnitude_path_count)->Arg(6)->Arg(8);

void BM_magnitude_euler(benchmark::State& state) {
    Graph g = corpus_graph(1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(magnitude_by_euler_characteristic(g, 8));
}
BENCHMARK(BM_magnitude_euler)->Arg(6)->Arg(8);

void BM_enumerate_paths(benchmark::State& state) {
    Graph g = corpus_graph(2, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_paths(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_enumerate_paths)->Arg(5)->Arg(7);

void BM_homology_slice(benchmark::State& state) {
    Graph g = corpus_graph(3, 6);
    ChainSlice s = chain_slice(g, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(homology_slice(s));
}
BENCHMARK(BM_homology_slice)->Arg(4)->Arg(5);

void BM_smith_normal_form(benchmark::State& state) {
    Graph g = corpus_graph(3, 6);
    ChainSlice s = chain_slice(g, 5);
    const SparseIntMatrix& d = s.boundaries[3];
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d));
}
BENCHMARK(BM_smith_normal_form);

void BM_q_slice(benchmark::State& state) {
    TwistPair pair = fixture_pair();
    for (auto _ : state)
        benchmark::DoNotOptimize(q_slice(pair, Owner::X, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_q_slice)->Arg(5)->Arg(6);

void BM_span_acyclicity(benchmark::State& state) {
    TwistPair pair = fixture_pair();
    QuotientSlice q = q_slice(pair, Owner::X, 2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_e_acyclic(e_subcomplex(pair, q).span));
}
BENCHMARK(BM_span_acyclicity)->Arg(5)->Arg(6);

void BM_twist_verify_report(benchmark::State& state) {
    TwistSpec spec = twist_spec_from_json(
        nlohmann::json::parse(read_file(std::string(MAG_DATA_DIR) + "/twist_pair_small.json")));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_sycamore_magnitude(spec, 8, 4));
}
BENCHMARK(BM_twist_verify_report);

}  // namespace

BENCHMARK_MAIN();
