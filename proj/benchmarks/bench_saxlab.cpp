#include "saxlab/correlation.hpp"
#include "saxlab/entropy.hpp"
#include "saxlab/eval.hpp"
#include "saxlab/metrics.hpp"
#include "saxlab/series.hpp"
#include "saxlab/symbolic.hpp"

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>

namespace {

using namespace saxlab;

Series random_series(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Series s(n);
    for (double& v : s) v = gauss(rng);
    return s;
}

SaxConfig config_for(std::size_t n) {
    return SaxConfig{static_cast<int>(n), static_cast<int>(n) / 8, 7};
}

void BM_Paa(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Series s = random_series(n, 11);
    for (auto _ : state) benchmark::DoNotOptimize(paa(s, static_cast<int>(n) / 8));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Paa)->Arg(96)->Arg(286)->Arg(1024)->Arg(8192);

void BM_Symbolize(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Series s = random_series(n, 12);
    const SaxConfig cfg = config_for(n);
    for (auto _ : state) benchmark::DoNotOptimize(symbolize(s, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Symbolize)->Arg(96)->Arg(286)->Arg(1024)->Arg(8192);

void BM_ReconstructionScore(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Series s = random_series(n, 13);
    const SaxConfig cfg = config_for(n);
    const SymbolicResult r = symbolize(s, cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(iec_for_representation(s, r.sax_recon, cfg.a));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ReconstructionScore)->Arg(96)->Arg(1024)->Arg(8192);

void BM_PermutationEntropy(benchmark::State& state) {
    const Series s = random_series(4096, 14);
    const PermutationSpec spec{static_cast<int>(state.range(0)), 1};
    for (auto _ : state) benchmark::DoNotOptimize(permutation_entropy(s, spec));
    state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_PermutationEntropy)->Arg(3)->Arg(5)->Arg(7);

void BM_Correlogram(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Series s = random_series(n, 15);
    const int max_lag = default_max_lag(n);
    for (auto _ : state) benchmark::DoNotOptimize(correlogram(s, max_lag, false));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Correlogram)->Arg(96)->Arg(1024)->Arg(8192);

void BM_SaxBop(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Series s = random_series(n, 16);
    const SaxConfig cfg{static_cast<int>(n), 8, 4};
    const int subwindow = default_bop_subwindow(n);
    for (auto _ : state) benchmark::DoNotOptimize(sax_bop(s, cfg, subwindow));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SaxBop)->Arg(96)->Arg(286)->Arg(1024);

void BM_KlDivergence(benchmark::State& state) {
    std::mt19937_64 rng(17);
    Histogram p, q;
    p.counts.resize(16);
    q.counts.resize(16);
    for (std::size_t i = 0; i < 16; ++i) {
        p.counts[i] = static_cast<std::int64_t>(rng() % 100);
        q.counts[i] = static_cast<std::int64_t>(rng() % 100);
        p.total += p.counts[i];
        q.total += q.counts[i];
    }
    for (auto _ : state) benchmark::DoNotOptimize(kl_divergence(p, q));
}
BENCHMARK(BM_KlDivergence);

void BM_AnalyzeDataset(benchmark::State& state) {
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    Dataset ds;
    ds.name = "bench";
    ds.series_length = 96;
    for (std::size_t i = 0; i < samples; ++i) {
        ds.samples.push_back(random_series(96, 100 + i));
        ds.labels.push_back(static_cast<double>(i % 2));
    }
    const SaxConfig cfg{96, 12, 7};
    for (auto _ : state) benchmark::DoNotOptimize(analyze_dataset(ds, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_AnalyzeDataset)->Arg(8)->Arg(32);

} // namespace

BENCHMARK_MAIN();
