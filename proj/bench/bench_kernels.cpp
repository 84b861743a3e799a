// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the
// thread count; serial rows are the baseline.

#include "interlacing/interlace.hpp"
#include "interlacing/suite.hpp"

#include <benchmark/benchmark.h>

using namespace interlacing;

namespace {

std::pair<Polynomial, Polynomial> pencil_pair(std::size_t n) {
    SplitMix64 rng(99);
    const RootPair roots = random_root_pair(rng, n, 20, false);
    return {Polynomial::from_roots(roots.f), Polynomial::from_roots(roots.g)};
}

RunConfig cauchy_config(std::size_t trials) {
    RunConfig c;
    c.seed = 5;
    c.trials = trials;
    c.size_min = 4;
    c.size_max = 6;
    c.entry_bound = 10;
    c.mode = SuiteMode::Cauchy;
    return c;
}

void BM_PencilScanSerial(benchmark::State& state) {
    const auto [f, g] = pencil_pair(static_cast<std::size_t>(state.range(0)));
    const auto alphas = default_alphas();
    for (auto _ : state) benchmark::DoNotOptimize(pencil_scan_serial(f, g, alphas));
}

void BM_PencilScanParallel(benchmark::State& state) {
    const auto [f, g] = pencil_pair(static_cast<std::size_t>(state.range(0)));
    const auto alphas = default_alphas();
    for (auto _ : state) benchmark::DoNotOptimize(pencil_scan(f, g, alphas));
}

void BM_CauchyTrialsSerial(benchmark::State& state) {
    const RunConfig c = cauchy_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(c));
}

void BM_CauchyTrialsParallel(benchmark::State& state) {
    const RunConfig c = cauchy_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_trials(c));
}

}  // namespace

BENCHMARK(BM_PencilScanSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PencilScanParallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyTrialsSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyTrialsParallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
