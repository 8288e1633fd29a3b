// Serial reference kernels vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mulab/experiment.hpp"
#include "mulab/kernels.hpp"
#include "mulab/sampler.hpp"
#include "mulab/subset.hpp"

using namespace mulab;

namespace {

std::vector<double> random_reals(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

template <kernels::Exec E>
void BM_Wht(benchmark::State& state) {
    const auto base = random_reals(1ULL << state.range(0));
    std::vector<double> data;
    for (auto _ : state) {
        data = base;
        kernels::wht(data, E);
        benchmark::DoNotOptimize(data.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}

template <kernels::Exec E>
void BM_TransformAxis(benchmark::State& state) {
    // Z(m) x Z(m), transforming the leading (strided) axis.
    const auto m = static_cast<std::uint64_t>(state.range(0));
    const auto reals = random_reals(m * m);
    std::vector<std::complex<double>> base(reals.begin(), reals.end()), data;
    const kernels::CyclicPlan plan(m, -1);
    for (auto _ : state) {
        data = base;
        kernels::transform_axis(data, plan, m, E);
        benchmark::DoNotOptimize(data.data());
    }
}

template <kernels::Exec E>
void BM_TripleCount(benchmark::State& state) {
    const auto g = parse_group_spec("Z2^16");
    const auto m = static_cast<std::uint64_t>(state.range(0));
    const auto a = sample_subset(g, m, 1, false);
    const auto b = sample_subset(g, m, 2, false);
    const auto c = sample_subset(g, m, 3, false);
    const auto wa = a.weights();
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::triple_count(g, wa, b.view(), c.view(), E));
    }
}

void BM_RunTrials(benchmark::State& state) {
    ExperimentConfig config;
    config.group = parse_group_spec("Z2^12");
    config.m = 64;
    config.trials = 16;
    config.restarts = 5;
    const RunOptions opts{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(run_trials(config, opts));
}

}  // namespace

BENCHMARK(BM_Wht<kernels::Exec::serial>)->DenseRange(12, 22, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Wht<kernels::Exec::parallel>)->DenseRange(12, 22, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TransformAxis<kernels::Exec::serial>)->Arg(64)->Arg(125)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TransformAxis<kernels::Exec::parallel>)->Arg(64)->Arg(125)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TripleCount<kernels::Exec::serial>)->Arg(256)->Arg(2048)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TripleCount<kernels::Exec::parallel>)->Arg(256)->Arg(2048)->Unit(benchmark::kMicrosecond);
// threads = 1 runs the serial trial loop; 0 uses the OpenMP default team.
BENCHMARK(BM_RunTrials)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
