#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bdom/bdma.hpp"
#include "bdom/domination.hpp"
#include "bdom/evolution.hpp"

using namespace bdom;

namespace {

std::vector<Individual> random_pool(std::size_t n, std::size_t dims) {
    Rng rng(n * 31 + dims);
    std::uniform_real_distribution<double> f(0.0, 500.0), b(0.0, 150.0);
    std::vector<Individual> pool;
    for (std::size_t i = 0; i < n; ++i) {
        Behavior behavior(dims);
        for (auto& v : behavior) v = b(rng);
        pool.emplace_back(i, f(rng), behavior);
    }
    return pool;
}

void BM_BehaviorFronts(benchmark::State& state) {
    const auto pool = random_pool(static_cast<std::size_t>(state.range(0)), 1);
    const ScaledDomination rel(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(behavior_fronts(pool, rel));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BehaviorFronts)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_Bdma2Select(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto pool = random_pool(n + 1, 10);
    const auto params = DominationParams::split(0.005, n);
    for (auto _ : state) benchmark::DoNotOptimize(bdma2_select(pool, params, 5));
}
BENCHMARK(BM_Bdma2Select)->Arg(20)->Arg(100)->Arg(400);

void BM_Bdma2aAdapt(benchmark::State& state) {
    const auto pool = random_pool(static_cast<std::size_t>(state.range(0)), 10);
    for (auto _ : state) benchmark::DoNotOptimize(bdma2a_adapt_w(pool, 1.0));
}
BENCHMARK(BM_Bdma2aAdapt)->Arg(21)->Arg(201);

void BM_RunStep(benchmark::State& state) {
    const auto kind = static_cast<StrategyKind>(state.range(0));
    const FocusedAckleyDomain domain(10);
    EAParams ea;
    ea.mutation_sigma = domain.default_mutation_sigma();
    RunState run(domain, RankingStrategy::make(kind, ea.population_size, domain.default_domination_w()), ea);
    for (auto _ : state) run.step();
    state.SetLabel(std::string(strategy_label(kind)));
}
BENCHMARK(BM_RunStep)->DenseRange(0, static_cast<int>(StrategyKind::Bdma2a));

}  // namespace

BENCHMARK_MAIN();
