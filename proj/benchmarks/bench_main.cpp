#include "dfmax/exact_counting.hpp"
#include "dfmax/krawtchouk.hpp"
#include "dfmax/maximal_sim.hpp"
#include "dfmax/multipliers.hpp"
#include "dfmax/rm_inequality.hpp"
#include "dfmax/saddle_point.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dfmax;

static void BM_ThetaCoeffs(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta_coeffs(d, d / 20));
}
BENCHMARK(BM_ThetaCoeffs)->Arg(200)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_Concentration(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(concentration_report(d, 40, 2, 9));
}
BENCHMARK(BM_Concentration)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_SolveSaddle(benchmark::State& state) {
    double alpha = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_saddle(alpha));
        alpha = alpha < 0.9 ? alpha * 1.01 : 1e-3;
    }
}
BENCHMARK(BM_SolveSaddle);

static void BM_KrawtchoukRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kr_row(n / 2, n));
}
BENCHMARK(BM_KrawtchoukRow)->Arg(20)->Arg(60);

static void BM_BetaEval(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    TorusPoint xi;
    for (int i = 0; i < d; ++i) xi.xi.push_back(u(rng));
    MultiIndex nbar{{d / 8, d / 8}};
    for (auto _ : state) benchmark::DoNotOptimize(beta_eval(nbar, xi));
    state.SetComplexityN(d);
}
BENCHMARK(BM_BetaEval)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_MaximalFunction(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Family fam = build_family(FamilyKind::Semigroup, d, 1);
    std::vector<Kernel> kernels;
    for (const KernelSpec& s : fam.members) kernels.push_back(make_kernel(s, d, 16));
    TorusFunction f = random_unit_function(d, 16, 3);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_function(kernels, f));
}
BENCHMARK(BM_MaximalFunction)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_RmEvaluate(benchmark::State& state) {
    std::vector<int> s(static_cast<size_t>(state.range(0)), 5), m(s.size(), 32);
    for (auto _ : state) benchmark::DoNotOptimize(rm_check(s, m, 1, 7));
}
BENCHMARK(BM_RmEvaluate)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
