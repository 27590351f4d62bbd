#include "hypertheta/addition.hpp"
#include "hypertheta/catalog.hpp"
#include "hypertheta/elliptic.hpp"
#include "hypertheta/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace hypertheta;

static void BM_ThetaEval(benchmark::State& state) {
    const auto s = draw_sample(1);
    const Characteristic ch = Characteristic::integer(1, 0, 0, 1);
    PrecisionPolicy pol;
    pol.eps_tail = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(theta_eval(ch, s.p1, s.tau, pol));
}
BENCHMARK(BM_ThetaEval)->Arg(8)->Arg(14);

static void BM_CatalogSample(benchmark::State& state) {
    const auto& catalog = builtin_catalog();
    const PrecisionPolicy pol;
    std::uint64_t i = 0;
    for (auto _ : state) {
        ThetaCache cache(draw_sample(sample_seed(7, i++)), pol);
        for (const auto& idty : catalog.identities) benchmark::DoNotOptimize(evaluate_identity(idty, cache, pol));
    }
}
BENCHMARK(BM_CatalogSample)->Unit(benchmark::kMillisecond);

static void BM_AddAlgebraic(benchmark::State& state) {
    const auto s = draw_sample(3);
    const auto consts = constants_vector(s.tau);
    const auto f1 = f_vector(s.p1, s.tau), f2 = f_vector(s.p2, s.tau);
    for (auto _ : state)
        for (const auto& ch : nontrivial_characteristics()) benchmark::DoNotOptimize(add_algebraic(ch, f1, f2, consts));
}
BENCHMARK(BM_AddAlgebraic);

static void BM_ConstantsVector(benchmark::State& state) {
    const auto s = draw_sample(5);
    for (auto _ : state) benchmark::DoNotOptimize(constants_vector(s.tau));
}
BENCHMARK(BM_ConstantsVector);

static void BM_YangBaxter(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(yang_baxter_residual(0.4, -1.1, 0.7));
}
BENCHMARK(BM_YangBaxter);
BENCHMARK_MAIN();
