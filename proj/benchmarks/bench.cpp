#include <benchmark/benchmark.h>

#include "es/expansions.hpp"
#include "es/products.hpp"
#include "es/coaction.hpp"
#include "es/lie.hpp"
#include "es/parse.hpp"

using namespace es;

static void BM_shuffle(benchmark::State& state) {
    Word a(state.range(0), Letter::One);
    Word b(state.range(0), Letter::Zero);
    for (auto _ : state) benchmark::DoNotOptimize(shuffle(a, b));
}
BENCHMARK(BM_shuffle)->Arg(4)->Arg(6)->Arg(8);

static void BM_stuffle(benchmark::State& state) {
    YWord a(state.range(0), 2), b(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(stuffle(a, b));
}
BENCHMARK(BM_stuffle)->Arg(3)->Arg(5);

static void BM_coact(benchmark::State& state) {
    auto w = index_to_word(parse_index("z(2,-1,3)")).second;
    for (auto _ : state) benchmark::DoNotOptimize(coact(w));
}
BENCHMARK(BM_coact);

static void BM_starstar_expand(benchmark::State& state) {
    EsIndex x(Deco::StarStar, 0, std::vector<int>(state.range(0), 2));
    for (auto _ : state) benchmark::DoNotOptimize(to_plain_regularized(x));
}
BENCHMARK(BM_starstar_expand)->Arg(3)->Arg(5);

static void BM_lyndon_basis(benchmark::State& state) {
    for (auto _ : state) {
        // weight-7 pairing table, built fresh is what we time via first call
        benchmark::DoNotOptimize(&LyndonBasis::get((int)state.range(0)));
    }
}
BENCHMARK(BM_lyndon_basis)->Arg(6)->Arg(7);

static void BM_relation_echelon(benchmark::State& state) {
    for (auto _ : state) {
        LSpace sp = build_lspace((int)state.range(0), {"depth1", "antipode_shuffle", "hybrid"});
        benchmark::DoNotOptimize(sp.rank());
    }
}
BENCHMARK(BM_relation_echelon)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
