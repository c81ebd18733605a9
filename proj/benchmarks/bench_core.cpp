#include <benchmark/benchmark.h>

#include <random>

#include "opoly/checker.hpp"
#include "opoly/spectrum.hpp"

using namespace opoly;

namespace {

VecFunc random_func(const FieldSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Element> table(spec.size());
    for (auto& v : table) v = static_cast<Element>(rng()) & spec.max_element();
    return from_table(spec, std::move(table));
}

void BM_mul(benchmark::State& state) {
    const FieldSpec spec = make_field(static_cast<int>(state.range(0)));
    Element a = 3, b = spec.max_element() - 2;
    for (auto _ : state) {
        a = mul(spec, a, b) | 1;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_mul)->Arg(8)->Arg(16);

void BM_fwht(benchmark::State& state) {
    SignVector v(static_cast<std::size_t>(1) << state.range(0), 1);
    for (auto _ : state) {
        fwht(v);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_fwht)->DenseRange(10, 16, 2);

void BM_walsh_row(benchmark::State& state) {
    const FieldSpec spec = make_field(static_cast<int>(state.range(0)));
    const VecFunc f = random_func(spec, 1);
    const auto dmap = trace_index_map(spec);
    Element v = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(walsh_row(f, v, dmap));
        v = (v + 1) & spec.max_element();
    }
}
BENCHMARK(BM_walsh_row)->DenseRange(8, 12, 2);

void BM_count_deficiency(benchmark::State& state) {
    const FieldSpec spec = make_field(static_cast<int>(state.range(0)));
    const VecFunc f = random_func(spec, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_deficiency(f, 1));
}
BENCHMARK(BM_count_deficiency)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_check_slopes(benchmark::State& state) {
    const FieldSpec spec = make_field(static_cast<int>(state.range(0)));
    const VecFunc f = from_monomial(spec, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_slopes(f));
}
BENCHMARK(BM_check_slopes)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_gather_walsh_diagonals(benchmark::State& state) {
    const FieldSpec spec = make_field(static_cast<int>(state.range(0)));
    const VecFunc f = random_func(spec, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(gather_walsh_diagonals(f, 1));
}
BENCHMARK(BM_gather_walsh_diagonals)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_walsh_excess(benchmark::State& state) {
    const FieldSpec spec = make_field(static_cast<int>(state.range(0)));
    const VecFunc f = from_monomial(spec, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(walsh_excess(f, 1));
}
BENCHMARK(BM_walsh_excess)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_walsh_excess_parallel(benchmark::State& state) {
    const FieldSpec spec = make_field(10);
    const VecFunc f = from_monomial(spec, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(walsh_excess(f, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_walsh_excess_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
