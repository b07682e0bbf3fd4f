#include <benchmark/benchmark.h>

#include "tracecodes/cyclotomy.hpp"
#include "tracecodes/gf.hpp"
#include "tracecodes/tracecode.hpp"

namespace tc = tracecodes;

namespace {

void BM_FieldMulTable(benchmark::State& state) {
    auto F = tc::gf::build_field(2, static_cast<unsigned>(state.range(0)));
    tc::gf::Index x = 3, acc = 1;
    for (auto _ : state) {
        acc = F->mul(acc, x);
        x = F->add(x, acc) | 1;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMulTable)->Arg(8)->Arg(16);

void BM_FieldMulReference(benchmark::State& state) {
    auto F = tc::gf::build_field(2, static_cast<unsigned>(state.range(0)));
    tc::gf::Index x = 3, acc = 1;
    for (auto _ : state) {
        acc = F->mul_reference(acc, x);
        x = F->add_reference(x, acc) | 1;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMulReference)->Arg(8)->Arg(16);

void BM_BuildField(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tc::gf::build_field(3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuildField)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BruteForceSpectrum(benchmark::State& state) {
    const tc::code::TraceCode code(tc::code::CodeSpec::make(2, 2, 3, 3));
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(code.brute_force_spectrum(tc::code::kDefaultWorkBudget, workers));
}
BENCHMARK(BM_BruteForceSpectrum)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RepresentativeSpectrum(benchmark::State& state) {
    const tc::code::TraceCode code(tc::code::CodeSpec::make(7, 1, 3, 6));
    for (auto _ : state) benchmark::DoNotOptimize(code.representative_spectrum_check());
}
BENCHMARK(BM_RepresentativeSpectrum)->Unit(benchmark::kMillisecond);

void BM_GaussianPeriods(benchmark::State& state) {
    auto F = tc::gf::build_field(5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(tc::cyclo::gaussian_periods(*F, 4));
}
BENCHMARK(BM_GaussianPeriods)->Unit(benchmark::kMicrosecond);

void BM_PeriodPolynomial(benchmark::State& state) {
    auto F = tc::gf::build_field(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(tc::cyclo::period_polynomial(*F, 3));
}
BENCHMARK(BM_PeriodPolynomial)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
