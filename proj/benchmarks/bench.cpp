// bench.cpp — Eigensolver and model-pipeline timings

#include "trk/models.hpp"
#include "trk/sumrules.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace trk;

namespace {

ComplexMatrix random_hermitian(int n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = Complex(dist(rng), dist(rng));
        }
    }
    return 0.5 * (a + a.adjoint().eval());
}

void bm_hermitian_eig(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix m = random_hermitian(n, 7u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(m));
    }
}

void bm_hermitian_function(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix a = annihilation(n);
    const ComplexMatrix m = a + a.adjoint().eval();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_function(m, MatrixFunction::cosine));
    }
}

void bm_build_and_diagonalize(benchmark::State& state)
{
    const ModelKind kind = all_model_kinds()[static_cast<std::size_t>(state.range(0))];
    const ModelDefinition def = default_definition(kind);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize_model(build_model(def)));
    }
    state.SetLabel(kind_name(kind));
}

void bm_full_report(benchmark::State& state)
{
    const ModelDefinition def = default_definition(ModelKind::rabi_coulomb);
    const BuiltModel model = build_model(def);
    const DressedSpectrum spec = diagonalize_model(model);
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_report(model, spec, 0, 0, 15));
    }
}

} // namespace

BENCHMARK(bm_hermitian_eig)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_hermitian_function)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_build_and_diagonalize)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_full_report)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
