#include <benchmark/benchmark.h>

#include "trapcorr/trapcorr.hpp"

using namespace trapcorr;

namespace {

void BM_Eigendecompose(benchmark::State &state) {
    const PhysicalParams p{2.5, 2.0, 90.0, state.range(0)};
    const auto h = build_hamiltonian(p, build_basis(p, SymmetricCutoff{}));
    for (auto _ : state)
        benchmark::DoNotOptimize(eigendecompose(h, Eigenvectors::Skip));
}
BENCHMARK(BM_Eigendecompose)->Arg(50)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_PotentialStep(benchmark::State &state) {
    const int gamma = static_cast<int>(state.range(0));
    const PhysicalParams p{2.5, 2.0, 90.0, 0};
    const auto basis = build_basis(p, QubitRegister{gamma});
    auto s = prepare_k_state(basis, 0);
    s.apply_ancilla_hadamard();
    for (auto _ : state) {
        potential_step(s, 1e-3, p, basis, true);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{2} << gamma));
}
BENCHMARK(BM_PotentialStep)->DenseRange(4, 16, 4);

void BM_Erfc(benchmark::State &state) {
    const Complex z{1.7, 2.3};
    for (auto _ : state)
        benchmark::DoNotOptimize(erfc(z));
}
BENCHMARK(BM_Erfc);

void BM_DeltaCInfinite(benchmark::State &state) {
    double t = 0.0;
    for (auto _ : state) {
        t = t > 2.0 ? 0.01 : t + 0.01;
        benchmark::DoNotOptimize(delta_c_infinite(t, 2.5, 1.0));
    }
}
BENCHMARK(BM_DeltaCInfinite);

void BM_WeightedIntegral(benchmark::State &state) {
    const PhysicalParams p{2.5, 2.0, 1.0, 0};
    const auto delta = [&](double eps) { return phase_shift(eps, p); };
    for (auto _ : state)
        benchmark::DoNotOptimize(weighted_integral(delta, 1.0));
}
BENCHMARK(BM_WeightedIntegral)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
