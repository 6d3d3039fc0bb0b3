#include "relcoh/relcoh.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace relcoh;

MeshData refined(const MeshData& base, int level) { return meshgen::refine_midpoint(base, level); }

void BM_ComputeAnnulus(benchmark::State& state)
{
    const auto mesh = refined(meshgen::make_annulus(16, 4), static_cast<int>(state.range(0)));
    const auto complex = SurfaceComplex::build(mesh);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_all(complex, {}));
    }
    state.counters["edges"] = complex.edge_count();
    state.SetComplexityN(complex.edge_count());
}
BENCHMARK(BM_ComputeAnnulus)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_ComputeTorus(benchmark::State& state)
{
    const auto mesh = refined(meshgen::make_torus(8, 8), static_cast<int>(state.range(0)));
    const auto complex = SurfaceComplex::build(mesh);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_all(complex, {}));
    }
    state.counters["edges"] = complex.edge_count();
    state.SetComplexityN(complex.edge_count());
}
BENCHMARK(BM_ComputeTorus)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_BuildComplex(benchmark::State& state)
{
    const auto mesh = refined(meshgen::make_klein_bottle(8, 8), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(SurfaceComplex::build(mesh));
    }
    state.SetComplexityN(static_cast<std::int64_t>(mesh.faces.size()));
}
BENCHMARK(BM_BuildComplex)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_VerifyTorusWithHole(benchmark::State& state)
{
    const FaceId first[] = {0};
    const auto complex = SurfaceComplex::build(meshgen::remove_faces(meshgen::make_torus(8, 8), first));
    const auto bp = classify_boundary(complex, {});
    const auto gens = compute_all(complex, {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(complex, bp, gens));
    }
}
BENCHMARK(BM_VerifyTorusWithHole)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
