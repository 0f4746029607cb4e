#include <benchmark/benchmark.h>

#include "triea/quality.hpp"
#include "triea/rng.hpp"

namespace {

triea::ExpressionTensor make_tensor(triea::Shape shape) {
    triea::Rng rng(1);
    std::vector<double> values(shape.cell_count());
    for (auto& v : values) v = rng.uniform01();
    return triea::ExpressionTensor::from_values(shape, std::move(values));
}

triea::TriclusterCoords leading(std::size_t g, std::size_t c, std::size_t t) {
    triea::TriclusterCoords tc;
    for (std::size_t i = 0; i < g; ++i) tc.genes.push_back(i);
    for (std::size_t i = 0; i < c; ++i) tc.conditions.push_back(i);
    for (std::size_t i = 0; i < t; ++i) tc.times.push_back(i);
    return tc;
}

void BM_Msr3d(benchmark::State& state) {
    const auto x = make_tensor({200, 4, 14});
    const auto tc = leading(static_cast<std::size_t>(state.range(0)), 4, 14);
    for (auto _ : state) benchmark::DoNotOptimize(triea::msr3d(x, tc));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(tc.cell_count()));
}
BENCHMARK(BM_Msr3d)->Arg(10)->Arg(50)->Arg(200);

void BM_Lsl(benchmark::State& state) {
    const auto x = make_tensor({200, 4, 14});
    const auto tc = leading(static_cast<std::size_t>(state.range(0)), 4, 14);
    const auto mode = state.range(1) ? triea::SlopeMode::paper_literal : triea::SlopeMode::ols;
    for (auto _ : state) benchmark::DoNotOptimize(triea::lsl(x, tc, mode));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(tc.cell_count()));
}
BENCHMARK(BM_Lsl)->Args({10, 0})->Args({200, 0})->Args({200, 1});

void BM_Fitness(benchmark::State& state) {
    const auto x = make_tensor({200, 4, 14});
    const auto tc = leading(static_cast<std::size_t>(state.range(0)), 4, 14);
    triea::Archive archive;
    archive.add(leading(20, 2, 5), {});
    for (auto _ : state) benchmark::DoNotOptimize(triea::fitness(x, tc, {}, archive));
}
BENCHMARK(BM_Fitness)->Arg(20)->Arg(100)->Arg(200);

}  // namespace
