#include <benchmark/benchmark.h>

#include "triea/ga.hpp"
#include "triea/synthetic.hpp"
#include "triea/tensor_io.hpp"

namespace {

void BM_EvolveOneTricluster(benchmark::State& state) {
    triea::SyntheticSpec spec;
    spec.dims = {static_cast<std::size_t>(state.range(0)), 4, 14};
    spec.seed = 3;
    const auto tensor = triea::normalize_minmax(triea::generate_synthetic(spec).tensor);
    triea::GAConfig config;
    config.generations = static_cast<std::size_t>(state.range(1));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        triea::Rng rng(seed++);
        benchmark::DoNotOptimize(triea::evolve_one_tricluster(tensor, config, triea::Archive{}, rng));
    }
}
BENCHMARK(BM_EvolveOneTricluster)->Args({100, 20})->Args({200, 100})->Unit(benchmark::kMillisecond);

void BM_Operators(benchmark::State& state) {
    triea::Rng rng(1);
    triea::Chromosome a({200, 4, 14}), b({200, 4, 14});
    for (std::size_t i = 0; i < a.size(); i += 3) a.flip(i);
    for (std::size_t i = 1; i < b.size(); i += 2) b.flip(i);
    for (auto _ : state) {
        auto [o1, o2] = triea::crossover(a, b, 0.95, rng);
        benchmark::DoNotOptimize(triea::repair(triea::mutate(std::move(o1), 0.5, rng), rng));
    }
}
BENCHMARK(BM_Operators);

}  // namespace
