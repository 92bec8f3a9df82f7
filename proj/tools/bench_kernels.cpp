#include <benchmark/benchmark.h>

#include <vector>

#include "qip/eval.hpp"
#include "qip/generator.hpp"
#include "qip/rng.hpp"

namespace {

using namespace qip;

Instance make_instance(int n) {
    GeneratorConfig cfg;
    cfg.family = 3;
    cfg.n = n;
    cfg.constrained = false;
    cfg.seed = 42;
    return generate(cfg);
}

std::vector<long long> make_point(const Instance& inst) {
    Rng rng(7);
    std::vector<long long> x(static_cast<std::size_t>(inst.n()));
    for (int i = 0; i < inst.n(); ++i) x[static_cast<std::size_t>(i)] = rng.uniform_int(0, inst.upper(i));
    return x;
}

void objective_serial(benchmark::State& state) {
    Instance inst = make_instance(static_cast<int>(state.range(0)));
    auto x = make_point(inst);
    for (auto _ : state) benchmark::DoNotOptimize(serial::objective(inst, x));
}

void objective_openmp(benchmark::State& state) {
    Instance inst = make_instance(static_cast<int>(state.range(0)));
    auto x = make_point(inst);
    for (auto _ : state) benchmark::DoNotOptimize(objective(inst, x));
}

void interactions_serial(benchmark::State& state) {
    Instance inst = make_instance(static_cast<int>(state.range(0)));
    auto x = make_point(inst);
    for (auto _ : state) benchmark::DoNotOptimize(serial::compute_interactions(inst, x));
}

void interactions_openmp(benchmark::State& state) {
    Instance inst = make_instance(static_cast<int>(state.range(0)));
    auto x = make_point(inst);
    for (auto _ : state) benchmark::DoNotOptimize(compute_interactions(inst, x));
}

BENCHMARK(objective_serial)->Arg(500)->Arg(2000)->Arg(4000);
BENCHMARK(objective_openmp)->Arg(500)->Arg(2000)->Arg(4000);
BENCHMARK(interactions_serial)->Arg(500)->Arg(2000)->Arg(4000);
BENCHMARK(interactions_openmp)->Arg(500)->Arg(2000)->Arg(4000);

} // namespace

BENCHMARK_MAIN();
