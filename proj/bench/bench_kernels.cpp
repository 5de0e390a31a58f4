#include <benchmark/benchmark.h>

#include "pipcat/checks.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/pip.hpp"
#include "pipcat/simplicial.hpp"

using namespace pipcat;

namespace {

Execution exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Execution::serial : Execution::parallel; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

void BM_Downsets(benchmark::State& state) {
    const Pip p = random_pip(11, static_cast<int>(state.range(0)), 0.1, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_consistent_downsets(p, exec_of(state)));
    set_label(state);
}

void BM_CrossingComplex(benchmark::State& state) {
    const Pip p = random_pip(12, static_cast<int>(state.range(0)), 0.1, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(crossing_complex(p, exec_of(state)));
    set_label(state);
}

void BM_BuildComplex(benchmark::State& state) {
    const Pip p = random_pip(13, static_cast<int>(state.range(0)), 0.1, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(CubicalComplex::build(p, exec_of(state)));
    set_label(state);
}

void BM_CheckFanOut(benchmark::State& state) {
    CheckOptions opt;
    opt.count = static_cast<int>(state.range(0));
    opt.n_max = 8;
    opt.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(run_checks(opt));
    set_label(state);
}

}  // namespace

BENCHMARK(BM_Downsets)->ArgsProduct({{14, 18, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingComplex)->ArgsProduct({{14, 18, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildComplex)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckFanOut)->ArgsProduct({{50}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
