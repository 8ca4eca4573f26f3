#include <benchmark/benchmark.h>

#include "pstab/instance.hpp"
#include "pstab/interpolation.hpp"
#include "pstab/stability.hpp"

namespace {

// Dense complexes on `vertices` vertices up to dimension 2.
pstab::InstanceFile instance(unsigned vertices) {
  pstab::GeneratorConfig cfg;
  cfg.seed = 17;
  cfg.num_vertices = vertices;
  cfg.max_dimension = 2;
  cfg.fill_probability = 0.6;
  cfg.value_max = 20;
  return pstab::generate_instance(cfg);
}

template <pstab::Exec E>
void BM_CrossingTimes(benchmark::State& state) {
  const auto inst = instance(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto s = pstab::crossing_times(inst.functions[0], inst.functions[1], E);
    benchmark::DoNotOptimize(s);
  }
  state.counters["simplices"] = static_cast<double>(inst.complex.size());
}

template <pstab::Exec E>
void BM_VerifyStability(benchmark::State& state) {
  const auto inst = instance(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto r = pstab::verify_stability(inst.complex, inst.functions[0], inst.functions[1], E);
    benchmark::DoNotOptimize(r);
  }
  state.counters["simplices"] = static_cast<double>(inst.complex.size());
}

}  // namespace

BENCHMARK(BM_CrossingTimes<pstab::Exec::serial>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingTimes<pstab::Exec::parallel>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyStability<pstab::Exec::serial>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyStability<pstab::Exec::parallel>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
