#include <benchmark/benchmark.h>

#include "glw/engine.hpp"
#include "glw/oracle.hpp"

namespace {

const glw::Permutation& k3() {
  static const glw::Permutation p = glw::chord_to_perm(glw::make_kn(3));
  return p;
}

void BM_WDirectSerial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(glw::w_direct_serial(k3(), n));
}
BENCHMARK(BM_WDirectSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_WDirectParallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(glw::w_direct(k3(), n));
}
BENCHMARK(BM_WDirectParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EngineKn(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    glw::Engine engine;
    benchmark::DoNotOptimize(engine.wgl(glw::make_kn(n)));
  }
}
BENCHMARK(BM_EngineKn)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
