// Escape-time classification: OpenMP rows against the serial reference.

#include <benchmark/benchmark.h>

#include "cosdyn/render.hpp"

using namespace cosdyn;

namespace {

const Complex kC(-0.9716352659878172, 0.44747240814902356);

void BM_ClassifySerial(benchmark::State& state) {
  const auto m = CosineMap::from_normal_form(kC, kC);
  const int n = static_cast<int>(state.range(0));
  const Viewport vp{m.u(), 8.0, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(classify_pixels_serial(m, vp));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto m = CosineMap::from_normal_form(kC, kC);
  const int n = static_cast<int>(state.range(0));
  const Viewport vp{m.u(), 8.0, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(classify_pixels(m, vp));
  state.SetItemsProcessed(state.iterations() * n * n);
}

}  // namespace

BENCHMARK(BM_ClassifySerial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
