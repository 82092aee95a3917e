#include <benchmark/benchmark.h>

#include "cspacevis/cspace.hpp"
#include "cspacevis/image_codec.hpp"
#include "cspacevis/image_metrics.hpp"
#include "cspacevis/planar.hpp"
#include "cspacevis/render.hpp"

using namespace cspacevis;

namespace {

const PlanarRobot& robot7() {
  static const PlanarRobot r = make_uniform_robot(7, 2.0 / 7, 0.02);
  return r;
}

const Workspace& scene() {
  static const Workspace ws = random_workspace(3, 4, {{-1.5, -1.5}, {1.5, 1.5}}, {0.1, 0.4});
  return ws;
}

const Dataset& dataset() {
  static const Dataset ds = sample_cspace(robot7(), scene(), 10000, 1, SampleMode::All);
  return ds;
}

void BM_SampleCspace(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_cspace(robot7(), scene(), m, 1, SampleMode::All));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}
BENCHMARK(BM_SampleCspace)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BuildTree(benchmark::State& state) {
  for (auto _ : state) {
    for (std::size_t i = 0; i < 6; ++i) benchmark::DoNotOptimize(build_tree(dataset(), i, {500}));
  }
}
BENCHMARK(BM_BuildTree)->Unit(benchmark::kMillisecond);

void BM_ApplyEpsilon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(apply_epsilon(dataset(), {500}, {0.005}));
}
BENCHMARK(BM_ApplyEpsilon)->Unit(benchmark::kMillisecond);

void BM_Render(benchmark::State& state) {
  const int n_d = static_cast<int>(state.range(0));
  const auto layout = default_layout(7, n_d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(dataset(), {n_d}, {}, earth_colormap(), layout));
  }
}
BENCHMARK(BM_Render)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SetMinus(benchmark::State& state) {
  const auto layout = default_layout(7, 500);
  const auto a = render(dataset(), {500}, {}, earth_colormap(), layout);
  const auto b = render(subsample(dataset(), 0.5, 2), {500}, {}, earth_colormap(), layout);
  for (auto _ : state) benchmark::DoNotOptimize(setminus_stats(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.pixels.size()));
}
BENCHMARK(BM_SetMinus)->Unit(benchmark::kMillisecond);

void BM_Mse(benchmark::State& state) {
  const auto layout = default_layout(7, 500);
  const auto a = render(dataset(), {500}, {}, earth_colormap(), layout);
  const auto b = render(subsample(dataset(), 0.5, 2), {500}, {}, earth_colormap(), layout);
  for (auto _ : state) benchmark::DoNotOptimize(mse(a, b));
}
BENCHMARK(BM_Mse)->Unit(benchmark::kMillisecond);

void BM_EncodePpm(benchmark::State& state) {
  const auto img = render(dataset(), {100}, {}, earth_colormap(), default_layout(7, 100));
  for (auto _ : state) benchmark::DoNotOptimize(encode_ppm(img));
}
BENCHMARK(BM_EncodePpm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
