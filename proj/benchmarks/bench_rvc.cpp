#include <benchmark/benchmark.h>

#include <random>

#include "rvc/check.hpp"
#include "rvc/reductions.hpp"
#include "rvc/solve.hpp"

namespace {

rvc::ColoredGraph random_colored_cycle(int n, int k, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(1, k);
  std::vector<rvc::Color> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = pick(rng);
  return rvc::ColoredGraph(rvc::cycle_graph(n), rvc::Coloring(k, std::move(colors)));
}

void BM_FindRainbowPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cg = random_colored_cycle(n, 16, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rvc::find_rainbow_path(cg, 1, n / 2 + 1));
}
BENCHMARK(BM_FindRainbowPath)->Arg(16)->Arg(32)->Arg(64);

void BM_CheckWholeGraph(benchmark::State& state) {
  const auto cg = random_colored_cycle(static_cast<int>(state.range(0)), 8, 11);
  for (auto _ : state) benchmark::DoNotOptimize(rvc::check_rainbow_vertex_connected(cg));
}
BENCHMARK(BM_CheckWholeGraph)->Arg(12)->Arg(24);

void BM_DecideTwoColorsOnPipelineGadget(benchmark::State& state) {
  const auto f = rvc::make_formula(2, {{1, 2}, {-1, -2}});
  const auto dp = rvc::sat_to_diffpairs(f);
  const auto sub = rvc::diffpairs_to_subset(dp.gadget, dp.pairing);
  const auto top = rvc::subset_to_rvc2(sub.gadget, sub.pairs);
  state.counters["vertices"] = top.gadget.order();
  for (auto _ : state) benchmark::DoNotOptimize(rvc::decide_rvc_le_k(top.gadget, 2));
}
BENCHMARK(BM_DecideTwoColorsOnPipelineGadget)->Unit(benchmark::kMillisecond);

void BM_RvcExactPath(benchmark::State& state) {
  const auto g = rvc::path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rvc::rvc_exact(g));
}
BENCHMARK(BM_RvcExactPath)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_RvcExactPetersen(benchmark::State& state) {
  const auto g = rvc::petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(rvc::rvc_exact(g));
}
BENCHMARK(BM_RvcExactPetersen);

}  // namespace

BENCHMARK_MAIN();
