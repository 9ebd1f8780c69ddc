#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "colortool/ops.hpp"
#include "colortool/plots.hpp"
#include "colortool/registry.hpp"

using namespace colortool;

namespace {

std::vector<Srgb> random_colors(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Srgb> out(n);
  for (auto& c : out) c = {u(rng), u(rng), u(rng)};
  return out;
}

void BM_SrgbToHcl(benchmark::State& state) {
  const auto colors = random_colors(1024);
  for (auto _ : state) {
    for (const auto& c : colors) benchmark::DoNotOptimize(srgb_to_hcl(c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(colors.size()));
}
BENCHMARK(BM_SrgbToHcl);

void BM_HclToHex(benchmark::State& state) {
  std::vector<Hcl> points;
  for (const auto& c : random_colors(1024)) points.push_back(srgb_to_hcl(c));
  for (auto _ : state) {
    for (const auto& p : points) benchmark::DoNotOptimize(format_hex(fixup_gamut(hcl_to_srgb(p))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(points.size()));
}
BENCHMARK(BM_HclToHex);

void BM_MaxChroma(benchmark::State& state) {
  double h = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_chroma(h, 50));
    h += 7.3;
  }
}
BENCHMARK(BM_MaxChroma);

void BM_SampleViridis(benchmark::State& state) {
  const PaletteSpec spec = Registry::builtin().get("viridis");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(spec, n));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleViridis)->Arg(7)->Arg(256)->Arg(10000);

void BM_SimulateDeutan(benchmark::State& state) {
  std::vector<HexCode> colors;
  for (const auto& c : random_colors(1024)) colors.push_back(format_hex(c));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_cvd(colors, CvdKind::deutan, 0.75));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(colors.size()));
}
BENCHMARK(BM_SimulateDeutan);

void BM_Swatchplot(benchmark::State& state) {
  const Palette p = sample(Registry::builtin().get("viridis"), 7);
  for (auto _ : state) benchmark::DoNotOptimize(swatchplot({{"", {{"a", p}, {"b", p}}}}));
}
BENCHMARK(BM_Swatchplot);

void BM_Hclplot(benchmark::State& state) {
  const PaletteSpec spec = Registry::builtin().get("viridis");
  for (auto _ : state) benchmark::DoNotOptimize(hclplot(spec, 7));
}
BENCHMARK(BM_Hclplot);

void BM_DemoHeatmap(benchmark::State& state) {
  const Palette p = sample(Registry::builtin().get("Blue-Yellow"), 7);
  const DemoGrid grid = make_demo_grid(1);
  for (auto _ : state) benchmark::DoNotOptimize(demoplot_heatmap(p, grid));
}
BENCHMARK(BM_DemoHeatmap);

}  // namespace

BENCHMARK_MAIN();
