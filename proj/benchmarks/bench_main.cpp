#include <benchmark/benchmark.h>

#include <cmath>

#include "hartree/coulomb.hpp"
#include "hartree/dst.hpp"
#include "hartree/linops.hpp"
#include "hartree/solve.hpp"
#include "hartree/specfun.hpp"

using namespace hartree;

namespace {

RadialProfile smooth(const GridPtr& g) {
  return RadialProfile::sample(g, [](double r) { return std::exp(-0.5 * r * r) * (1.0 + r); });
}

void BM_NewtonPotential(benchmark::State& state) {
  const GridPtr g = make_grid(static_cast<std::size_t>(state.range(0)), 30.0);
  const RadialProfile rho = smooth(g);
  for (auto _ : state) benchmark::DoNotOptimize(newton_potential(rho));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NewtonPotential)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_SectorApply(benchmark::State& state) {
  const GridPtr g = make_grid(static_cast<std::size_t>(state.range(0)), 30.0);
  const RadialProfile q = smooth(g);
  const RadialProfile f = RadialProfile::sample(g, [](double r) { return std::cos(r); });
  for (auto _ : state) benchmark::DoNotOptimize(apply_w_sector(3, q, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SectorApply)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_SineMultiplier(benchmark::State& state) {
  const GridPtr g = make_grid(static_cast<std::size_t>(state.range(0)), 30.0);
  const RadialProfile f = smooth(g);
  const std::vector<double> sym = relativistic_symbol(*g, 1.0, 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(apply_sine_multiplier(f, sym));
}
BENCHMARK(BM_SineMultiplier)->RangeMultiplier(4)->Range(256, 16384);

void BM_SolveNormalized(benchmark::State& state) {
  const GridPtr g = make_grid(static_cast<std::size_t>(state.range(0)), 30.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_nr_normalized(g, 1e-10));
}
BENCHMARK(BM_SolveNormalized)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_SolveRelativistic(benchmark::State& state) {
  const GridPtr g = make_grid(static_cast<std::size_t>(state.range(0)), 60.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_rel(g, 1.0, 10.0, 1.0));
}
BENCHMARK(BM_SolveRelativistic)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Shooting(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(shoot_threshold());
}
BENCHMARK(BM_Shooting)->Unit(benchmark::kMillisecond);

void BM_SectorEigs(benchmark::State& state) {
  const GroundState gs = solve_nr_normalized(make_grid(static_cast<std::size_t>(state.range(0)), 30.0), 1e-10);
  for (auto _ : state) benchmark::DoNotOptimize(eigs(assemble_sector_nr(2, gs), 8));
}
BENCHMARK(BM_SectorEigs)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_HeatKernelSector(benchmark::State& state) {
  const GridPtr g = make_grid(static_cast<std::size_t>(state.range(0)), 20.0);
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel_sector(2, 0.5, g));
}
BENCHMARK(BM_HeatKernelSector)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
