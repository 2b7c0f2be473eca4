#include <benchmark/benchmark.h>

#include <vector>

#include "awr/eos.hpp"
#include "awr/exact_riemann.hpp"
#include "awr/upwind_scheme.hpp"

namespace {

const awr::EosParams kShockEos(1.0, 0.01, 1.0, 2.0, 0.25);
const awr::EosParams kFanEos(1.0, 0.01, 1.0, 2.0, 0.5);

void BM_StarDensity(benchmark::State& state) {
  const awr::State left{1.0, 5.0};
  for (auto _ : state) {
    double rho = awr::solve_star_density(kShockEos, left, 2.0);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_StarDensity);

void BM_SolveShockContact(benchmark::State& state) {
  for (auto _ : state) {
    awr::RiemannSolution sol = awr::solve(kShockEos, {1.0, 5.0}, {1.0, 2.0});
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveShockContact);

void BM_FanSample(benchmark::State& state) {
  const awr::RiemannSolution sol = awr::solve(kFanEos, {1.0, 5.0}, {2.0, 7.0});
  const double xi = 0.5 * (sol.fan_head + sol.fan_tail);
  for (auto _ : state) {
    awr::State s = awr::sample(kFanEos, sol, xi);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_FanSample);

void BM_SchemeStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const awr::Grid grid(-1.0, 1.0, n);
  awr::Field f{grid, std::vector<double>(n, 1.0), std::vector<double>(n), 0.0};
  for (int j = 0; j < n; ++j) f.v[j] = grid.center(j) < 0.0 ? 5.0 : 2.0;
  const double dt = awr::stable_dt(kShockEos, f, 0.5);
  for (auto _ : state) {
    awr::Field next = awr::step(kShockEos, f, dt);
    benchmark::DoNotOptimize(next);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SchemeStep)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
