#include <benchmark/benchmark.h>

#include "mpa/bvp.hpp"
#include "mpa/harvest_policy.hpp"
#include "mpa/switching.hpp"
#include "mpa/synthesis.hpp"
#include "mpa/verification.hpp"

namespace {

using namespace mpa;

void BM_AxisHitTime(benchmark::State& state) {
  const DerivedConstants dc = derive_constants(ScaledParams(4, 2, 1));
  double lambda0 = 0.0;
  for (auto _ : state) {
    lambda0 += dc.escape_lambda0 / 1024.0;
    if (lambda0 >= dc.escape_lambda0) lambda0 = dc.escape_lambda0 / 1024.0;
    benchmark::DoNotOptimize(axis_hit_time(lambda0, dc));
  }
}
BENCHMARK(BM_AxisHitTime);

void BM_EventOracle(benchmark::State& state) {
  const ScaledParams sp(4, 2, 1);
  const double lambda0 = 0.5 * derive_constants(sp).escape_lambda0;
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_adjoint_with_events(lambda0, sp));
}
BENCHMARK(BM_EventOracle);

void BM_ShootSteadyState(benchmark::State& state) {
  const HarvestPolicy policy = optimal_policy(ScaledParams(4, 2, 1)).policy;
  for (auto _ : state) benchmark::DoNotOptimize(shoot_steady_state(policy));
}
BENCHMARK(BM_ShootSteadyState);

void BM_OptimalPolicy(benchmark::State& state) {
  const ScaledParams sp(4, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_policy(sp));
}
BENCHMARK(BM_OptimalPolicy);

void BM_BruteForce(benchmark::State& state) {
  const ScaledParams sp(4, 2, 1);
  const int cells = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_bangbang(sp, cells));
}
BENCHMARK(BM_BruteForce)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PdeStepper(benchmark::State& state) {
  const HarvestPolicy policy = optimal_policy(ScaledParams(4, 2, 1)).policy;
  PdeOptions opts;
  opts.dx = policy.length() / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pde_time_stepper(policy, opts));
}
BENCHMARK(BM_PdeStepper)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
