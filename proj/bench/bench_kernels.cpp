// Serial reference kernels against their OpenMP counterparts.
#include "torustam/kernels.hpp"
#include "torustam/torus.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace torustam;

kernels::CongruenceSystem norm_one_system(std::int64_t d, std::int64_t p) {
  TorusSpec t = build_torus(Family::norm_one, FieldSpec::quadratic(d));
  kernels::CongruenceSystem sys;
  sys.nvars = t.model->nvars;
  sys.equations = t.model->equations;
  sys.unit = t.model->unit;
  sys.p = p;
  return sys;
}

void BM_CountBoxSerial(benchmark::State& st) {
  auto sys = norm_one_system(-1, 5);
  const std::int64_t m = 5 * 5 * 5 * 5;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_box_serial(sys, m));
}

void BM_CountBoxParallel(benchmark::State& st) {
  auto sys = norm_one_system(-1, 5);
  const std::int64_t m = 5 * 5 * 5 * 5;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_box_parallel(sys, m));
}

template <bool Parallel>
void BM_Lift(benchmark::State& st) {
  auto sys = norm_one_system(-23, 7);
  auto sols = kernels::solutions_box_serial(sys, 7);
  std::int64_t m = 7;
  for (int k = 0; k < 3; ++k, m *= 7) sols = kernels::lift_solutions_serial(sys, m, sols);
  for (auto _ : st) {
    auto out = Parallel ? kernels::lift_solutions_parallel(sys, m, sols) : kernels::lift_solutions_serial(sys, m, sols);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_CountBoxSerial);
BENCHMARK(BM_CountBoxParallel);
BENCHMARK(BM_Lift<false>)->Name("BM_LiftSerial");
BENCHMARK(BM_Lift<true>)->Name("BM_LiftParallel");
BENCHMARK_MAIN();
