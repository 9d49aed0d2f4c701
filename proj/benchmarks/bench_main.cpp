#include <benchmark/benchmark.h>

#include <random>

#include "lcurve/bruhat.hpp"
#include "lcurve/classify.hpp"
#include "lcurve/clifford_exact.hpp"
#include "lcurve/spin_chop.hpp"

using namespace lcurve;

static void BM_EnumerateD(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_D(m));
}
BENCHMARK(BM_EnumerateD)->DenseRange(3, 7);

static void BM_EnumerateTildeD(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tilde_D(m));
}
BENCHMARK(BM_EnumerateTildeD)->DenseRange(3, 6);

static void BM_CliffordMul(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto all = enumerate_tilde_D(m);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(all[i % all.size()] * all[(7 * i + 3) % all.size()]);
    ++i;
  }
}
BENCHMARK(BM_CliffordMul)->DenseRange(3, 6);

static void BM_Decompose(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd q = random_rotation(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(q));
}
BENCHMARK(BM_Decompose)->DenseRange(3, 8);

static void BM_ChopSpinDirect(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto z = canonical_lift(SignedPermutation::identity(m));
  for (auto _ : state) benchmark::DoNotOptimize(chop_spin_direct(z, kDefaultChopOffset, TridiagonalLog::ones(m)));
}
BENCHMARK(BM_ChopSpinDirect)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SpinClasses(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spin_classes(m));
}
BENCHMARK(BM_SpinClasses)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
