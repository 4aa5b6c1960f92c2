#include <benchmark/benchmark.h>

#include <random>

#include "kgc/cohomology.hpp"
#include "kgc/differential.hpp"
#include "kgc/tensor/graph_operator.hpp"
#include "kgc/tensor/random.hpp"
#include "kgc/tensor/trace.hpp"
#include "kgc/wheels.hpp"

using namespace kgc;

namespace {

void bm_wheel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wheel(k));
}
BENCHMARK(bm_wheel)->Arg(3)->Arg(5)->Arg(7);

void bm_coboundary_wheel(benchmark::State& state) {
  const GraphSum w = wheel(static_cast<int>(state.range(0)));
  const TypePolicy policy = TypePolicy::ascending();
  for (auto _ : state) benchmark::DoNotOptimize(coboundary(w, policy));
}
BENCHMARK(bm_coboundary_wheel)->Arg(3)->Arg(5);

void bm_enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(n, TypePolicy::ascending(), IsolatedMode::Include));
}
BENCHMARK(bm_enumerate)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void bm_cohomology_row(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_row(n, TypePolicy::ascending(), IsolatedMode::Exclude));
}
BENCHMARK(bm_cohomology_row)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void bm_rank_random(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-4, 4), coin(0, 3);
  SparseRationalMatrix m(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (coin(rng) == 0) m.set(i, j, Coefficient(entry(rng)) / (1 + coin(rng)));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank_random)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void bm_cochain_wheel3(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<PolyVector> args;
  for (int k = 0; k < 3; ++k) args.push_back(random_ascending_tensor(d, 2, -1, rng));
  const GraphSum r3 = wheel(3);
  for (auto _ : state) benchmark::DoNotOptimize(cochain_eval(r3, args));
}
BENCHMARK(bm_cochain_wheel3)->Arg(2)->Arg(3);

void bm_wheel_trace3(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<PolyVector> args;
  for (int k = 0; k < 3; ++k) args.push_back(random_ascending_tensor(d, 2, -1, rng));
  for (auto _ : state) benchmark::DoNotOptimize(wheel_trace_eval(1, args));
}
BENCHMARK(bm_wheel_trace3)->Arg(2)->Arg(3);

void bm_antisym_trace(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<RationalMatrix> as;
  for (int k = 0; k < state.range(0); ++k) as.push_back(random_integer_matrix(2, -3, 3, rng));
  for (auto _ : state) benchmark::DoNotOptimize(antisym_trace(as));
}
BENCHMARK(bm_antisym_trace)->Arg(3)->Arg(5)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
