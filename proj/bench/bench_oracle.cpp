// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "cremona/exactmat.hpp"
#include "cremona/oracle.hpp"

using namespace cremona;

namespace {

// x1^4, x1^3*x2, x2^3*x3: the inverse has entries up to 4.
const IntMatrix kHyperbolism3{{4, 3, 0}, {0, 1, 3}, {0, 0, 1}};

IntMatrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  return m;
}

IntMatrix random_diagonal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = entry(rng);
  return d;
}

void BM_BruteForceParallel(benchmark::State& state) {
  const long bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_solutions(kHyperbolism3, bound));
}

void BM_BruteForceSerial(benchmark::State& state) {
  const long bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::serial::brute_force_solutions(kHyperbolism3, bound));
}

void BM_PerturbationParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix g = random_square(n, 1), d = random_diagonal(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(det_diag_perturbation(g, d));
}

void BM_PerturbationSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix g = random_square(n, 1), d = random_diagonal(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::det_diag_perturbation(g, d));
}

}  // namespace

BENCHMARK(BM_BruteForceParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PerturbationParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PerturbationSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
