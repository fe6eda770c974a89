#include <benchmark/benchmark.h>

#include "wreath/builders.hpp"
#include "wreath/enumeration.hpp"
#include "wreath/grouptable.hpp"
#include "wreath/oracle.hpp"

using namespace wreath;

static void BM_EnumerateSylow(benchmark::State& state) {
  auto const p = sylow_presentation(static_cast<std::uint64_t>(state.range(0)),
                                    static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(todd_coxeter(p).rows());
  }
}
BENCHMARK(BM_EnumerateSylow)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Args({2, 4});

static void BM_EnumerateCyclicWreath(benchmark::State& state) {
  auto const p = cyclic_wreath_presentation(static_cast<std::uint64_t>(state.range(0)),
                                            static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(todd_coxeter(p).rows());
  }
}
BENCHMARK(BM_EnumerateCyclicWreath)->Args({2, 4})->Args({3, 4})->Args({2, 6});

static void BM_PermClosure(benchmark::State& state) {
  auto const gens = sylow_perm_generators(static_cast<std::uint64_t>(state.range(0)),
                                          static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(perm_closure(gens, 1u << 20));
  }
}
BENCHMARK(BM_PermClosure)->Args({2, 3})->Args({3, 2})->Args({2, 4});

static void BM_ConcreteWreathTable(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const m = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_concrete_wreath(cyclic_group(n), cyclic_group(m)).order());
  }
}
BENCHMARK(BM_ConcreteWreathTable)->Args({2, 3})->Args({3, 4});

BENCHMARK_MAIN();
