// Parallel kernels against their serial twins.
//   ./bench_kernels --benchmark_filter=Associative

#include <benchmark/benchmark.h>

#include "kgraph/dynamics.hpp"
#include "kgraph/generators.hpp"

using namespace kgraph;

namespace {

/// bouquet:n^3 has n^3 tricoloured paths per vertex, so the associativity
/// sweep grows cubically in n.
Instance bouquet_cube(std::size_t n) {
  return product_of_1graphs({bouquet_graph(n), bouquet_graph(n), bouquet_graph(n)});
}

Instance mixed_product(std::size_t n) {
  return product_of_1graphs({complete_graph(n), cycle_graph(n + 1), bouquet_graph(2)});
}

void BM_CheckAssociative(benchmark::State& state) {
  const auto inst = bouquet_cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_associative(*inst.graph, inst.squares, true));
}

void BM_CheckAssociativeSerial(benchmark::State& state) {
  const auto inst = bouquet_cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_associative_serial(*inst.graph, inst.squares, true));
}

void BM_CheckAssociativeMixed(benchmark::State& state) {
  const auto inst = mixed_product(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_associative(*inst.graph, inst.squares, true));
}

void BM_CheckAssociativeMixedSerial(benchmark::State& state) {
  const auto inst = mixed_product(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_associative_serial(*inst.graph, inst.squares, true));
}

Instance free_product(std::size_t n) { return product_of_1graphs({bouquet_graph(n), bouquet_graph(n)}); }

void BM_CheckAperiodic(benchmark::State& state) {
  const auto l = free_product(static_cast<std::size_t>(state.range(0))).kgraph();
  const Degree pair{2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(check_aperiodic(l, pair, pair + pair));
}

void BM_CheckAperiodicSerial(benchmark::State& state) {
  const auto l = free_product(static_cast<std::size_t>(state.range(0))).kgraph();
  const Degree pair{2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(check_aperiodic_serial(l, pair, pair + pair));
}

// the periodic torus explores every path up to the bound for each pair
void BM_CheckAperiodicTorus(benchmark::State& state) {
  const auto l = free_product(1).kgraph();
  const auto b = static_cast<std::uint32_t>(state.range(0));
  const Degree pair{b, b};
  for (auto _ : state) benchmark::DoNotOptimize(check_aperiodic(l, pair, pair + pair));
}

void BM_CheckAperiodicTorusSerial(benchmark::State& state) {
  const auto l = free_product(1).kgraph();
  const auto b = static_cast<std::uint32_t>(state.range(0));
  const Degree pair{b, b};
  for (auto _ : state) benchmark::DoNotOptimize(check_aperiodic_serial(l, pair, pair + pair));
}

}  // namespace

BENCHMARK(BM_CheckAssociative)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAssociativeSerial)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAssociativeMixed)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAssociativeMixedSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAperiodic)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAperiodicSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAperiodicTorus)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAperiodicTorusSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
